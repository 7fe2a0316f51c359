#include "mpart/interp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mpart {

Count stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    if (n == 0) return 1; // S(0,0)
    if (k == 0) return 0;
    // additive recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1)
    std::vector<Count> row(size_t(k) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; i++) {
        for (int j = std::min(i, k); j >= 1; j--) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Count falling_factorial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("falling_factorial: negative argument");
    Count out = 1;
    for (int i = 0; i < k && out != 0; i++) out *= (n - i);
    return out;
}

Count f_count(int ell, int s, int k) {
    if (ell >= s) throw std::invalid_argument("f_count: need ell < s");
    if (k < ell) return 0; // the falling factorial vanishes
    Count fac = 1;
    for (int i = 2; i <= s - ell; i++) fac *= i;
    return falling_factorial(k, ell) * fac * stirling2(k - ell, s - ell);
}

PartSet accessible_parts(const PartitionMatrix& m, bool pi, PartSet s) {
    Symbol want = pi ? Symbol::One : Symbol::Zero;
    PartSet out;
    for (int j = 0; j < m.size(); j++) {
        bool ok = true;
        for (int i : s.members())
            if (m.at(i, j) != want && m.at(i, j) != Symbol::Star) {
                ok = false;
                break;
            }
        if (ok) out.add(j);
    }
    return out;
}

int ell_of(const PartitionMatrix& m, PartSet s, bool tau) {
    Symbol bad = tau ? Symbol::Zero : Symbol::One;
    int count = 0;
    for (int i : s.members())
        if (m.at(i, i) == bad) count++;
    return count;
}

bool in_excluded(const PartitionMatrix& m, PartSet s, bool tau) {
    if (ell_of(m, s, tau) == s.size()) return true;
    Symbol bad = tau ? Symbol::Zero : Symbol::One;
    auto mem = s.members();
    for (size_t i = 0; i < mem.size(); i++)
        for (size_t j = i + 1; j < mem.size(); j++)
            if (m.at(mem[i], mem[j]) == bad) return true;
    return false;
}

Count surjective_gadget_count(const PartitionMatrix& m, PartSet s, bool tau, int k) {
    if (k <= m.size())
        throw std::invalid_argument("formula valid only for k > |D|");
    if (in_excluded(m, s, tau)) return 0;
    return f_count(ell_of(m, s, tau), s.size(), k);
}

int AccessProfile::hard_proper_classes() const {
    int n = 0;
    for (const auto& c : classes)
        if (!c.is_self && c.hard) n++;
    return n;
}

AccessProfile access_profile(const PartitionMatrix& m, bool pi, bool tau, int ell, int s) {
    if (!(0 <= ell && ell < s && s <= m.size()))
        throw std::invalid_argument("access_profile: need 0 <= ell < s <= |D|");
    AccessProfile p;
    p.pi = pi;
    p.tau = tau;
    p.ell = ell;
    p.s = s;
    PartSet full = full_set(m.size());
    std::map<std::string, AccessProfile::ClassEntry> classes;
    for (uint16_t bits = 0; bits <= full.bits; bits++) {
        PartSet set(bits);
        if (set.size() != s) continue;
        if (in_excluded(m, set, tau)) continue;
        if (ell_of(m, set, tau) != ell) continue;
        p.sets.push_back(set);
        PartSet image = accessible_parts(m, pi, set);
        std::string key;
        bool self = (image == full);
        bool hard = false;
        if (image.empty()) {
            key = "";
        } else {
            PartitionMatrix sub = principal_submatrix(m, image);
            key = key_to_string(permutation_key(sub));
            if (!self) hard = submatrix_hard(sub);
        }
        auto it = classes.find(key);
        if (it == classes.end()) {
            classes.emplace(key, AccessProfile::ClassEntry{key, image, 1, hard, self});
        } else {
            it->second.multiplicity++;
        }
    }
    for (auto& [key, entry] : classes) p.classes.push_back(entry);
    return p;
}

std::optional<Classification> interpolation_hardness_test(const PartitionMatrix& m) {
    for (int pi = 0; pi <= 1; pi++)
        for (int tau = 0; tau <= 1; tau++)
            for (int s = 1; s <= m.size(); s++)
                for (int ell = 0; ell < s; ell++) {
                    AccessProfile p = access_profile(m, pi, tau, ell, s);
                    std::vector<const AccessProfile::ClassEntry*> hard;
                    for (const auto& c : p.classes)
                        if (!c.is_self && c.hard) hard.push_back(&c);
                    bool qualifies = false;
                    if (hard.size() == 1) {
                        qualifies = true;
                    } else if (hard.size() == 2) {
                        PartitionMatrix a = principal_submatrix(m, hard[0]->image);
                        PartitionMatrix b = principal_submatrix(m, hard[1]->image);
                        qualifies = (is_IS_matrix(a) && is_Clique_matrix(b)) ||
                                    (is_Clique_matrix(a) && is_IS_matrix(b));
                    }
                    if (!qualifies) continue;
                    Classification c;
                    c.verdict = Verdict::SharpPComplete;
                    c.method = Method::Interpolation;
                    c.pi = pi;
                    c.tau = tau;
                    c.ell = ell;
                    c.s = s;
                    for (const auto* h : hard) c.hard_keys.push_back(h->key);
                    return c;
                }
    return std::nullopt;
}

namespace {

// Rank of a rational matrix by Gaussian elimination; records pivots.
int rational_rank(std::vector<std::vector<Rational>> a, std::vector<Rational>* pivots) {
    if (pivots) pivots->clear();
    size_t rows = a.size();
    if (rows == 0) return 0;
    size_t cols = a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; col++) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) piv++;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        if (pivots) pivots->push_back(a[rank][col]);
        for (size_t r = rank + 1; r < rows; r++) {
            if (a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[rank][col];
            for (size_t c = col; c < cols; c++) a[r][c] -= factor * a[rank][c];
        }
        rank++;
    }
    return int(rank);
}

std::vector<std::vector<Rational>> to_rational(const std::vector<std::vector<Count>>& f) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : f) {
        std::vector<Rational> r;
        for (const Count& v : row) r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

InterpolationSystem build_interpolation_system(int domain_size) {
    if (domain_size < 2 || domain_size > kMaxParts)
        throw std::invalid_argument("build_interpolation_system: domain size out of range");
    InterpolationSystem sys;
    sys.domain_size = domain_size;
    for (int s = 1; s <= domain_size; s++)
        for (int ell = 0; ell < s; ell++) sys.columns.emplace_back(ell, s);
    int delta = int(sys.columns.size());

    int k = domain_size + 1;
    int rank = 0;
    while (rank < delta) {
        std::vector<Count> row;
        for (auto [ell, s] : sys.columns) row.push_back(f_count(ell, s, k));
        sys.F.push_back(row);
        sys.k_values.push_back(k);
        int new_rank = rational_rank(to_rational(sys.F), &sys.pivots);
        if (new_rank > rank) {
            rank = new_rank;
        } else {
            sys.F.pop_back();
            sys.k_values.pop_back();
        }
        k++;
    }
    rational_rank(to_rational(sys.F), &sys.pivots);
    return sys;
}

std::vector<Rational> solve_T(const InterpolationSystem& sys, const std::vector<Count>& zbar) {
    size_t n = sys.F.size();
    if (zbar.size() != n) throw std::invalid_argument("solve_T: vector length mismatch");
    // augmented Gaussian elimination, exact rationals
    std::vector<std::vector<Rational>> a = to_rational(sys.F);
    for (size_t i = 0; i < n; i++) a[i].emplace_back(zbar[i]);
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) piv++;
        if (piv == n) throw std::runtime_error("solve_T: singular system");
        std::swap(a[col], a[piv]);
        for (size_t r = 0; r < n; r++) {
            if (r == col || a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (size_t c = col; c <= n; c++) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<Rational> t(n);
    for (size_t i = 0; i < n; i++) t[i] = a[i][n] / a[i][i];
    return t;
}

std::vector<Count> solve_T_integral(const InterpolationSystem& sys,
                                    const std::vector<Count>& zbar) {
    std::vector<Rational> t = solve_T(sys, zbar);
    std::vector<Count> out;
    for (const Rational& v : t) {
        if (boost::multiprecision::denominator(v) != 1 || v < 0)
            throw std::runtime_error("inconsistent counts: non-integral solution");
        out.push_back(Count(boost::multiprecision::numerator(v)));
    }
    return out;
}

} // namespace mpart
