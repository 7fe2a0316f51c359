#include "mpart/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mpart {

char symbol_char(Symbol s) {
    switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    case Symbol::Star: return '*';
    }
    return '?';
}

Symbol symbol_from_char(char c) {
    switch (c) {
    case '0': return Symbol::Zero;
    case '1': return Symbol::One;
    case '*': return Symbol::Star;
    }
    throw std::invalid_argument(std::string("bad matrix entry '") + c + "'");
}

std::vector<int> PartSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxParts; i++)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string PartSet::to_string() const {
    std::string out;
    for (int i = 0; i < kMaxParts; i++)
        if (contains(i)) out += char('a' + i);
    return out.empty() ? "-" : out;
}

PartSet full_set(int size) { return PartSet(uint16_t((1u << size) - 1)); }

PartSet parse_part_set(const std::string& text, int size) {
    PartSet s;
    for (char c : text) {
        int i;
        if (c >= 'a' && c < 'a' + size) i = c - 'a';
        else if (c >= '0' && c < '0' + size) i = c - '0';
        else throw std::invalid_argument(std::string("bad part '") + c + "'");
        s.add(i);
    }
    return s;
}

bool SymbolBlock::is_pure() const {
    bool has0 = false, has1 = false;
    for (Symbol s : e) {
        has0 |= (s == Symbol::Zero);
        has1 |= (s == Symbol::One);
    }
    return !has0 || !has1;
}

PartitionMatrix::PartitionMatrix(int size, Symbol fill) : size_(size) {
    if (size < 0 || size > kMaxParts)
        throw std::invalid_argument("matrix size out of range");
    entries_.assign(size_t(size) * size, fill);
}

SymbolBlock restrict_block(const PartitionMatrix& m, PartSet s, PartSet t) {
    if (s.empty() || t.empty()) throw std::invalid_argument("empty restriction");
    auto rows = s.members();
    auto cols = t.members();
    SymbolBlock b;
    b.rows = int(rows.size());
    b.cols = int(cols.size());
    b.e.reserve(rows.size() * cols.size());
    for (int i : rows)
        for (int j : cols) b.e.push_back(m.at(i, j));
    return b;
}

PartitionMatrix principal_submatrix(const PartitionMatrix& m, PartSet s) {
    auto idx = s.members();
    PartitionMatrix out(int(idx.size()));
    for (size_t i = 0; i < idx.size(); i++)
        for (size_t j = 0; j < idx.size(); j++)
            out.set(int(i), int(j), m.at(idx[i], idx[j]));
    return out;
}

PartitionMatrix complement(const PartitionMatrix& m) {
    PartitionMatrix out(m.size());
    for (int i = 0; i < m.size(); i++)
        for (int j = 0; j < m.size(); j++) {
            Symbol s = m.at(i, j);
            if (s == Symbol::Zero) s = Symbol::One;
            else if (s == Symbol::One) s = Symbol::Zero;
            out.set(i, j, s);
        }
    return out;
}

PartitionMatrix permute(const PartitionMatrix& m, const std::vector<int>& rho) {
    int n = m.size();
    if (int(rho.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : rho) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    // out[rho(i)][rho(j)] = m[i][j]
    PartitionMatrix out(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) out.set(rho[i], rho[j], m.at(i, j));
    return out;
}

CanonicalKey w_word(const PartitionMatrix& m) {
    CanonicalKey w;
    int n = m.size();
    w.reserve(size_t(n) * (n + 1) / 2);
    for (int i = 0; i < n; i++) w.push_back(m.at(i, i));
    for (int off = 1; off < n; off++)
        for (int i = 0; i + off < n; i++) w.push_back(m.at(i, i + off));
    return w;
}

PartitionMatrix matrix_from_w_word(const CanonicalKey& key, int size) {
    if (int(key.size()) != size * (size + 1) / 2)
        throw std::invalid_argument("w-word length mismatch");
    PartitionMatrix m(size);
    size_t p = 0;
    for (int i = 0; i < size; i++) m.set(i, i, key[p++]);
    for (int off = 1; off < size; off++)
        for (int i = 0; i + off < size; i++) m.set(i, i + off, key[p++]);
    return m;
}

std::string key_to_string(const CanonicalKey& key) {
    std::string out;
    for (Symbol s : key) out += symbol_char(s);
    return out;
}

namespace {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> rho(n);
    std::iota(rho.begin(), rho.end(), 0);
    do {
        fn(rho);
    } while (std::next_permutation(rho.begin(), rho.end()));
}

CanonicalKey min_word_over(const PartitionMatrix& m, bool with_complement,
                           int* stabilizer = nullptr) {
    CanonicalKey self = w_word(m);
    CanonicalKey best = self;
    int stab = 0;
    auto consider = [&](const PartitionMatrix& v, const std::vector<int>& rho) {
        CanonicalKey w = w_word(permute(v, rho));
        if (w == self) stab++;
        if (w < best) best = w;
    };
    PartitionMatrix comp = complement(m);
    for_each_permutation(m.size(), [&](const std::vector<int>& rho) {
        consider(m, rho);
        if (with_complement) consider(comp, rho);
    });
    if (stabilizer) *stabilizer = stab;
    return best;
}

} // namespace

CanonicalKey canonical_key(const PartitionMatrix& m) {
    return min_word_over(m, true);
}

CanonicalKey permutation_key(const PartitionMatrix& m) {
    return min_word_over(m, false);
}

int orbit_size(const PartitionMatrix& m) {
    int stab = 0;
    min_word_over(m, true, &stab);
    int n = m.size();
    int group = 2;
    for (int i = 2; i <= n; i++) group *= i;
    return group / stab;
}

bool is_pure(const PartitionMatrix& m) {
    if (m.size() == 0) return true;
    PartSet d = full_set(m.size());
    return restrict_block(m, d, d).is_pure();
}

namespace {

PartitionMatrix parse_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '/') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    rows.push_back(cur);
    int n = int(rows.size());
    if (n < 1 || n > kMaxParts) throw std::invalid_argument("matrix size out of range");
    PartitionMatrix m(n);
    for (int i = 0; i < n; i++) {
        if (int(rows[i].size()) != n)
            throw std::invalid_argument("row " + std::to_string(i) + " has length " +
                                        std::to_string(rows[i].size()) + ", expected " +
                                        std::to_string(n));
        for (int j = 0; j < n; j++) {
            Symbol s = symbol_from_char(rows[i][j]);
            if (j < i && m.at(i, j) != s)
                throw std::invalid_argument(
                    "asymmetric input: entries (" + std::to_string(j) + "," +
                    std::to_string(i) + ") and (" + std::to_string(i) + "," +
                    std::to_string(j) + ") differ");
            if (j >= i) m.set(i, j, s);
        }
    }
    return m;
}

} // namespace

PartitionMatrix parse_matrix(const std::string& text) {
    if (text.find('/') != std::string::npos) return parse_rows(text);
    if (text.size() == 10) {
        CanonicalKey key;
        for (char c : text) key.push_back(symbol_from_char(c));
        return matrix_from_w_word(key, 4);
    }
    throw std::invalid_argument(
        "matrix must be a 10-character w-order string (4x4) or '/'-separated rows");
}

std::string format_matrix(const PartitionMatrix& m) {
    if (m.size() == 4) return key_to_string(w_word(m));
    return format_matrix_rows(m);
}

std::string format_matrix_rows(const PartitionMatrix& m) {
    std::string out;
    for (int i = 0; i < m.size(); i++) {
        if (i) out += '/';
        for (int j = 0; j < m.size(); j++) out += symbol_char(m.at(i, j));
    }
    return out;
}

} // namespace mpart
