#include "mpart/brute.hpp"

#include "mpart/exceptions.hpp"
#include "mpart/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mpart {

namespace {

constexpr int kMaxVertices = 31;

void check_budget(int d, int n, int budget_bits) {
    if (d <= 1) return;
    if (double(n) * std::log2(double(d)) > double(budget_bits))
        throw std::runtime_error("instance too large for oracle");
}

// Exhaustive assignment enumeration with forward pruning: assigning a vertex
// intersects the allowed-part masks of all later vertices.
struct Enumerator {
    const SimpleGraph& g;
    int d;
    std::array<uint16_t, kMaxParts> allow_edge{};
    std::array<uint16_t, kMaxParts> allow_non{};
    std::vector<uint64_t>* by_image = nullptr; // indexed by image mask
    uint64_t total = 0;

    Enumerator(const PartitionMatrix& m, const SimpleGraph& graph) : g(graph), d(m.size()) {
        for (int i = 0; i < d; i++)
            for (int j = 0; j < d; j++) {
                Symbol s = m.at(i, j);
                if (s == Symbol::One || s == Symbol::Star)
                    allow_edge[i] |= uint16_t(1u << j);
                if (s == Symbol::Zero || s == Symbol::Star)
                    allow_non[i] |= uint16_t(1u << j);
            }
    }

    void run(uint16_t initial_mask) {
        if (g.n == 0) {
            if (by_image) (*by_image)[0]++;
            total++;
            return;
        }
        std::array<uint16_t, kMaxVertices> masks;
        masks.fill(initial_mask);
        dfs(0, masks, 0);
    }

    void dfs(int v, const std::array<uint16_t, kMaxVertices>& masks, uint16_t used) {
        for (uint16_t cand = masks[v]; cand; cand &= cand - 1) {
            int part = __builtin_ctz(cand);
            uint16_t now_used = used | uint16_t(1u << part);
            if (v + 1 == g.n) {
                if (by_image) (*by_image)[now_used]++;
                total++;
                continue;
            }
            std::array<uint16_t, kMaxVertices> next = masks;
            bool dead = false;
            for (int w = v + 1; w < g.n; w++) {
                next[w] &= g.adjacent(v, w) ? allow_edge[part] : allow_non[part];
                if (next[w] == 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead) dfs(v + 1, next, now_used);
        }
    }
};

} // namespace

Count brute_Z(const PartitionMatrix& m, const SimpleGraph& g, int budget_bits) {
    check_budget(m.size(), g.n, budget_bits);
    if (m.size() == 0) return g.n == 0 ? 1 : 0;
    Enumerator e(m, g);
    e.run(full_set(m.size()).bits);
    return e.total;
}

std::vector<Count> brute_Z_by_image(const PartitionMatrix& m, const SimpleGraph& g,
                                    int budget_bits) {
    check_budget(m.size(), g.n, budget_bits);
    std::vector<uint64_t> raw(size_t(1) << m.size(), 0);
    if (m.size() == 0) {
        if (g.n == 0) raw[0] = 1;
    } else {
        Enumerator e(m, g);
        e.by_image = &raw;
        e.run(full_set(m.size()).bits);
    }
    return std::vector<Count>(raw.begin(), raw.end());
}

Count brute_Z_surjective(const PartitionMatrix& m, const SimpleGraph& g, PartSet s,
                         int budget_bits) {
    check_budget(m.size(), g.n, budget_bits);
    if (m.size() == 0 || s.empty()) return (g.n == 0 && s.empty()) ? 1 : 0;
    std::vector<uint64_t> raw(size_t(1) << m.size(), 0);
    Enumerator e(m, g);
    e.by_image = &raw;
    e.run(s.bits); // restricting to parts in S loses nothing for image == S
    return raw[s.bits];
}

SimpleGraph build_gadget(bool tau, int k) { return tau ? complete_graph(k) : empty_graph(k); }

SimpleGraph build_J(bool pi, bool tau, int k, const SimpleGraph& g) {
    SimpleGraph j(g.n + k);
    for (auto [u, v] : g.edges) j.add_edge(u, v);
    if (tau)
        for (int a = 0; a < k; a++)
            for (int b = a + 1; b < k; b++) j.add_edge(g.n + a, g.n + b);
    if (pi)
        for (int v = 0; v < g.n; v++)
            for (int a = 0; a < k; a++) j.add_edge(v, g.n + a);
    return j;
}

namespace {

// Z_{M|E}(G) with the empty-submatrix convention.
Count restricted_Z(const PartitionMatrix& m, PartSet image, const SimpleGraph& g,
                   int budget_bits) {
    if (image.empty()) return g.n == 0 ? 1 : 0;
    return brute_Z(principal_submatrix(m, image), g, budget_bits);
}

} // namespace

bool verify_eq1(const PartitionMatrix& m, bool pi, bool tau, int k, const SimpleGraph& g,
                int budget_bits) {
    Count lhs = brute_Z(m, build_J(pi, tau, k, g), budget_bits);
    std::vector<Count> gadget = brute_Z_by_image(m, build_gadget(tau, k), budget_bits);
    Count rhs = 0;
    for (uint16_t bits = 0; bits < (1u << m.size()); bits++) {
        if (gadget[bits] == 0) continue;
        PartSet s(bits);
        rhs += gadget[bits] * restricted_Z(m, accessible_parts(m, pi, s), g, budget_bits);
    }
    return lhs == rhs;
}

bool verify_interpolation_roundtrip(const PartitionMatrix& m, bool pi, bool tau,
                                    const SimpleGraph& g) {
    const int budget_bits = 40; // J graphs: |G| plus up to ~14 gadget vertices
    InterpolationSystem sys = build_interpolation_system(m.size());
    std::vector<Count> zbar;
    for (int k : sys.k_values)
        zbar.push_back(brute_Z(m, build_J(pi, tau, k, g), budget_bits));
    std::vector<Rational> t = solve_T(sys, zbar);
    for (size_t j = 0; j < sys.columns.size(); j++) {
        auto [ell, s] = sys.columns[j];
        Count direct = 0;
        for (uint16_t bits = 0; bits < (1u << m.size()); bits++) {
            PartSet set(bits);
            if (set.size() != s || in_excluded(m, set, tau) || ell_of(m, set, tau) != ell)
                continue;
            direct += restricted_Z(m, accessible_parts(m, pi, set), g, budget_bits);
        }
        if (t[j] != Rational(direct)) return false;
    }
    return true;
}

bool verify_gadget_formula(const PartitionMatrix& m, bool tau, int k, int budget_bits) {
    const SimpleGraph gadget = build_gadget(tau, k);
    const std::vector<Count> raw = brute_Z_by_image(m, gadget, budget_bits);
    for (uint16_t bits = 0; bits < (uint16_t(1) << m.size()); bits++) {
        PartSet s(bits);
        if (raw[bits] != surjective_gadget_count(m, s, tau, k)) return false;
    }
    return true;
}

SimpleGraph build_lemma7_Gk(const SimpleGraph& g, const Bipartition& bip, int k) {
    if (!is_bipartite_for(g, bip))
        throw std::invalid_argument("input is not bipartite for the given bipartition");
    SimpleGraph out(g.n + k);
    for (auto [u, v] : g.edges) out.add_edge(u, v);
    for (int a = 0; a < k; a++) {
        for (int b = a + 1; b < k; b++) out.add_edge(g.n + a, g.n + b);
        for (int v = 0; v < g.n; v++)
            if (!bip.in_u(v)) out.add_edge(v, g.n + a);
    }
    return out;
}

SimpleGraph build_hand3_Gk(const SimpleGraph& g, const Bipartition& bip, int k) {
    if (!is_bipartite_for(g, bip))
        throw std::invalid_argument("input is not bipartite for the given bipartition");
    int xc = g.n + k, xd = g.n + k + 1;
    SimpleGraph out(g.n + k + 2);
    std::vector<int> us, vs;
    for (int v = 0; v < g.n; v++) (bip.in_u(v) ? us : vs).push_back(v);
    for (int v : vs) {
        out.add_edge(v, xc);
        out.add_edge(v, xd);
    }
    for (int a = 0; a < k; a++) {
        out.add_edge(g.n + a, xc);
        out.add_edge(g.n + a, xd);
        for (int v : vs) out.add_edge(v, g.n + a);
    }
    for (size_t i = 0; i < vs.size(); i++)
        for (size_t j = i + 1; j < vs.size(); j++) out.add_edge(vs[i], vs[j]);
    for (int u : us) out.add_edge(u, xc);
    for (int u : us)
        for (int v : vs)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Count bipartite_clique_count(const SimpleGraph& g, const Bipartition& bip) {
    if (g.n > 20) throw std::runtime_error("instance too large for oracle");
    Count count = 0;
    for (uint32_t s = 0; s < (1u << g.n); s++) {
        bool ok = true;
        for (int u = 0; u < g.n && ok; u++) {
            if (!((s >> u) & 1) || !bip.in_u(u)) continue;
            for (int v = 0; v < g.n; v++)
                if (((s >> v) & 1) && !bip.in_u(v) && !g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
        }
        if (ok) count++;
    }
    return count;
}

bool verify_lemma6(const SimpleGraph& g, int budget_bits) {
    Bipartition bip = bipartition_of_connected(g);
    Count z = brute_Z(exception_matrix("lemma6"), g, budget_bits);
    return z == 2 * bipartite_clique_count(g, bip);
}

Hand4Result verify_hand4_system(const SimpleGraph& g, int budget_bits) {
    PartitionMatrix m = exception_matrix("hand-iv");
    const bool pi = true, tau = false;
    const int ell = 0, s = 2;
    PartSet abd = parse_part_set("abd", 4);
    PartSet ad = parse_part_set("ad", 4);
    Count z_abd = brute_Z(principal_submatrix(m, abd), g, budget_bits);
    Count z_ad = brute_Z(principal_submatrix(m, ad), g, budget_bits);
    SimpleGraph gx = g.plus_isolated_vertex();

    Hand4Result r;

    // First equation: the plain profile sum splits into easy terms plus one
    // copy each of the two hard submatrix counts.
    int n_abd = 0, n_ad = 0;
    AccessProfile prof = access_profile(m, pi, tau, ell, s);
    for (PartSet set : prof.sets) {
        PartSet image = accessible_parts(m, pi, set);
        Count z = restricted_Z(m, image, g, budget_bits);
        r.t_plain += z;
        if (image.empty() || !submatrix_hard(principal_submatrix(m, image))) {
            r.p_plain += z;
        } else if (image == abd) {
            n_abd++;
        } else if (image == ad) {
            n_ad++;
        } else {
            return r; // unexpected hard class
        }
    }
    if (n_abd != 1 || n_ad != 1) return r;
    if (r.t_plain != r.p_plain + z_abd + z_ad) return r;

    // Second equation: split by the part of the extra isolated vertex; the
    // hard submatrix counts appear with multiplicities 3 and 2.
    n_abd = n_ad = 0;
    for (PartSet set : prof.sets) {
        PartSet image = accessible_parts(m, pi, set);
        r.t_extra += restricted_Z(m, image, gx, budget_bits);
        for (int i : image.members()) {
            PartSet pin;
            pin.add(i);
            PartSet p(uint16_t(accessible_parts(m, false, pin).bits & image.bits));
            Count z = restricted_Z(m, p, g, budget_bits);
            if (p.empty() || !submatrix_hard(principal_submatrix(m, p))) {
                r.p_extra += z;
            } else if (p == abd) {
                n_abd++;
            } else if (p == ad) {
                n_ad++;
            } else {
                return r;
            }
        }
    }
    if (n_abd != 3 || n_ad != 2) return r;
    if (r.t_extra != r.p_extra + 3 * z_abd + 2 * z_ad) return r;

    // Solve rows (1,1) and (3,2); determinant -1.
    Count rhs1 = r.t_plain - r.p_plain;
    Count rhs2 = r.t_extra - r.p_extra;
    r.solved_ad = 3 * rhs1 - rhs2;
    r.solved_abd = rhs2 - 2 * rhs1;
    r.ok = (r.solved_abd == z_abd && r.solved_ad == z_ad);
    return r;
}

} // namespace mpart
