#include "mpart/derect.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace mpart {

bool verify_witness(const PartitionMatrix& m, const DerectWitness& w) {
    if (w.sequence.size() < 2) return false;
    std::vector<PartSet> distinct = w.sequence;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (PartSet s : distinct)
        if (s.size() < 2) return false;
    if (!is_purifying(m, distinct)) return false;
    BinaryRelation r = star_relation(m, w.sequence[0], w.sequence[1]);
    for (size_t i = 2; i < w.sequence.size(); i++)
        r = compose(r, star_relation(m, w.sequence[i - 1], w.sequence[i]));
    return !is_rectangular(r) && r == w.offending;
}

namespace {

// Maximal cliques (Bron-Kerbosch with pivoting) over the pairwise-purifying
// graph; vertices carry self-loops by construction (only self-pure sets enter).
void bron_kerbosch(uint64_t r, uint64_t p, uint64_t x,
                   const std::vector<uint64_t>& adj, std::vector<uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    uint64_t px = p | x;
    int pivot = __builtin_ctzll(px);
    uint64_t best = p & ~adj[pivot];
    for (uint64_t cand = px; cand; cand &= cand - 1) {
        int v = __builtin_ctzll(cand);
        uint64_t c = p & ~adj[v];
        if (__builtin_popcountll(c) < __builtin_popcountll(best)) {
            pivot = v;
            best = c;
        }
    }
    for (uint64_t cand = best; cand; cand &= cand - 1) {
        int v = __builtin_ctzll(cand);
        uint64_t vb = uint64_t(1) << v;
        bron_kerbosch(r | vb, p & adj[v], x & adj[v], adj, out);
        p &= ~vb;
        x |= vb;
    }
}

struct BfsState {
    int last;       // index into the family
    uint64_t pairs; // composed relation bits
    friend bool operator==(const BfsState& a, const BfsState& b) {
        return a.last == b.last && a.pairs == b.pairs;
    }
};

struct BfsStateHash {
    size_t operator()(const BfsState& s) const {
        return std::hash<uint64_t>()(s.pairs * 31 + uint64_t(s.last));
    }
};

// BFS closure within one purifying family; returns a witness sequence if some
// composition is non-rectangular.
std::optional<DerectWitness> search_family(const PartitionMatrix& m,
                                           const std::vector<PartSet>& family) {
    int nf = int(family.size());
    std::vector<std::vector<BinaryRelation>> h(nf, std::vector<BinaryRelation>(nf));
    for (int i = 0; i < nf; i++)
        for (int j = 0; j < nf; j++) h[i][j] = star_relation(m, family[i], family[j]);

    struct Node {
        BfsState state;
        int first;  // family index of D_1
        int parent; // index into nodes, -1 for seeds
        int step;   // family index appended at this node
    };
    std::vector<Node> nodes;
    std::unordered_map<BfsState, int, BfsStateHash> seen;

    auto emit = [&](int node_idx) {
        std::vector<int> rev;
        for (int cur = node_idx; cur != -1; cur = nodes[cur].parent)
            rev.push_back(nodes[cur].step);
        DerectWitness w;
        w.sequence.push_back(family[nodes[node_idx].first]);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            w.sequence.push_back(family[*it]);
        BinaryRelation r;
        r.left = family[nodes[node_idx].first];
        r.right = family[nodes[node_idx].state.last];
        r.pairs = nodes[node_idx].state.pairs;
        w.offending = r;
        return w;
    };

    for (int i = 0; i < nf; i++)
        for (int j = 0; j < nf; j++) {
            BfsState st{j, h[i][j].pairs};
            if (seen.count(st)) continue;
            seen.emplace(st, int(nodes.size()));
            nodes.push_back({st, i, -1, j});
            if (!is_rectangular(h[i][j])) return emit(int(nodes.size()) - 1);
        }

    for (size_t head = 0; head < nodes.size(); head++) {
        Node cur = nodes[head]; // copy: nodes may reallocate
        BinaryRelation r;
        r.left = family[cur.first];
        r.right = family[cur.state.last];
        r.pairs = cur.state.pairs;
        for (int nxt = 0; nxt < nf; nxt++) {
            BinaryRelation r2 = compose(r, h[cur.state.last][nxt]);
            BfsState st{nxt, r2.pairs};
            if (seen.count(st)) continue;
            seen.emplace(st, int(nodes.size()));
            nodes.push_back({st, cur.first, int(head), nxt});
            if (!is_rectangular(r2)) return emit(int(nodes.size()) - 1);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<DerectWitness> has_derect_sequence(const PartitionMatrix& m) {
    if (m.size() > kMaxParts)
        throw std::invalid_argument("domain too large for exact decider");
    if (m.size() < 2) return std::nullopt;

    // Part sets of size >= 2 whose principal block is pure.
    std::vector<PartSet> eligible;
    for (uint16_t bits = 0; bits < (1u << m.size()); bits++) {
        PartSet s(bits);
        if (s.size() < 2) continue;
        if (restrict_block(m, s, s).is_pure()) eligible.push_back(s);
    }
    if (eligible.empty()) return std::nullopt;
    int ne = int(eligible.size());

    std::vector<uint64_t> adj(ne, 0);
    for (int i = 0; i < ne; i++)
        for (int j = i + 1; j < ne; j++)
            if (restrict_block(m, eligible[i], eligible[j]).is_pure()) {
                adj[i] |= uint64_t(1) << j;
                adj[j] |= uint64_t(1) << i;
            }

    std::vector<uint64_t> cliques;
    bron_kerbosch(0, (uint64_t(1) << ne) - 1, 0, adj, cliques);
    std::sort(cliques.begin(), cliques.end());

    for (uint64_t clique : cliques) {
        std::vector<PartSet> family;
        for (uint64_t c = clique; c; c &= c - 1)
            family.push_back(eligible[__builtin_ctzll(c)]);
        if (auto w = search_family(m, family)) return w;
    }
    return std::nullopt;
}

namespace {

std::vector<PartSet> doubletons(int size) {
    std::vector<PartSet> out;
    for (int i = 0; i < size; i++)
        for (int j = i + 1; j < size; j++) {
            PartSet s;
            s.add(i);
            s.add(j);
            out.push_back(s);
        }
    return out;
}

} // namespace

bool doubletons_tractable(const PartitionMatrix& m) {
    std::vector<PartSet> pairs = doubletons(m.size());
    int np = int(pairs.size());
    for (uint32_t wbits = 0; wbits < (1u << np); wbits++) {
        std::vector<PartSet> w;
        PartSet uni;
        for (int i = 0; i < np; i++)
            if ((wbits >> i) & 1) {
                w.push_back(pairs[i]);
                uni.bits |= pairs[i].bits;
            }
        if (w.empty()) continue; // union is empty: property 3 holds vacuously

        bool prop1 = false;
        for (PartSet s : w) {
            for (PartSet t : w)
                if (!restrict_block(m, s, t).is_pure()) {
                    prop1 = true;
                    break;
                }
            if (prop1) break;
        }
        if (prop1) continue;

        if (w.size() == 2 && (w[0].bits & w[1].bits) == 0 &&
            is_star_rectangular(m, w[0], w[1]))
            continue; // the cross block is pure here, property 1 failed

        PartitionMatrix sub = principal_submatrix(m, uni);
        if (is_pure(sub) && !has_derect_sequence(sub)) continue;

        return false;
    }
    return true;
}

bool impure3x3_no_derect(const PartitionMatrix& m) {
    if (m.size() != 3) throw std::invalid_argument("impure3x3_no_derect: size must be 3");
    if (is_pure(m)) throw std::invalid_argument("impure3x3_no_derect: matrix is pure");
    for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++) {
            // principal block with three stars is equivalent to (**;*0) or (**;*1)
            if (m.at(i, j) != Symbol::Star) continue;
            bool di = m.at(i, i) == Symbol::Star;
            bool dj = m.at(j, j) == Symbol::Star;
            if (di != dj) return false;
        }
    return true;
}

} // namespace mpart
