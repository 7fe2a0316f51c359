#pragma once

#include "mpart/graph.hpp"
#include "mpart/interp.hpp"
#include "mpart/matrix.hpp"
#include "mpart/numbers.hpp"

#include <vector>

namespace mpart {

// Default assignment-space guard: refuse when |D|^n > 2^budget_bits.
constexpr int kDefaultBudgetBits = 30;

// Exact count of M-partitions of G by exhaustive assignment enumeration
// (depth-first with forward pruning; every valid assignment is visited).
Count brute_Z(const PartitionMatrix& m, const SimpleGraph& g,
              int budget_bits = kDefaultBudgetBits);

// Counts split by the exact image set of the assignment; index is the image
// bitmask.  Summing over all images recovers brute_Z.
std::vector<Count> brute_Z_by_image(const PartitionMatrix& m, const SimpleGraph& g,
                                    int budget_bits = kDefaultBudgetBits);

// M-partitions whose image is exactly S.
Count brute_Z_surjective(const PartitionMatrix& m, const SimpleGraph& g, PartSet s,
                         int budget_bits = kDefaultBudgetBits);

// Complete graph (tau=1) or edgeless graph (tau=0) on k vertices.
SimpleGraph build_gadget(bool tau, int k);

// pi=0: disjoint union of G and the gadget; pi=1: additionally all cross
// edges.  Gadget vertices are appended after G's.
SimpleGraph build_J(bool pi, bool tau, int k, const SimpleGraph& g);

// Z_M(J^{pi,tau}(k,G)) = sum_S Z^S_M(Gamma^tau_k) * Z_{M|E^pi(S)}(G).
bool verify_eq1(const PartitionMatrix& m, bool pi, bool tau, int k, const SimpleGraph& g,
                int budget_bits = kDefaultBudgetBits);

// Solves F*T = Zbar with Zbar brute-forced on the J graphs and compares every
// T entry against its direct profile sum.  Uses a raised enumeration budget:
// the J graphs carry up to binom(|D|+1,2) extra gadget vertices but prune
// hard.
bool verify_interpolation_roundtrip(const PartitionMatrix& m, bool pi, bool tau,
                                    const SimpleGraph& g);

// Checks brute_Z_surjective(M, Gamma^tau_k, S) against the closed form for
// every S subseteq D.
bool verify_gadget_formula(const PartitionMatrix& m, bool tau, int k,
                           int budget_bits = kDefaultBudgetBits);

// G plus a k-clique W joined completely to the V side.
SimpleGraph build_lemma7_Gk(const SimpleGraph& g, const Bipartition& bip, int k);

// The pinned construction: U, V, an independent k-set W, and two pin vertices;
// V becomes a clique, V-W complete, pins attached to V, W and (one of them) U,
// and the U-V edges complemented.
SimpleGraph build_hand3_Gk(const SimpleGraph& g, const Bipartition& bip, int k);

// Sets S whose U-side and V-side interface is complete in G.
Count bipartite_clique_count(const SimpleGraph& g, const Bipartition& bip);

// Z of the bipartite-cliques matrix equals twice the bipartite clique count,
// for connected bipartite G.
bool verify_lemma6(const SimpleGraph& g, int budget_bits = kDefaultBudgetBits);

struct Hand4Result {
    bool ok = false;
    Count t_plain, t_extra;   // direct profile sums for G and G plus a vertex
    Count p_plain, p_extra;   // the easy-term remainders
    Count solved_abd, solved_ad;
};

// Checks the two-equation system with coefficient rows (1,1) and (3,2) and
// recovers both hard submatrix counts from it.
Hand4Result verify_hand4_system(const SimpleGraph& g,
                                int budget_bits = kDefaultBudgetBits);

} // namespace mpart
