#pragma once

#include "mpart/matrix.hpp"
#include "mpart/numbers.hpp"
#include "mpart/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mpart {

Count stirling2(int n, int k);
Count falling_factorial(int n, int k);

// Ordered partitions of [k] into s labelled parts, the first ell of them
// singletons, the rest nonempty.
Count f_count(int ell, int s, int k);

// E^pi(S) = {j | forall i in S: M_ij in {pi,*}}; E^pi(empty) = D.
PartSet accessible_parts(const PartitionMatrix& m, bool pi, PartSet s);

// Number of diagonal entries in S equal to the complement of tau.
int ell_of(const PartitionMatrix& m, PartSet s, bool tau);

// S is useless for tau-gadget surjective partitions.
bool in_excluded(const PartitionMatrix& m, PartSet s, bool tau);

// Closed form for Z^S_M(Gamma^tau_k); valid only for k > |D|.
Count surjective_gadget_count(const PartitionMatrix& m, PartSet s, bool tau, int k);

struct AccessProfile {
    bool pi = false, tau = false;
    int ell = 0, s = 0;
    std::vector<PartSet> sets; // the members S with these (ell, s) parameters

    struct ClassEntry {
        std::string key; // permutation-canonical key of the accessed submatrix
        PartSet image;   // one accessed part set E^pi(S)
        int multiplicity = 0;
        bool hard = false;
        bool is_self = false; // E^pi(S) = D, the matrix itself
    };
    std::vector<ClassEntry> classes;

    int hard_proper_classes() const;
};

// Groups the accessed submatrices M|_{E^pi(S)} into relabelling classes with
// multiplicities and easy/hard verdicts.
AccessProfile access_profile(const PartitionMatrix& m, bool pi, bool tau, int ell, int s);

// Scans profiles in fixed order (pi, tau, s ascending, ell ascending) and
// reports the first one with exactly one hard proper class, or exactly two
// that are the independent-set and clique matrices.
std::optional<Classification> interpolation_hardness_test(const PartitionMatrix& m);

struct InterpolationSystem {
    int domain_size = 0;
    std::vector<std::pair<int, int>> columns; // (ell, s) pairs, s asc then ell asc
    std::vector<int> k_values;
    std::vector<std::vector<Count>> F; // F[i][j] = f_{columns[j]}(k_values[i])
    std::vector<Rational> pivots;      // elimination pivots certifying full rank
};

// Greedy k selection from domain_size+1 upward with exact rational rank checks.
InterpolationSystem build_interpolation_system(int domain_size);

// Exact rational solve of F*T = zbar.
std::vector<Rational> solve_T(const InterpolationSystem& sys, const std::vector<Count>& zbar);

// As solve_T but asserts every entry is a non-negative integer.
std::vector<Count> solve_T_integral(const InterpolationSystem& sys,
                                    const std::vector<Count>& zbar);

} // namespace mpart
