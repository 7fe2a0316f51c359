#pragma once

#include "mpart/matrix.hpp"

#include <string>
#include <vector>

namespace mpart {

enum class Verdict { PolynomialTime, SharpPComplete, Unresolved };

enum class Method {
    None,
    PureHomomorphism, // pure matrix: three-star submatrix scan
    ImpureSmall,      // impure 2x2/3x3 criteria
    Doubletons,       // the subset-of-doubletons tractability test
    Interpolation,    // gadget interpolation with a qualifying access profile
    Exception,        // one of the six hand-resolved matrices
};

std::string verdict_name(Verdict v);
std::string method_name(Method m);

struct Classification {
    Verdict verdict = Verdict::Unresolved;
    Method method = Method::None;
    // Interpolation witness parameters:
    bool pi = false, tau = false;
    int ell = 0, s = 0;
    std::vector<std::string> hard_keys; // permutation-canonical keys of hard classes
    // Exception id:
    std::string exception_id;

    std::string describe() const;
};

// Pure matrices: hard iff some 2x2 submatrix (any row pair, any column pair)
// has exactly three stars.
bool pure_matrix_hard(const PartitionMatrix& m);

// Dichotomy for sizes 1-3.
Classification small_matrix_classification(const PartitionMatrix& m);

// M equivalent (up to relabelling) to (* *; * 0), resp. (* *; * 1).
bool is_IS_matrix(const PartitionMatrix& m);
bool is_Clique_matrix(const PartitionMatrix& m);

// Easy/hard for any proper submatrix arising in profiles (size 0-3; size 0 is
// trivially easy).
bool submatrix_hard(const PartitionMatrix& m);

} // namespace mpart
