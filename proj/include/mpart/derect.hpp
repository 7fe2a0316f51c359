#pragma once

#include "mpart/matrix.hpp"
#include "mpart/relation.hpp"

#include <optional>
#include <vector>

namespace mpart {

// Witness of a derectangularising sequence: the sequence of part sets and the
// non-rectangular composed relation.
struct DerectWitness {
    std::vector<PartSet> sequence;
    BinaryRelation offending;
};

// Re-checks a witness against M: distinct members purifying, all sizes >= 2,
// recomposed relation non-rectangular.
bool verify_witness(const PartitionMatrix& m, const DerectWitness& w);

// Exact decider: BFS closure over (last set, composed relation) states within
// each maximal M-purifying family of part sets of size >= 2.  Deterministic:
// families are processed in sorted order and the first witness found is
// returned.
std::optional<DerectWitness> has_derect_sequence(const PartitionMatrix& m);

// Sufficient tractability test over all subsets W of the 2-element part sets.
// A true result certifies that no derectangularising sequence exists.
bool doubletons_tractable(const PartitionMatrix& m);

// Impure 3x3 criterion: no principal 2x2 submatrix with three stars and one
// 0/1 means no derectangularising sequence.
bool impure3x3_no_derect(const PartitionMatrix& m);

} // namespace mpart
