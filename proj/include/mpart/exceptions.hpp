#pragma once

#include "mpart/matrix.hpp"

#include <string>
#include <vector>

namespace mpart {

// The six 4x4 matrices the census cannot resolve, each with the hand-proof
// route that settles it as #P-complete.
struct ExceptionEntry {
    std::string id;
    PartitionMatrix matrix;
};

const std::vector<ExceptionEntry>& exception_matrices();
PartitionMatrix exception_matrix(const std::string& id);

} // namespace mpart
