#include "mpart/exceptions.hpp"

#include <stdexcept>

namespace mpart {

const std::vector<ExceptionEntry>& exception_matrices() {
    static const std::vector<ExceptionEntry> table = {
        // Z is twice the number of bipartite cliques of a connected bipartite input.
        {"lemma6", parse_matrix("00**/001*/*100/**00")},
        // The three matrices reduced from counting independent sets in
        // bipartite graphs via a joined k-clique.
        {"lemma7-M1", parse_matrix("00**/000*/*011/**11")},
        {"lemma7-M2", parse_matrix("00**/000*/*01*/***1")},
        {"lemma7-M3", parse_matrix("0***/*00*/*01*/***1")},
        // The pinned construction with two extra vertices and an independent set.
        {"hand-iii", parse_matrix("00**/001*/*11*/***1")},
        // Settled by the two-equation linear system over two hard submatrices.
        {"hand-iv", parse_matrix("0***/**0*/*0*1/**1*")},
    };
    return table;
}

PartitionMatrix exception_matrix(const std::string& id) {
    for (const auto& e : exception_matrices())
        if (e.id == id) return e.matrix;
    throw std::invalid_argument("unknown exception id: " + id);
}

} // namespace mpart
