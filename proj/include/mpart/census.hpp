#pragma once

#include "mpart/derect.hpp"
#include "mpart/matrix.hpp"
#include "mpart/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mpart {

// One canonical 4x4 matrix together with everything the pipeline learned
// about it.
struct CensusEntry {
    std::string key;  // canonical w-word, e.g. "001*01111*"
    PartitionMatrix matrix{4};
    Classification cls;
    std::optional<DerectWitness> witness;  // present iff a sequence exists
    long orbit_size = 0;
};

// Canonical keys of the matrices whose hardness needs a bespoke argument
// rather than the generic interpolation step.
struct ExceptionRegistry {
    // id -> canonical key, in fixed table order
    std::vector<std::pair<std::string, std::string>> entries;

    bool contains(const std::string& key) const;
    std::string id_for(const std::string& key) const;  // "" if absent
};

ExceptionRegistry build_exception_registry();

// All canonical representatives of size `size` (word == canonical key),
// in lexicographic w-word order.
std::vector<PartitionMatrix> enumerate_canonical(int size);

struct CensusOptions {
    bool use_exceptions = true;  // consult the registry for unresolved hard cases
    int jobs = 1;
};

// Run the full classification pipeline on one matrix.
Classification classify(const PartitionMatrix& m, const ExceptionRegistry& reg,
                        bool use_exceptions = true);

struct CensusResult {
    std::vector<CensusEntry> entries;  // canonical order
    long total_matrices = 0;           // sum of orbit sizes
    long n_poly = 0;
    long n_hard = 0;
    long n_unresolved = 0;
    long n_exception = 0;
};

CensusResult run_census(const CensusOptions& opts = {});

// Independent consistency check: for every entry, the tractability verdict
// must agree with the exact decider for derectangularising sequences, and
// every registry matrix must carry the expected two-set witness.
struct CrossCheckResult {
    bool ok = true;
    std::vector<std::string> failures;  // human-readable, one per problem
};

CrossCheckResult cross_check_dichotomy(const CensusResult& census);

// Report emission.
std::string census_to_json(const CensusResult& census);
std::string census_to_csv(const CensusResult& census);
std::string census_summary(const CensusResult& census);

}  // namespace mpart
