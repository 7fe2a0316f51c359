#pragma once

#include "mpart/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mpart {

// Binary relation between two part sets, stored densely over the ambient
// kMaxParts x kMaxParts grid.
struct BinaryRelation {
    PartSet left;
    PartSet right;
    uint64_t pairs = 0; // bit (i*kMaxParts + j) set iff (i,j) in the relation

    static int bit(int i, int j) { return i * kMaxParts + j; }
    bool has(int i, int j) const { return (pairs >> bit(i, j)) & 1; }
    void add(int i, int j) { pairs |= uint64_t(1) << bit(i, j); }

    BinaryRelation transposed() const;
    std::string to_string() const;

    friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
        return a.left == b.left && a.right == b.right && a.pairs == b.pairs;
    }
};

// Star positions of M restricted to X x Y.
BinaryRelation star_relation(const PartitionMatrix& m, PartSet x, PartSet y);

// {(i,k) | exists j: (i,j) in r and (j,k) in s}; requires r.right == s.left.
BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& s);

// (i,i'),(i,j'),(j,i') in R  implies  (j,j') in R, over all quadruples.
bool is_rectangular(const BinaryRelation& r);

bool is_star_rectangular(const PartitionMatrix& m, PartSet x, PartSet y);

// Every ordered pair (X,Y) from the family gives a pure block.
bool is_purifying(const PartitionMatrix& m, const std::vector<PartSet>& family);

} // namespace mpart
