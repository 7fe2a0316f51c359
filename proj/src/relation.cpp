#include "mpart/relation.hpp"

#include <stdexcept>

namespace mpart {

BinaryRelation BinaryRelation::transposed() const {
    BinaryRelation t;
    t.left = right;
    t.right = left;
    for (int i = 0; i < kMaxParts; i++)
        for (int j = 0; j < kMaxParts; j++)
            if (has(i, j)) t.add(j, i);
    return t;
}

std::string BinaryRelation::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kMaxParts; i++)
        for (int j = 0; j < kMaxParts; j++)
            if (has(i, j)) {
                if (!first) out += ",";
                first = false;
                out += "(";
                out += char('a' + i);
                out += ",";
                out += char('a' + j);
                out += ")";
            }
    out += "}";
    return out;
}

BinaryRelation star_relation(const PartitionMatrix& m, PartSet x, PartSet y) {
    BinaryRelation r;
    r.left = x;
    r.right = y;
    for (int i : x.members())
        for (int j : y.members())
            if (m.at(i, j) == Symbol::Star) r.add(i, j);
    return r;
}

BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& s) {
    if (r.right != s.left)
        throw std::invalid_argument("compose: mismatched middle sets");
    BinaryRelation out;
    out.left = r.left;
    out.right = s.right;
    for (int j = 0; j < kMaxParts; j++) {
        if (!r.right.contains(j)) continue;
        for (int i = 0; i < kMaxParts; i++) {
            if (!r.has(i, j)) continue;
            for (int k = 0; k < kMaxParts; k++)
                if (s.has(j, k)) out.add(i, k);
        }
    }
    return out;
}

bool is_rectangular(const BinaryRelation& r) {
    for (int i = 0; i < kMaxParts; i++)
        for (int j = 0; j < kMaxParts; j++)
            for (int ip = 0; ip < kMaxParts; ip++)
                for (int jp = 0; jp < kMaxParts; jp++)
                    if (r.has(i, ip) && r.has(i, jp) && r.has(j, ip) && !r.has(j, jp))
                        return false;
    return true;
}

bool is_star_rectangular(const PartitionMatrix& m, PartSet x, PartSet y) {
    return is_rectangular(star_relation(m, x, y));
}

bool is_purifying(const PartitionMatrix& m, const std::vector<PartSet>& family) {
    for (PartSet x : family)
        for (PartSet y : family)
            if (!restrict_block(m, x, y).is_pure()) return false;
    return true;
}

} // namespace mpart
