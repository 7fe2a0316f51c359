#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mpart {

// Matrix entry: total order Zero < One < Star.
enum class Symbol : uint8_t { Zero = 0, One = 1, Star = 2 };

char symbol_char(Symbol s);
Symbol symbol_from_char(char c);

// Subset of part indices {0,...,size-1}, stored as a bitmask.
struct PartSet {
    uint16_t bits = 0;

    PartSet() = default;
    explicit PartSet(uint16_t b) : bits(b) {}

    bool contains(int i) const { return (bits >> i) & 1; }
    void add(int i) { bits |= uint16_t(1u << i); }
    int size() const { return __builtin_popcount(bits); }
    bool empty() const { return bits == 0; }

    std::vector<int> members() const;
    std::string to_string() const; // part letters, e.g. "ad"

    friend bool operator==(PartSet a, PartSet b) { return a.bits == b.bits; }
    friend bool operator!=(PartSet a, PartSet b) { return a.bits != b.bits; }
    friend bool operator<(PartSet a, PartSet b) { return a.bits < b.bits; }
};

PartSet full_set(int size);
PartSet parse_part_set(const std::string& text, int size);

constexpr int kMaxParts = 8; // orbit minimisation is 2*size! work per matrix

// Rectangular {0,1,*} block, rows from S, columns from T.
struct SymbolBlock {
    int rows = 0;
    int cols = 0;
    std::vector<Symbol> e;

    Symbol at(int i, int j) const { return e[size_t(i) * cols + j]; }
    bool is_pure() const;
};

// Symmetric {0,1,*} matrix over parts {0,...,size-1}.
class PartitionMatrix {
public:
    explicit PartitionMatrix(int size, Symbol fill = Symbol::Zero);

    int size() const { return size_; }
    Symbol at(int i, int j) const { return entries_[idx(i, j)]; }
    void set(int i, int j, Symbol s) {
        entries_[idx(i, j)] = s;
        entries_[idx(j, i)] = s;
    }

    friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PartitionMatrix& a, const PartitionMatrix& b) {
        return !(a == b);
    }

private:
    static size_t idx_for(int size, int i, int j) { return size_t(i) * size + j; }
    size_t idx(int i, int j) const { return idx_for(size_, i, j); }

    int size_;
    std::vector<Symbol> entries_;
};

// Upper-triangle read-off used for lexicographic comparison: diagonal first,
// then super-diagonals by offset, each top-to-bottom.  For size 4 this is
// M_aa M_bb M_cc M_dd M_ab M_bc M_cd M_ac M_bd M_ad.
using CanonicalKey = std::vector<Symbol>;

std::string key_to_string(const CanonicalKey& key);

SymbolBlock restrict_block(const PartitionMatrix& m, PartSet s, PartSet t);
PartitionMatrix principal_submatrix(const PartitionMatrix& m, PartSet s);
PartitionMatrix complement(const PartitionMatrix& m);
PartitionMatrix permute(const PartitionMatrix& m, const std::vector<int>& rho);

CanonicalKey w_word(const PartitionMatrix& m);
PartitionMatrix matrix_from_w_word(const CanonicalKey& key, int size);

// Lexicographic minimum of w_word over all 2*size! variants
// {permute(M,rho), permute(complement(M),rho)}.
CanonicalKey canonical_key(const PartitionMatrix& m);

// Minimum over permutations only (no complement); the quotient used when
// grouping accessed submatrices.
CanonicalKey permutation_key(const PartitionMatrix& m);

// Size of the orbit of m under the 2*size! relabel/complement variants.
int orbit_size(const PartitionMatrix& m);

bool is_pure(const PartitionMatrix& m);

// Format A (size 4 only): 10 characters in w-order, e.g. "001*01111*".
// Format B (any size): rows separated by '/', e.g. "0*/**".
// parse_matrix accepts either; rejects asymmetric input naming the first
// violating pair.
PartitionMatrix parse_matrix(const std::string& text);
std::string format_matrix(const PartitionMatrix& m); // format A if size 4, else B
std::string format_matrix_rows(const PartitionMatrix& m); // always format B

} // namespace mpart
