#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpart/derect.hpp"
#include "mpart/exceptions.hpp"
#include "mpart/matrix.hpp"
#include "mpart/oracle.hpp"

#include <random>

using namespace mpart;

namespace {

// all symmetric matrices of the given size, in code order
std::vector<PartitionMatrix> all_matrices(int size) {
    int cells = size * (size + 1) / 2;
    int total = 1;
    for (int i = 0; i < cells; i++) total *= 3;
    std::vector<PartitionMatrix> out;
    for (int code = 0; code < total; code++) {
        int c = code;
        PartitionMatrix m(size);
        for (int i = 0; i < size; i++)
            for (int j = i; j < size; j++) {
                m.set(i, j, Symbol(c % 3));
                c /= 3;
            }
        out.push_back(m);
    }
    return out;
}

} // namespace

TEST_CASE("pure matrix hardness") {
    CHECK_FALSE(pure_matrix_hard(PartitionMatrix(4, Symbol::Star)));
    CHECK(pure_matrix_hard(parse_matrix("**/*0")));
    // star graph made of two disjoint reflexive cliques: easy
    CHECK_FALSE(pure_matrix_hard(parse_matrix("*1/1*")));
    CHECK_FALSE(pure_matrix_hard(parse_matrix("**11/**11/11**/11**")));
    // star graph is the path c-a-b-d: no principal 2x2 has three stars, but
    // rows {b,c} x columns {a,d} does
    CHECK(pure_matrix_hard(parse_matrix("0**0/*00*/*000/0*00")));
    CHECK_THROWS((void)pure_matrix_hard(parse_matrix("001*01111*")));
}

TEST_CASE("small matrix classification") {
    Classification is = small_matrix_classification(parse_matrix("0*/**"));
    CHECK(is.verdict == Verdict::SharpPComplete);
    CHECK(small_matrix_classification(parse_matrix("00/00")).verdict ==
          Verdict::PolynomialTime);
    CHECK(small_matrix_classification(PartitionMatrix(1, Symbol::One)).verdict ==
          Verdict::PolynomialTime);
    CHECK(small_matrix_classification(parse_matrix("01/10")).verdict ==
          Verdict::PolynomialTime);

    // principal submatrix on {a,b,d} of the two-equation hand case
    PartitionMatrix abd =
        principal_submatrix(exception_matrix("hand-iv"), parse_part_set("abd", 4));
    CHECK(small_matrix_classification(abd).verdict == Verdict::SharpPComplete);

    CHECK_THROWS_WITH_AS((void)small_matrix_classification(parse_matrix("001*01111*")),
                         doctest::Contains("use full pipeline"),
                         std::invalid_argument);
}

TEST_CASE("classification is equivalence-invariant at small size") {
    std::mt19937 rng{53};
    for (int size = 1; size <= 3; size++)
        for (const PartitionMatrix& m : all_matrices(size)) {
            Verdict v = small_matrix_classification(m).verdict;
            std::vector<int> rho(size);
            for (int i = 0; i < size; i++) rho[i] = i;
            std::shuffle(rho.begin(), rho.end(), rng);
            CHECK(small_matrix_classification(permute(m, rho)).verdict == v);
            CHECK(small_matrix_classification(complement(m)).verdict == v);
        }
}

TEST_CASE("small verdicts match the exact decider") {
    for (int size = 2; size <= 3; size++)
        for (const PartitionMatrix& m : all_matrices(size)) {
            bool hard = small_matrix_classification(m).verdict == Verdict::SharpPComplete;
            CHECK(hard == has_derect_sequence(m).has_value());
        }
}

TEST_CASE("independent-set and clique matrices") {
    CHECK(is_IS_matrix(parse_matrix("0*/**")));
    CHECK(is_IS_matrix(parse_matrix("**/*0")));
    CHECK_FALSE(is_IS_matrix(parse_matrix("**/*1")));
    CHECK(is_Clique_matrix(parse_matrix("**/*1")));
    CHECK(is_Clique_matrix(parse_matrix("1*/**")));
    CHECK_FALSE(is_Clique_matrix(parse_matrix("0*/**")));
    CHECK_FALSE(is_IS_matrix(PartitionMatrix(3, Symbol::Star)));
    CHECK_FALSE(is_Clique_matrix(PartitionMatrix(3, Symbol::Star)));
}

TEST_CASE("submatrix hardness wrapper") {
    CHECK_FALSE(submatrix_hard(PartitionMatrix(1, Symbol::Zero)));
    CHECK(submatrix_hard(parse_matrix("0*/**")));
    CHECK_FALSE(submatrix_hard(parse_matrix("00/00")));
}

TEST_CASE("describe strings") {
    Classification c;
    c.verdict = Verdict::SharpPComplete;
    c.method = Method::Interpolation;
    c.s = 2;
    CHECK(c.describe() == "SharpPComplete via Interpolation(pi=0,tau=0,l=0,s=2)");
    Classification u;
    CHECK(u.describe() == "Unresolved");
}
