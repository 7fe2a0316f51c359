#include "mpart/oracle.hpp"

#include <stdexcept>

namespace mpart {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::PolynomialTime: return "PolynomialTime";
    case Verdict::SharpPComplete: return "SharpPComplete";
    case Verdict::Unresolved: return "Unresolved";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
    case Method::None: return "None";
    case Method::PureHomomorphism: return "PureHomomorphism";
    case Method::ImpureSmall: return "ImpureSmall";
    case Method::Doubletons: return "Doubletons";
    case Method::Interpolation: return "Interpolation";
    case Method::Exception: return "Exception";
    }
    return "?";
}

std::string Classification::describe() const {
    std::string out = verdict_name(verdict);
    if (method == Method::None) return out;
    out += " via " + method_name(method);
    if (method == Method::Interpolation) {
        out += "(pi=" + std::to_string(int(pi)) + ",tau=" + std::to_string(int(tau)) +
               ",l=" + std::to_string(ell) + ",s=" + std::to_string(s) + ")";
    } else if (method == Method::Exception) {
        out += "(" + exception_id + ")";
    }
    return out;
}

bool pure_matrix_hard(const PartitionMatrix& m) {
    if (!is_pure(m)) throw std::invalid_argument("pure_matrix_hard: matrix is impure");
    int n = m.size();
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            for (int k = 0; k < n; k++)
                for (int l = k + 1; l < n; l++) {
                    int stars = (m.at(i, k) == Symbol::Star) + (m.at(i, l) == Symbol::Star) +
                                (m.at(j, k) == Symbol::Star) + (m.at(j, l) == Symbol::Star);
                    if (stars == 3) return true;
                }
    return false;
}

namespace {

// Principal 2x2 block equivalent to (**;*0) or (**;*1): off-diagonal star and
// exactly one diagonal star.
bool has_hard_principal_2x2(const PartitionMatrix& m) {
    for (int i = 0; i < m.size(); i++)
        for (int j = i + 1; j < m.size(); j++) {
            if (m.at(i, j) != Symbol::Star) continue;
            bool di = m.at(i, i) == Symbol::Star;
            bool dj = m.at(j, j) == Symbol::Star;
            if (di != dj) return true;
        }
    return false;
}

} // namespace

Classification small_matrix_classification(const PartitionMatrix& m) {
    if (m.size() < 1 || m.size() > 3)
        throw std::invalid_argument("small_matrix_classification: use full pipeline");
    Classification c;
    if (m.size() == 1) {
        c.verdict = Verdict::PolynomialTime;
        c.method = Method::ImpureSmall;
        return c;
    }
    if (is_pure(m)) {
        c.method = Method::PureHomomorphism;
        c.verdict = pure_matrix_hard(m) ? Verdict::SharpPComplete : Verdict::PolynomialTime;
        return c;
    }
    c.method = Method::ImpureSmall;
    if (m.size() == 2) {
        c.verdict = Verdict::PolynomialTime;
        return c;
    }
    c.verdict = has_hard_principal_2x2(m) ? Verdict::SharpPComplete : Verdict::PolynomialTime;
    return c;
}

namespace {

bool is_three_star_2x2(const PartitionMatrix& m, Symbol hole) {
    if (m.size() != 2) return false;
    if (m.at(0, 1) != Symbol::Star) return false;
    Symbol d0 = m.at(0, 0), d1 = m.at(1, 1);
    return (d0 == Symbol::Star && d1 == hole) || (d1 == Symbol::Star && d0 == hole);
}

} // namespace

bool is_IS_matrix(const PartitionMatrix& m) { return is_three_star_2x2(m, Symbol::Zero); }

bool is_Clique_matrix(const PartitionMatrix& m) { return is_three_star_2x2(m, Symbol::One); }

bool submatrix_hard(const PartitionMatrix& m) {
    if (m.size() == 0) return false;
    return small_matrix_classification(m).verdict == Verdict::SharpPComplete;
}

} // namespace mpart
