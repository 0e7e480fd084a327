#pragma once

#include "qcoinv/coact.hpp"

#include <iosfwd>
#include <string>

namespace qcoinv {

/// Evaluation point for exactness certificates: the fraction field Q(q)
/// (generic), or Q at q = lambda (q1 is lambda = 1).
struct EvalPoint {
    enum class Kind { Generic, Q1, Specialized };
    Kind kind = Kind::Generic;
    Rational lambda = Rational(1);

    static EvalPoint generic() { return {Kind::Generic, Rational(1)}; }
    static EvalPoint q1() { return {Kind::Q1, Rational(1)}; }
    static EvalPoint at(Rational l);

    std::string str() const;
};

/// Per-degree matrices of a complex A_d --phi--> B_d --psi--> C_d.
struct DegreeEntry {
    LaurentMatrix phi;
    LaurentMatrix psi;
};

struct GradedComplex {
    std::string label_a = "A";
    std::string label_b = "B";
    std::string label_c = "C";
    std::map<int, DegreeEntry> degrees;
};

/// True iff psi * phi is exactly the zero matrix in degree d.
bool check_complex(const GradedComplex& c, int d);

/// Rank certificate at one evaluation point: exact iff rank phi + rank psi = dim B.
struct ExactnessEntry {
    int degree = 0;
    int dim_b = 0;
    int rank_phi = 0;
    int rank_psi = 0;
    bool exact = false;
    EvalPoint point;
};

ExactnessEntry exactness(const GradedComplex& c, int d, const EvalPoint& at);

/// Complex A --phi--> B --(coaction - unit (x) id)--> H (x) B in carrier degree d:
/// phi is the matrix of the hom out of its source component with matching image
/// degree (zero-column when d is not a multiple of the hom's degree multiplier),
/// psi is the det-cleared coinvariance matrix. Exactness at B says coinvariants
/// equal the image of the hom.
DegreeEntry build_coinvariant_complex(const Coaction& c, const AlgebraHom& hom, int d);

/// Complex I --eta--> A --phi--> B in source degree d: eta's columns span the
/// degree-d component of the two-sided ideal generated by the given homogeneous
/// elements (all m1 * g * m2 of complementary degrees), phi is the hom matrix.
/// Exactness at A says ker phi equals the ideal component.
DegreeEntry build_kernel_complex(const std::vector<NCPoly>& ideal_gens, const AlgebraHom& hom,
                                 int d);

/// Matrix of the hom from source degree d into target degree (multiplier * d).
LaurentMatrix hom_matrix(const AlgebraHom& hom, int d);

/// Spanning vectors (over the source degree-d basis) of the degree-d component
/// of the two-sided ideal generated by the given homogeneous elements.
std::vector<std::vector<Laurent>> ideal_component_span(AlgebraPtr algebra,
                                                       const std::vector<NCPoly>& gens, int d);

/// JSON round trip for golden-file tests; entries carry the Laurent text form.
std::string complex_to_json(const GradedComplex& c);
GradedComplex complex_from_json(const std::string& text);

}  // namespace qcoinv
