#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcoinv/experiment.hpp"
#include "qcoinv/lifting.hpp"

#include <fstream>
#include <sstream>

using namespace qcoinv;

namespace {

GradedComplex single(LaurentMatrix phi, LaurentMatrix psi, int d = 0) {
    GradedComplex c;
    c.degrees.emplace(d, DegreeEntry{std::move(phi), std::move(psi)});
    return c;
}

}  // namespace

TEST_CASE("complex condition") {
    CHECK(check_complex(single(LaurentMatrix::identity(2), LaurentMatrix(3, 2)), 0));
    LaurentMatrix one(1, 1);
    one.add(0, 0, Laurent::one());
    CHECK_FALSE(check_complex(single(one, one), 0));
    CHECK_THROWS_AS(check_complex(GradedComplex{}, 1), std::out_of_range);

    // multiplication-comorphism kernel complex is a complex: the minor ideal
    // dies under the hom
    AlgebraHom mu = interior_multiplication_hom(2, 2, 1);
    DegreeEntry e = build_kernel_complex(minor_ideal_generators(2, 2, 1), mu, 2);
    GradedComplex g;
    g.degrees.emplace(2, e);
    CHECK(check_complex(g, 2));
}

TEST_CASE("exactness certificates") {
    // identity followed by zero: exact everywhere
    GradedComplex c = single(LaurentMatrix::identity(2), LaurentMatrix(0, 2));
    ExactnessEntry e = exactness(c, 0, EvalPoint::generic());
    CHECK(e.exact);
    CHECK(e.rank_phi == 2);
    CHECK(e.rank_psi == 0);
    CHECK(exactness(c, 0, EvalPoint::q1()).exact);
    CHECK(exactness(c, 0, EvalPoint::at(Rational(3, 2))).exact);
    CHECK_THROWS_AS(EvalPoint::at(Rational(0)), std::invalid_argument);

    // the directionality witness: [[q-1]] is generically exact but not at q=1,
    // showing the reduction principle only lifts from q=1 upward.
    LaurentMatrix qm1(1, 1);
    qm1.add(0, 0, Laurent::q(1) - Laurent::one());
    GradedComplex w = single(qm1, LaurentMatrix(0, 1));
    CHECK(exactness(w, 0, EvalPoint::generic()).exact);
    CHECK_FALSE(exactness(w, 0, EvalPoint::q1()).exact);
}

TEST_CASE("interior instance is exact at q=1 and generically") {
    Coaction c = Coaction::interior(2, 2, 1);
    AlgebraHom mu = interior_multiplication_hom(2, 2, 1);
    GradedComplex cplx;
    cplx.degrees.emplace(2, build_coinvariant_complex(c, mu, 2));
    CHECK(check_complex(cplx, 2));
    ExactnessEntry gen = exactness(cplx, 2, EvalPoint::generic());
    ExactnessEntry q1 = exactness(cplx, 2, EvalPoint::q1());
    CHECK(gen.exact);
    CHECK(q1.exact);
    CHECK(gen.rank_phi == 4);
    CHECK(gen.dim_b - gen.rank_psi == 4);  // coinvariant dimension
}

TEST_CASE("coinvariant complex at degree zero") {
    Coaction c = Coaction::interior(2, 2, 1);
    AlgebraHom mu = interior_multiplication_hom(2, 2, 1);
    DegreeEntry e = build_coinvariant_complex(c, mu, 0);
    CHECK(e.phi.rows() == 1);
    CHECK(e.phi.cols() == 1);
    CHECK(e.phi.at(0, 0).is_one());
    GradedComplex g;
    g.degrees.emplace(0, e);
    CHECK(exactness(g, 0, EvalPoint::generic()).exact);
}

TEST_CASE("conjugation coinvariant complex kernel contains trace monomials") {
    Coaction c = Coaction::conjugation(2);
    AlgebraHom hom = conjugation_trace_hom(2);
    DegreeEntry e = build_coinvariant_complex(c, hom, 2);
    NCPoly t1 = quantum_trace(2, 1), t2 = quantum_trace(2, 2);
    for (const NCPoly& f : {t1 * t1, t2}) {
        auto v = coordinate_vector(f, 2);
        for (const Laurent& x : mat_vec(e.psi, v))
            CHECK(x.is_zero());
    }
}

TEST_CASE("kernel complex without generators reduces to injectivity") {
    AlgebraHom mu = interior_multiplication_hom(2, 2, 1);
    DegreeEntry e = build_kernel_complex({}, mu, 1);
    CHECK(e.phi.cols() == 0);
    GradedComplex g;
    g.degrees.emplace(1, e);
    // mu is injective in degree 1, so the complex is exact there
    CHECK(exactness(g, 1, EvalPoint::generic()).exact);
}

TEST_CASE("minor ideal component equals the kernel in degree 2") {
    AlgebraHom mu = interior_multiplication_hom(2, 2, 1);
    auto gens = minor_ideal_generators(2, 2, 1);
    REQUIRE(gens.size() == 1);
    auto span = ideal_component_span(mu.source(), gens, 2);
    CHECK(span_rank(span, 10) == 1);
    LaurentMatrix h = hom_matrix(mu, 2);
    auto ker = kernel_basis(h);
    REQUIRE(ker.size() == 1);
    CHECK(in_span(span, ker[0], 10));
}

TEST_CASE("commutator ideal matches the presentation kernel per degree") {
    AlgebraHom hom = conjugation_trace_hom(2);
    auto gens = commutator_ideal_generators(2);
    for (int d = 0; d <= 6; ++d) {
        LaurentMatrix h = hom_matrix(hom, d);
        int ker_dim = h.cols() - rank(h);
        auto span = ideal_component_span(hom.source(), gens, d);
        CHECK(span_rank(span, h.cols()) == ker_dim);
        for (const auto& v : span)
            for (const Laurent& x : mat_vec(h, v))
                CHECK(x.is_zero());
    }
}

TEST_CASE("json serialization round trips and matches the golden file") {
    LaurentMatrix phi(2, 1);
    phi.add(0, 0, Laurent::q(1) - Laurent::one());
    phi.add(1, 0, Laurent(2));
    LaurentMatrix psi(1, 2);
    psi.add(0, 0, Laurent(2));
    psi.add(0, 1, Laurent::one() - Laurent::q(1));
    GradedComplex c = single(phi, psi, 3);
    c.label_a = "ideal";
    c.label_b = "source";
    c.label_c = "target";
    std::string text = complex_to_json(c);
    GradedComplex back = complex_from_json(text);
    CHECK(back.label_a == "ideal");
    CHECK(back.degrees.at(3).phi == phi);
    CHECK(back.degrees.at(3).psi == psi);
    CHECK(complex_to_json(back) == text);

    std::ifstream golden(std::string(QCOINV_TEST_DATA_DIR) + "/complex_golden.json");
    REQUIRE(golden.good());
    std::stringstream buf;
    buf << golden.rdbuf();
    std::string want = buf.str();
    while (!want.empty() && (want.back() == '\n' || want.back() == '\r'))
        want.pop_back();
    CHECK(text == want);
}
