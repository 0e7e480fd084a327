#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcoinv/algebra.hpp"
#include "qcoinv/selftest.hpp"

using namespace qcoinv;

namespace {

const AlgebraPtr M2 = AlgebraSpec::quantum_matrix(2, 2);

NCPoly gen(int g) { return NCPoly::generator(M2, g); }

}  // namespace

TEST_CASE("multiplication rewrites to the normal form") {
    NCPoly x11 = gen(0), x12 = gen(1), x21 = gen(2), x22 = gen(3);
    CHECK(NCPoly::one(M2) * x12 == x12);
    CHECK(x12 * x11 == (x11 * x12).scaled(Laurent::q(-1)));
    CHECK(x22 * x11 ==
          x11 * x22 - (x12 * x21).scaled(Laurent::q(1) - Laurent::q(-1)));
    CHECK(x21 * x12 == x12 * x21);  // antidiagonal pair commutes
    CHECK_THROWS_AS(x11 * NCPoly::generator(AlgebraSpec::quantum_matrix(3, 3), 0),
                    std::invalid_argument);
}

TEST_CASE("graded bases have the right sizes and order") {
    auto b1 = graded_basis(*M2, 1);
    REQUIRE(b1.size() == 4);
    // row-major generator order: X11 < X12 < X21 < X22
    CHECK(b1[0] == generator_monomial(*M2, 0));
    CHECK(b1[1] == generator_monomial(*M2, 1));
    CHECK(b1[2] == generator_monomial(*M2, 2));
    CHECK(b1[3] == generator_monomial(*M2, 3));
    CHECK(graded_basis(*M2, 2).size() == 10);
    CHECK(graded_dimension(*M2, 2) == 10);

    auto F = AlgebraSpec::free_algebra({"g1", "g2"}, {1, 2});
    CHECK(graded_basis(*F, 4).size() == 5);
    CHECK(graded_dimension(*F, 4) == 5);

    auto T = AlgebraSpec::tensor(AlgebraSpec::quantum_matrix(2, 1),
                                 AlgebraSpec::quantum_matrix(1, 2));
    CHECK(graded_basis(*T, 2).size() == graded_dimension(*T, 2));
    CHECK(graded_dimension(*T, 2) == 3 + 2 * 2 + 3);
}

TEST_CASE("coordinates round trip") {
    NCPoly det = gen(0) * gen(3) - (gen(1) * gen(2)).scaled(Laurent::q(1));
    auto v = coordinate_vector(det, 2);
    auto basis = graded_basis(*M2, 2);
    // +1 at X11*X22, -q at X12*X21, zero elsewhere
    NormalMonomial x11x22{{{1, 0, 0, 1}}};
    NormalMonomial x12x21{{{0, 1, 1, 0}}};
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == x11x22)
            CHECK(v[i].is_one());
        else if (basis[i] == x12x21)
            CHECK(v[i] == -Laurent::q(1));
        else
            CHECK(v[i].is_zero());
    }
    CHECK(from_coordinates(M2, 2, v) == det);

    CHECK_THROWS_AS(coordinate_vector(gen(0) + det, 2), std::invalid_argument);
    CHECK(coordinate_vector(NCPoly::zero(M2), 2) == std::vector<Laurent>(10));

    std::uint64_t state = 99;
    for (int i = 0; i < 100; ++i) {
        int d = 1 + static_cast<int>(state % 3);
        NCPoly f = random_homogeneous(M2, d, state);
        CHECK(from_coordinates(M2, d, coordinate_vector(f, d)) == f);
    }
}

TEST_CASE("associativity, degree additivity, confluence, q=1 collapse") {
    std::uint64_t state = 7;
    for (int size : {2, 3}) {
        AlgebraPtr a = AlgebraSpec::quantum_matrix(size, size);
        for (int i = 0; i < 60; ++i) {
            NCPoly f = random_homogeneous(a, 1 + static_cast<int>(state % 3), state);
            NCPoly g = random_homogeneous(a, 1 + static_cast<int>((state >> 8) % 3), state);
            NCPoly h = random_homogeneous(a, 1, state);
            CHECK((f * g) * h == f * (g * h));
            if (!(f * g).is_zero())
                CHECK((f * g).homogeneous_degree() ==
                      f.homogeneous_degree() + g.homogeneous_degree());
            CHECK((f * g).specialized(Rational(1)) == (g * f).specialized(Rational(1)));
        }
    }
}

TEST_CASE("tensor factors commute elementwise") {
    auto T = AlgebraSpec::tensor(M2, M2);
    NCPoly a = NCPoly::generator(T, 0);      // left factor X11
    NCPoly b = NCPoly::generator(T, 4 + 1);  // right factor X12
    CHECK(a * b == b * a);
}

TEST_CASE("algebra homomorphism basics") {
    // q-scaling endomorphism X_ij -> q X_ij respects the relations.
    std::vector<NCPoly> images;
    for (int g = 0; g < 4; ++g)
        images.push_back(NCPoly::generator(M2, g).scaled(Laurent::q(1)));
    AlgebraHom h(M2, M2, images, 1);
    CHECK(h.apply(NCPoly::one(M2)) == NCPoly::one(M2));
    NCPoly f = gen(0) * gen(3);
    CHECK(h.apply(f) == f.scaled(Laurent::q(2)));
    CHECK_THROWS_AS(AlgebraHom(M2, M2, {images[0], images[1], images[2]}, 1),
                    std::invalid_argument);
    // degree-inconsistent images rejected
    std::vector<NCPoly> bad = images;
    bad[0] = gen(0) * gen(1);
    CHECK_THROWS_AS(AlgebraHom(M2, M2, bad, 1), std::invalid_argument);
}

TEST_CASE("element text form round trips") {
    NCPoly p = gen(0) * gen(3) - (gen(1) * gen(2)).scaled(Laurent::q(1)) +
               NCPoly::one(M2).scaled(Laurent::term(Rational(5, 2), -3));
    CHECK(qm_parse(M2, p.str()) == p);
    CHECK(qm_parse(M2, NCPoly::zero(M2).str()).is_zero());
    std::uint64_t state = 3;
    for (int i = 0; i < 50; ++i) {
        NCPoly f = random_homogeneous(M2, 1 + static_cast<int>(state % 4), state);
        CHECK(qm_parse(M2, f.str()) == f);
    }
}

TEST_CASE("free and weighted free algebras") {
    auto F = AlgebraSpec::free_algebra({"a", "b"}, {1, 1});
    NCPoly x = NCPoly::generator(F, 0), y = NCPoly::generator(F, 1);
    CHECK((x * y).term_count() == 1);
    CHECK(x * y != y * x);  // free: no rewriting
    CHECK((x * y * x).homogeneous_degree() == 3);
    auto W = AlgebraSpec::free_algebra({"u", "v"}, {1, 2});
    CHECK(NCPoly::generator(W, 1).homogeneous_degree() == 2);
}
