#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcoinv/linalg.hpp"

using namespace qcoinv;

namespace {

std::uint64_t rng_state = 0x5eed;

std::uint64_t next_rand() {
    std::uint64_t z = (rng_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int rnd(int n) { return static_cast<int>(next_rand() % n); }

Laurent random_laurent() {
    Laurent p;
    int terms = 1 + rnd(3);
    for (int i = 0; i < terms; ++i) {
        int c = rnd(9) - 4;
        p += Laurent::term(Rational(c == 0 ? 1 : c), rnd(7) - 3);
    }
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    Rational a(3, 6);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rational b(-2, -4);
    CHECK(b == a);
    CHECK(Rational(1, -2).sign() == -1);
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
}

TEST_CASE("laurent ring arithmetic") {
    CHECK((Laurent::q(1) * Laurent::q(-1)).is_one());
    CHECK(((Laurent::q(1) - Laurent::one()) + (Laurent::one() - Laurent::q(1))).is_zero());
    CHECK((Laurent::q(1) - Laurent::one()) * (Laurent::q(1) + Laurent::one()) ==
          Laurent::q(2) - Laurent::one());
}

TEST_CASE("specialize evaluates exactly and rejects zero") {
    CHECK(specialize(Laurent::q(1) - Laurent::one(), Rational(1)).is_zero());
    CHECK(specialize(Laurent::q(1) + Laurent::q(-1), Rational(1)) == Rational(2));
    CHECK(specialize(Laurent::q(2) - Laurent(3), Rational(2)) == Rational(1));
    CHECK(specialize(Laurent::q(-2), Rational(2, 3)) == Rational(9, 4));
    CHECK_THROWS_AS(specialize(Laurent::q(1), Rational(0)), std::domain_error);
}

TEST_CASE("specialize is a ring homomorphism on random samples") {
    for (int i = 0; i < 200; ++i) {
        Laurent a = random_laurent(), b = random_laurent();
        Rational l(1 + rnd(5), 1 + rnd(3));
        CHECK(specialize(a * b, l) == specialize(a, l) * specialize(b, l));
        CHECK(specialize(a + b, l) == specialize(a, l) + specialize(b, l));
    }
}

TEST_CASE("laurent text form round trips") {
    Laurent p = Laurent::q(2) - Laurent(3);
    CHECK(p.str() == "1*q^2 - 3*q^0");
    CHECK(Laurent::parse(p.str()) == p);
    CHECK(Laurent().str() == "0");
    CHECK(Laurent::parse("0").is_zero());
    Laurent r = Laurent::term(Rational(-5, 3), -2) + Laurent::term(Rational(7), 4);
    CHECK(Laurent::parse(r.str()) == r);
    for (int i = 0; i < 50; ++i) {
        Laurent s = random_laurent();
        CHECK(Laurent::parse(s.str()) == s);
    }
}

TEST_CASE("exact division and gcd") {
    Laurent a = (Laurent::q(1) - Laurent::one()) * (Laurent::q(3) + Laurent(2));
    CHECK(a.div_exact(Laurent::q(1) - Laurent::one()) == Laurent::q(3) + Laurent(2));
    CHECK_THROWS_AS((Laurent::q(2) + Laurent::one()).div_exact(Laurent::q(1) - Laurent::one()),
                    std::domain_error);
    Laurent g = Laurent::gcd((Laurent::q(1) - Laurent::one()) * Laurent::q(5),
                             (Laurent::q(2) - Laurent::one()).shifted(-3));
    CHECK(g == Laurent::q(1) - Laurent::one());
}

TEST_CASE("kernel_basis spec examples") {
    CHECK(kernel_basis(LaurentMatrix::identity(2)).empty());

    LaurentMatrix m(1, 2);
    m.add(0, 0, Laurent::q(1) - Laurent::one());
    m.add(0, 1, Laurent::one() - Laurent::q(1));
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0].is_one());
    CHECK(kb[0][1].is_one());

    LaurentMatrix m2(2, 2);
    m2.add(0, 0, Laurent::one());
    m2.add(0, 1, Laurent::q(1));
    m2.add(1, 0, Laurent::q(-1));
    m2.add(1, 1, Laurent::one());
    auto kb2 = kernel_basis(m2);
    REQUIRE(kb2.size() == 1);
    // normalized to (q, -1): lowest power at exponent 0, first entry positive
    CHECK(kb2[0][0] == Laurent::q(1));
    CHECK(kb2[0][1] == -Laurent::one());
}

TEST_CASE("rank spec examples") {
    CHECK(rank(LaurentMatrix::identity(3)) == 3);
    LaurentMatrix m(1, 1);
    m.add(0, 0, Laurent::q(1) - Laurent::one());
    CHECK(rank(m) == 1);
    CHECK(rank_at(m, Rational(1)) == 0);  // rank drop at q = 1
    CHECK(rank(LaurentMatrix(3, 4)) == 0);
    CHECK_THROWS_AS(rank_at(m, Rational(0)), std::domain_error);
}

TEST_CASE("kernel and rank invariants on random matrices") {
    for (int i = 0; i < 40; ++i) {
        int rows = 1 + rnd(4), cols = 1 + rnd(4);
        LaurentMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rnd(3) != 0)
                    m.add(r, c, random_laurent());
        int rk = rank(m);
        auto kb = kernel_basis(m);
        CHECK(static_cast<int>(kb.size()) == cols - rk);
        for (const auto& v : kb) {
            for (const Laurent& x : mat_vec(m, v))
                CHECK(x.is_zero());
            // normalization: no common content, min exponent zero, positive lead
            Rational content;
            int minexp = 1 << 20;
            const Laurent* first = nullptr;
            for (const Laurent& x : v) {
                if (x.is_zero())
                    continue;
                if (!first)
                    first = &x;
                content = rational_gcd(content, x.content());
                minexp = std::min(minexp, x.min_exp());
            }
            REQUIRE(first != nullptr);
            CHECK(content == Rational(1));
            CHECK(minexp == 0);
            CHECK(first->leading_coeff().sign() > 0);
        }
        for (int k = 0; k < 3; ++k) {
            Rational l(1 + rnd(5));
            CHECK(rank_at(m, l) <= rk);
        }
    }
}

TEST_CASE("matmul and identity") {
    LaurentMatrix a(2, 2);
    a.add(0, 0, Laurent::q(1));
    a.add(0, 1, Laurent::one());
    a.add(1, 1, Laurent::q(-1));
    CHECK(matmul(a, LaurentMatrix::identity(2)) == a);
    CHECK(matmul(LaurentMatrix::identity(2), a) == a);
}
