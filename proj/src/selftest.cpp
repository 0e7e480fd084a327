#include "qcoinv/selftest.hpp"

#include "qcoinv/experiment.hpp"

#include <algorithm>
#include <array>

namespace qcoinv {

namespace {

// splitmix64; deterministic across platforms.
std::uint64_t next_rand(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int rand_below(std::uint64_t& state, int n) {
    return static_cast<int>(next_rand(state) % static_cast<std::uint64_t>(n));
}

struct Suite {
    SuiteResult result;

    explicit Suite(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (result.messages.size() < 8)
                result.messages.push_back(what);
        }
    }
};

}  // namespace

NCPoly random_homogeneous(AlgebraPtr a, int degree, std::uint64_t& state) {
    std::vector<NormalMonomial> basis = graded_basis(*a, degree);
    NCPoly out(a);
    const int picks = 1 + rand_below(state, 3);
    for (int k = 0; k < picks; ++k) {
        const NormalMonomial& mon = basis[rand_below(state, static_cast<int>(basis.size()))];
        int coeff = rand_below(state, 7) - 3;
        if (coeff == 0)
            coeff = 1;
        int e = rand_below(state, 5) - 2;
        out.add_term(mon, Laurent::term(Rational(coeff), e));
    }
    return out;
}

namespace {

SuiteResult coefficient_suite(std::uint64_t seed) {
    Suite s("coefficient-arithmetic");
    std::uint64_t state = seed ^ 0xc0ffee;

    auto random_laurent = [&](int max_terms) {
        Laurent p;
        int terms = 1 + rand_below(state, max_terms);
        for (int i = 0; i < terms; ++i) {
            int c = rand_below(state, 9) - 4;
            if (c == 0)
                c = 2;
            p += Laurent::term(Rational(c), rand_below(state, 7) - 3);
        }
        return p;
    };

    // specialize is a ring homomorphism.
    for (int i = 0; i < 50; ++i) {
        Laurent a = random_laurent(4), b = random_laurent(4);
        Rational l(1 + rand_below(state, 3), 1 + rand_below(state, 2));
        s.check(specialize(a * b, l) == specialize(a, l) * specialize(b, l),
                "specialize multiplicative");
        s.check(specialize(a + b, l) == specialize(a, l) + specialize(b, l),
                "specialize additive");
    }

    // Kernel and rank invariants on random matrices.
    for (int i = 0; i < 20; ++i) {
        int rows = 2 + rand_below(state, 3), cols = 2 + rand_below(state, 3);
        LaurentMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rand_below(state, 3) != 0)
                    m.add(r, c, random_laurent(2));
        int rk = rank(m);
        auto kb = kernel_basis(m);
        s.check(static_cast<int>(kb.size()) == cols - rk, "kernel count = cols - rank");
        for (const auto& v : kb) {
            bool zero = true;
            for (const Laurent& x : mat_vec(m, v))
                zero = zero && x.is_zero();
            s.check(zero, "kernel vector annihilated");
        }
        for (int li = 0; li < 2; ++li) {
            Rational l(1 + rand_below(state, 4));
            s.check(rank_at(m, l) <= rk, "rank drops under specialization");
        }
    }
    return s.result;
}

SuiteResult associativity_suite(std::uint64_t seed) {
    Suite s("associativity");
    std::uint64_t state = seed ^ 0xab5012;
    for (int size : {2, 3}) {
        AlgebraPtr a = AlgebraSpec::quantum_matrix(size, size);
        for (int i = 0; i < 100; ++i) {
            NCPoly f = random_homogeneous(a, 1 + rand_below(state, 3), state);
            NCPoly g = random_homogeneous(a, 1 + rand_below(state, 3), state);
            NCPoly h = random_homogeneous(a, 1 + rand_below(state, 3), state);
            s.check((f * g) * h == f * (g * h), "associativity");
            NCPoly fg = f * g;
            if (!fg.is_zero())
                s.check(fg.homogeneous_degree() ==
                            f.homogeneous_degree() + g.homogeneous_degree(),
                        "degree additivity");
            // Reduction-order witness: fold a generator word from both ends.
            int g1 = rand_below(state, size * size);
            int g2 = rand_below(state, size * size);
            int g3 = rand_below(state, size * size);
            NCPoly left = (NCPoly::generator(a, g1) * NCPoly::generator(a, g2)) *
                          NCPoly::generator(a, g3);
            NCPoly right = NCPoly::generator(a, g1) *
                           (NCPoly::generator(a, g2) * NCPoly::generator(a, g3));
            s.check(left == right, "reduction order confluence");
            // q = 1 collapses to commutative multiplication.
            s.check((f * g).specialized(Rational(1)) == (g * f).specialized(Rational(1)),
                    "q=1 commutativity");
        }
    }
    return s.result;
}

SuiteResult centrality_suite(std::uint64_t) {
    Suite s("det-centrality");
    for (int t : {2, 3}) {
        AlgebraPtr a = AlgebraSpec::quantum_matrix(t, t);
        NCPoly det = quantum_det(a);
        for (int g = 0; g < t * t; ++g) {
            NCPoly x = NCPoly::generator(a, g);
            s.check(det * x == x * det, "det central t=" + std::to_string(t));
        }
    }
    return s.result;
}

SuiteResult mu_homomorphism_suite(std::uint64_t) {
    Suite s("multiplication-comorphism");
    const std::vector<std::array<int, 3>> cases = {{2, 2, 1}, {3, 3, 2}};
    for (const auto& [m, n, t] : cases) {
        AlgebraHom mu = interior_multiplication_hom(m, n, t);
        AlgebraPtr src = mu.source();
        for (int g1 = 0; g1 < m * n; ++g1)
            for (int g2 = 0; g2 < m * n; ++g2) {
                NCPoly prod = NCPoly::generator(src, g1) * NCPoly::generator(src, g2);
                s.check(mu.apply(prod) == mu.image(g1) * mu.image(g2),
                        "relations preserved (" + std::to_string(m) + "," + std::to_string(n) +
                            "," + std::to_string(t) + ")");
            }
    }
    return s.result;
}

SuiteResult hopf_suite(std::uint64_t) {
    Suite s("hopf-axioms");
    for (int t : {1, 2}) {
        AlgebraPtr a = AlgebraSpec::quantum_matrix(t, t);
        NCPoly det = quantum_det(a);
        for (int g = 0; g < t * t; ++g) {
            NCPoly x = NCPoly::generator(a, g);
            s.check(comultiply_left_iterated(x) == comultiply_right_iterated(x),
                    "coassociativity");
            // Counit laws on the coproduct.
            NCPoly dx = comultiply(x);
            NCPoly left(a), right(a);
            for (const auto& [mon, c] : dx.terms()) {
                left.add_term(NormalMonomial{{mon.comps[1]}},
                              c * counit(NCPoly::monomial(a, NormalMonomial{{mon.comps[0]}})));
                right.add_term(NormalMonomial{{mon.comps[0]}},
                               c * counit(NCPoly::monomial(a, NormalMonomial{{mon.comps[1]}})));
            }
            s.check(left == x, "counit law left");
            s.check(right == x, "counit law right");
            // Antipode convolution identities.
            const int i = g / t, j = g % t;
            GLElement conv_l = gl_element(NCPoly::zero(a), 0);
            GLElement conv_r = gl_element(NCPoly::zero(a), 0);
            for (int l = 0; l < t; ++l) {
                NCPoly xil = NCPoly::generator(a, i * t + l);
                NCPoly xlj = NCPoly::generator(a, l * t + j);
                conv_l = gl_add(conv_l, gl_mul(antipode(xil), gl_element(xlj)));
                conv_r = gl_add(conv_r, gl_mul(gl_element(xil), antipode(xlj)));
            }
            GLElement want = gl_scaled(GLElement{NCPoly::one(a), 0}, counit(x));
            s.check(gl_equal(conv_l, want), "antipode convolution S*id");
            s.check(gl_equal(conv_r, want), "antipode convolution id*S");
        }
        // det^-1: S(det^-1) = det and the convolution identity for it.
        GLElement det_inv{NCPoly::one(a), 1};
        GLElement sdi = antipode(det_inv);
        s.check(gl_equal(sdi, gl_element(det, 0)), "S(det^-1) = det");
        s.check(gl_is_one(gl_mul(sdi, det_inv)), "antipode convolution on det^-1");
        s.check(gl_is_one(gl_mul(det_inv, sdi)), "antipode convolution on det^-1 (right)");
    }
    return s.result;
}

SuiteResult comodule_suite(std::uint64_t) {
    Suite s("comodule-axioms");
    const std::vector<std::pair<int, int>> shapes = {{2, 1}, {2, 2}, {3, 2}};
    for (const auto& [m, t] : shapes) {
        AlgebraPtr a = AlgebraSpec::quantum_matrix(m, t);
        AlgebraPtr h = AlgebraSpec::quantum_matrix(t, t);
        for (int g = 0; g < m * t; ++g) {
            NCPoly x = NCPoly::generator(a, g);
            NCPoly rho = right_matrix_coaction(x);
            // (id (x) Delta) rho == (rho (x) id) rho, compared in carrier x H x H.
            AlgebraPtr triple = AlgebraSpec::tensor(a, AlgebraSpec::tensor(h, h));
            NCPoly lhs(triple), rhs(triple);
            for (const auto& [mon, c] : rho.terms()) {
                NCPoly dh = comultiply(NCPoly::monomial(h, NormalMonomial{{mon.comps[1]}}));
                for (const auto& [dm, dc] : dh.terms())
                    lhs.add_term(NormalMonomial{{mon.comps[0], dm.comps[0], dm.comps[1]}},
                                 c * dc);
                NCPoly rr = right_matrix_coaction(
                    NCPoly::monomial(a, NormalMonomial{{mon.comps[0]}}));
                for (const auto& [rm, rc] : rr.terms())
                    rhs.add_term(NormalMonomial{{rm.comps[0], rm.comps[1], mon.comps[1]}},
                                 c * rc);
            }
            s.check(lhs == rhs, "rho coassociativity");
            // Counit law: (id (x) counit) rho == id.
            NCPoly back(a);
            for (const auto& [mon, c] : rho.terms())
                back.add_term(NormalMonomial{{mon.comps[0]}},
                              c * counit(NCPoly::monomial(h, NormalMonomial{{mon.comps[1]}})));
            s.check(back == x, "rho counit law");
        }
        // Mirror checks for the left coaction.
        AlgebraPtr b = AlgebraSpec::quantum_matrix(t, m);
        for (int g = 0; g < t * m; ++g) {
            NCPoly x = NCPoly::generator(b, g);
            NCPoly lam = left_matrix_coaction(x);
            NCPoly back(b);
            for (const auto& [mon, c] : lam.terms())
                back.add_term(NormalMonomial{{mon.comps[1]}},
                              c * counit(NCPoly::monomial(h, NormalMonomial{{mon.comps[0]}})));
            s.check(back == x, "lambda counit law");
            // (Delta (x) id) lambda == (id (x) lambda) lambda in H x H x carrier.
            AlgebraPtr triple = AlgebraSpec::tensor(AlgebraSpec::tensor(h, h), b);
            NCPoly lhs(triple), rhs(triple);
            for (const auto& [mon, c] : lam.terms()) {
                NCPoly dh = comultiply(NCPoly::monomial(h, NormalMonomial{{mon.comps[0]}}));
                for (const auto& [dm, dc] : dh.terms())
                    lhs.add_term(NormalMonomial{{dm.comps[0], dm.comps[1], mon.comps[1]}},
                                 c * dc);
                NCPoly ll = left_matrix_coaction(
                    NCPoly::monomial(b, NormalMonomial{{mon.comps[1]}}));
                for (const auto& [lm, lc] : ll.terms())
                    rhs.add_term(NormalMonomial{{mon.comps[0], lm.comps[0], lm.comps[1]}},
                                 c * lc);
            }
            s.check(lhs == rhs, "lambda coassociativity");
        }
    }
    return s.result;
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
    return {coefficient_suite(seed), associativity_suite(seed),  centrality_suite(seed),
            mu_homomorphism_suite(seed), hopf_suite(seed), comodule_suite(seed)};
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.failures == 0; });
}

}  // namespace qcoinv
