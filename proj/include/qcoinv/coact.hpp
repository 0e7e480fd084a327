#pragma once

#include "qcoinv/hopf.hpp"

namespace qcoinv {

enum class CoactionKind { Interior, SLr, Conjugation };

/// One of the three coaction setups. interior(m,n,t): O_q(GL_t) coacting on
/// O_q(M_{m,t}) (x) O_q(M_{t,n}); slr(n,r): O_q(SL_r) on O_q(M_{n,r});
/// conjugation(n): O_q(GL_n) on O_q(M_n) by conjugation.
struct Coaction {
    CoactionKind kind;
    int m = 0, n = 0, t = 0, r = 0;
    AlgebraPtr carrier;
    AlgebraPtr hopf;

    static Coaction interior(int m, int n, int t);
    static Coaction slr(int n, int r);
    static Coaction conjugation(int n);
};

/// rho: X_ij -> sum_l X_il (x) X_lj into carrier (x) O_q(M_t), extended as an
/// algebra map. `a` lives in a quantum matrix algebra with t columns.
NCPoly right_matrix_coaction(const NCPoly& a);

/// lambda: the mirror map into O_q(M_t) (x) carrier; `b` has t rows.
NCPoly left_matrix_coaction(const NCPoly& b);

/// Sweedler-style coaction output: hopf-side normal monomial at a det power
/// (always <= 0, cleared later), paired with the carrier-side element.
struct CoactionValue {
    int degree = 0;
    std::map<std::pair<NormalMonomial, int>, NCPoly> terms;

    friend bool operator==(const CoactionValue& a, const CoactionValue& b) {
        return a.terms == b.terms;
    }
};

/// The interior structure map on a homogeneous element of the carrier:
/// sum S(a_1) b_{-1} (x) a_0 (x) b_0. Not an algebra homomorphism.
CoactionValue interior_coaction(const Coaction& c, const NCPoly& v);

/// The conjugation coaction sum u_2 (x) S(u_1) u_3, computed from the iterated
/// coproduct of the full element. Not an algebra homomorphism.
CoactionValue conjugation_coaction(const Coaction& c, const NCPoly& u);

/// The SL_r-side coaction is an algebra map; value in carrier (x) O_q(M_r).
NCPoly slr_coaction(const Coaction& c, const NCPoly& v);

/// Det-cleared matrix of (coaction - unit (x) id) on the carrier degree-d
/// component; its kernel is the coinvariant space. For the slr kind the
/// hopf side is reduced modulo (det_q - 1) within the degree-d filtration.
LaurentMatrix coinvariance_matrix(const Coaction& c, int d);

/// Same system assembled exactly at q = lambda. For the slr kind this differs
/// from specializing the generic matrix: the filtration reduction is rebuilt
/// over Q so its pivot structure is the one valid at lambda.
LaurentMatrix coinvariance_matrix_at(const Coaction& c, int d, const Rational& lambda);

/// Basis of {v : coaction(v) = unit (x) v} in carrier degree d, as coefficient
/// vectors over the carrier graded basis.
std::vector<std::vector<Laurent>> coinvariant_basis(const Coaction& c, int d);

/// tau_i = sum over i-element subsets I of q^(-2 w(I)) [I|I], w(I) the sum of
/// the entries of I; homogeneous of degree i in O_q(M_n).
NCPoly quantum_trace(int n, int i);

}  // namespace qcoinv
