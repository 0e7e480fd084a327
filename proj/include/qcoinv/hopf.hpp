#pragma once

#include "qcoinv/algebra.hpp"
#include "qcoinv/linalg.hpp"

#include <optional>
#include <vector>

namespace qcoinv {

/// Element of the quantum-determinant localization of O_q(M_t): the pair
/// represents num * det_q^(-det_power). det_q is central, so this is a
/// well-defined two-sided fraction.
struct GLElement {
    NCPoly num;
    int det_power = 0;
};

/// Quantum minor [I|J]: alternating sum over permutations with coefficients
/// (-q)^(length), factors ordered by ascending row index. Indices are 1-based
/// and must be strictly increasing.
NCPoly quantum_minor(AlgebraPtr algebra, const std::vector<int>& rows,
                     const std::vector<int>& cols);

/// Quantum determinant of O_q(M_t).
NCPoly quantum_det(AlgebraPtr algebra);

/// det_q^k, k >= 0.
NCPoly quantum_det_power(AlgebraPtr algebra, int k);

/// Matrix coproduct X_ij -> sum_l X_il (x) X_lj extended as an algebra map.
NCPoly comultiply(const NCPoly& f);

/// (Delta (x) id) Delta and (id (x) Delta) Delta into the flattened triple tensor.
NCPoly comultiply_left_iterated(const NCPoly& f);
NCPoly comultiply_right_iterated(const NCPoly& f);

/// Counit X_ij -> delta_ij extended as an algebra map.
Laurent counit(const NCPoly& f);
Laurent counit(const GLElement& g);

/// Antipode via the quantum cofactor rule
///   S(X_ij) = (-q)^(i-j) [rows \ {j} | cols \ {i}] det^-1,
/// extended as an algebra anti-homomorphism; S(det^-1) = det.
GLElement antipode(const NCPoly& f);
GLElement antipode(const GLElement& g);

GLElement gl_element(NCPoly num, int det_power = 0);
GLElement gl_mul(const GLElement& a, const GLElement& b);
GLElement gl_add(const GLElement& a, const GLElement& b);
GLElement gl_scaled(const GLElement& a, const Laurent& c);
bool gl_equal(const GLElement& a, const GLElement& b);
bool gl_is_one(const GLElement& a);

/// Strips det factors from the numerator so det_power is minimal.
GLElement gl_normalized(GLElement g);

std::string gl_to_string(const GLElement& g);
GLElement gl_parse(AlgebraPtr algebra, std::string_view text);

/// True iff h (of degree <= dmax) lies in the degree-<= dmax part of the
/// two-sided ideal generated by det_q - 1, i.e. in the span of
/// {(det_q - 1) * m : m a normal monomial of degree <= dmax - t}.
bool sl_ideal_member(const NCPoly& h, int dmax);

/// Splits an element into its homogeneous components, keyed by degree.
std::map<int, NCPoly> homogeneous_components(const NCPoly& f);

}  // namespace qcoinv
