#pragma once

#include "qcoinv/laurent.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcoinv {

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Description of a graded algebra: a single-parameter quantum matrix algebra
/// O_q(M_{m,n}), a free algebra on weighted generators, or a tensor product of
/// two such algebras. Tensor factors commute with each other elementwise.
class AlgebraSpec {
public:
    enum class Kind { QuantumMatrix, Free, Tensor };

    static AlgebraPtr quantum_matrix(int m, int n);
    static AlgebraPtr free_algebra(std::vector<std::string> labels, std::vector<int> degrees);
    static AlgebraPtr tensor(AlgebraPtr left, AlgebraPtr right);

    Kind kind() const { return kind_; }
    int qm_rows() const { return m_; }
    int qm_cols() const { return n_; }
    const std::vector<std::string>& free_labels() const { return labels_; }
    const std::vector<int>& free_degrees() const { return weights_; }
    const AlgebraPtr& tensor_left() const { return left_; }
    const AlgebraPtr& tensor_right() const { return right_; }

    /// Primitive (non-tensor) factors in left-to-right order; a non-tensor
    /// algebra is its own single factor.
    const std::vector<const AlgebraSpec*>& factors() const { return factors_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }

    /// Generators counted across all factors.
    int generator_count() const;
    /// Generator degree by global index.
    int generator_degree(int g) const;
    /// (factor, local index) for a global generator index.
    std::pair<int, int> locate_generator(int g) const;
    /// Global index from (factor, local).
    int global_generator(int factor, int local) const;
    std::string generator_label(int g) const;

    bool same_as(const AlgebraSpec& other) const;

private:
    AlgebraSpec() = default;

    Kind kind_ = Kind::QuantumMatrix;
    int m_ = 0, n_ = 0;                  // QuantumMatrix
    std::vector<std::string> labels_;    // Free
    std::vector<int> weights_;           // Free
    AlgebraPtr left_, right_;            // Tensor
    std::vector<const AlgebraSpec*> factors_;
    std::vector<int> factor_gen_offset_;
};

/// PBW-normal monomial. One component per primitive factor of the algebra:
/// quantum-matrix components store the exponent vector over X_{ij} in row-major
/// order, free components store the generator word.
struct NormalMonomial {
    std::vector<std::vector<int>> comps;

    friend bool operator==(const NormalMonomial& a, const NormalMonomial& b) {
        return a.comps == b.comps;
    }
    friend bool operator<(const NormalMonomial& a, const NormalMonomial& b);
};

/// Identity monomial of an algebra.
NormalMonomial unit_monomial(const AlgebraSpec& a);
/// Monomial consisting of a single generator (global index).
NormalMonomial generator_monomial(const AlgebraSpec& a, int g);
int monomial_degree(const AlgebraSpec& a, const NormalMonomial& mon);
bool is_unit_monomial(const AlgebraSpec& a, const NormalMonomial& mon);

/// Element of an algebra: finite Laurent-combination of normal monomials.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    static NCPoly zero(AlgebraPtr a) { return NCPoly(std::move(a)); }
    static NCPoly one(AlgebraPtr a);
    static NCPoly generator(AlgebraPtr a, int g);
    static NCPoly monomial(AlgebraPtr a, NormalMonomial mon, Laurent coeff = Laurent::one());

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::map<NormalMonomial, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const NormalMonomial& mon, const Laurent& c);

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
    NCPoly scaled(const Laurent& c) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// -1 for non-homogeneous (or zero degree 0).
    int homogeneous_degree() const;
    bool is_homogeneous() const;

    /// Coefficientwise evaluation at q = lambda; the result again lives over
    /// Q embedded as constant Laurent polynomials.
    NCPoly specialized(const Rational& lambda) const;

    std::string str() const;

private:
    AlgebraPtr algebra_;
    std::map<NormalMonomial, Laurent> terms_;
};

/// Deterministic ordered basis of the degree-d component.
std::vector<NormalMonomial> graded_basis(const AlgebraSpec& a, int d);
/// Dimension of the degree-d component (cheap, no enumeration).
long long graded_dimension(const AlgebraSpec& a, int d);

/// Coordinates of a homogeneous element of degree d relative to graded_basis
/// order. Throws std::invalid_argument on non-homogeneous input.
std::vector<Laurent> coordinate_vector(const NCPoly& f, int d);
/// Inverse of coordinate_vector.
NCPoly from_coordinates(AlgebraPtr a, int d, const std::vector<Laurent>& coords);

/// The unique algebra homomorphism extending a generator assignment. A declared
/// degree multiplier k means degree-j sources land in degree k*j and is
/// validated against the images; pass std::nullopt for maps without a uniform
/// multiplier (such as one-sided coproduct extensions).
class AlgebraHom {
public:
    AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images,
               std::optional<int> degree_multiplier);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    std::optional<int> degree_multiplier() const { return multiplier_; }
    const NCPoly& image(int g) const { return images_[g]; }

    NCPoly apply(const NCPoly& f) const;

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<NCPoly> images_;
    std::optional<int> multiplier_;
};

/// Canonical text form and exact round-trip parsing for quantum-matrix algebra
/// elements: `(<laurent>)*X[i,j]^e*... + ...`, terms in monomial order.
std::string qm_to_string(const NCPoly& f);
NCPoly qm_parse(AlgebraPtr algebra, std::string_view text);

}  // namespace qcoinv
