#include "qcoinv/hopf.hpp"

#include "qcoinv/debug.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcoinv {

namespace {

void require_square_qm(const AlgebraSpec& a) {
    if (a.kind() != AlgebraSpec::Kind::QuantumMatrix || a.qm_rows() != a.qm_cols())
        throw std::invalid_argument("square quantum matrix algebra required");
}

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv;
}

}  // namespace

NCPoly quantum_minor(AlgebraPtr algebra, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    if (algebra->kind() != AlgebraSpec::Kind::QuantumMatrix)
        throw std::invalid_argument("quantum_minor: quantum matrix algebra required");
    if (rows.size() != cols.size())
        throw std::invalid_argument("quantum_minor: |I| != |J|");
    if (!std::is_sorted(rows.begin(), rows.end()) || !std::is_sorted(cols.begin(), cols.end()))
        throw std::invalid_argument("quantum_minor: index sets must be increasing");
    for (int r : rows)
        if (r < 1 || r > algebra->qm_rows())
            throw std::out_of_range("quantum_minor: row index out of range");
    for (int c : cols)
        if (c < 1 || c > algebra->qm_cols())
            throw std::out_of_range("quantum_minor: column index out of range");

    const int k = static_cast<int>(rows.size());
    const int n = algebra->qm_cols();
    NCPoly out(algebra);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        NCPoly prod = NCPoly::one(algebra);
        for (int s = 0; s < k; ++s) {
            int g = (rows[s] - 1) * n + (cols[perm[s]] - 1);
            prod *= NCPoly::generator(algebra, g);
        }
        int l = inversions(perm);
        Laurent sign = Laurent::term(Rational(l % 2 == 0 ? 1 : -1), l);
        out += prod.scaled(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NCPoly quantum_det(AlgebraPtr algebra) {
    require_square_qm(*algebra);
    std::vector<int> all(algebra->qm_rows());
    std::iota(all.begin(), all.end(), 1);
    return quantum_minor(algebra, all, all);
}

NCPoly quantum_det_power(AlgebraPtr algebra, int k) {
    if (k < 0)
        throw std::invalid_argument("quantum_det_power: k >= 0");
    NCPoly acc = NCPoly::one(algebra);
    if (k == 0)
        return acc;
    NCPoly det = quantum_det(algebra);
    for (int i = 0; i < k; ++i)
        acc *= det;
    return acc;
}

// ---------------------------------------------------------------------------
// Coproduct and counit

namespace {

/// Image of X_ij under the matrix coproduct, landing in the (fa, fb) factors
/// of the target tensor algebra.
NCPoly coproduct_image(AlgebraPtr target, const AlgebraSpec& qm, int local, int fa, int fb) {
    const int t = qm.qm_cols();
    const int i = local / t;
    const int j = local % t;
    NCPoly out(target);
    for (int l = 0; l < t; ++l) {
        NCPoly a = NCPoly::generator(target, target->global_generator(fa, i * t + l));
        NCPoly b = NCPoly::generator(target, target->global_generator(fb, l * t + j));
        out += a * b;
    }
    return out;
}

}  // namespace

NCPoly comultiply(const NCPoly& f) {
    AlgebraPtr a = f.algebra();
    require_square_qm(*a);
    AlgebraPtr target = AlgebraSpec::tensor(a, a);
    std::vector<NCPoly> images;
    for (int g = 0; g < a->generator_count(); ++g)
        images.push_back(coproduct_image(target, *a, g, 0, 1));
    return AlgebraHom(a, target, std::move(images), 2).apply(f);
}

NCPoly comultiply_left_iterated(const NCPoly& f) {
    AlgebraPtr a = f.algebra();
    require_square_qm(*a);
    NCPoly once = comultiply(f);
    AlgebraPtr pair = once.algebra();
    AlgebraPtr triple = AlgebraSpec::tensor(AlgebraSpec::tensor(a, a), a);
    std::vector<NCPoly> images;
    const int ng = a->generator_count();
    for (int g = 0; g < ng; ++g)
        images.push_back(coproduct_image(triple, *a, g, 0, 1));
    for (int g = 0; g < ng; ++g)
        images.push_back(NCPoly::generator(triple, triple->global_generator(2, g)));
    return AlgebraHom(pair, triple, std::move(images), std::nullopt).apply(once);
}

NCPoly comultiply_right_iterated(const NCPoly& f) {
    AlgebraPtr a = f.algebra();
    require_square_qm(*a);
    NCPoly once = comultiply(f);
    AlgebraPtr pair = once.algebra();
    AlgebraPtr triple = AlgebraSpec::tensor(a, AlgebraSpec::tensor(a, a));
    std::vector<NCPoly> images;
    const int ng = a->generator_count();
    for (int g = 0; g < ng; ++g)
        images.push_back(NCPoly::generator(triple, triple->global_generator(0, g)));
    for (int g = 0; g < ng; ++g)
        images.push_back(coproduct_image(triple, *a, g, 1, 2));
    return AlgebraHom(pair, triple, std::move(images), std::nullopt).apply(once);
}

Laurent counit(const NCPoly& f) {
    const AlgebraSpec& a = *f.algebra();
    require_square_qm(a);
    const int t = a.qm_cols();
    Laurent out;
    for (const auto& [mon, c] : f.terms()) {
        bool diagonal = true;
        for (int g = 0; g < t * t && diagonal; ++g)
            if (mon.comps[0][g] != 0 && g / t != g % t)
                diagonal = false;
        if (diagonal)
            out += c;
    }
    return out;
}

Laurent counit(const GLElement& g) {
    return counit(g.num);  // counit(det^-1) = 1
}

// ---------------------------------------------------------------------------
// Antipode

namespace {

/// S(X_ij) as a numerator in O_q(M_t); one det^-1 is implied per factor.
NCPoly antipode_generator_numerator(AlgebraPtr algebra, int local) {
    const int t = algebra->qm_cols();
    const int i = local / t + 1;
    const int j = local % t + 1;
    std::vector<int> rows, cols;
    for (int r = 1; r <= t; ++r)
        if (r != j)
            rows.push_back(r);
    for (int c = 1; c <= t; ++c)
        if (c != i)
            cols.push_back(c);
    NCPoly minor = rows.empty() ? NCPoly::one(algebra) : quantum_minor(algebra, rows, cols);
    int e = debug::corruptions().flip_antipode_sign ? (j - i) : (i - j);
    Laurent sign = Laurent::term(Rational(e % 2 == 0 ? 1 : -1), e);
    return minor.scaled(sign);
}

}  // namespace

GLElement antipode(const NCPoly& f) {
    AlgebraPtr a = f.algebra();
    require_square_qm(*a);
    const int t = a->qm_cols();
    GLElement out = gl_element(NCPoly::zero(a), 0);
    for (const auto& [mon, coeff] : f.terms()) {
        // Expand the monomial and multiply cofactors in reversed order.
        std::vector<int> seq;
        for (int g = 0; g < t * t; ++g)
            for (int rep = 0; rep < mon.comps[0][g]; ++rep)
                seq.push_back(g);
        NCPoly prod = NCPoly::one(a).scaled(coeff);
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
            prod *= antipode_generator_numerator(a, *it);
        out = gl_add(out, gl_element(std::move(prod), static_cast<int>(seq.size())));
    }
    return out;
}

GLElement antipode(const GLElement& g) {
    GLElement s = antipode(g.num);
    s.det_power -= g.det_power;  // S(det^-1) = det
    return gl_normalized(std::move(s));
}

// ---------------------------------------------------------------------------
// GLElement arithmetic

GLElement gl_element(NCPoly num, int det_power) {
    if (num.is_zero())
        return GLElement{std::move(num), 0};
    return GLElement{std::move(num), det_power};
}

GLElement gl_mul(const GLElement& a, const GLElement& b) {
    return gl_element(a.num * b.num, a.det_power + b.det_power);
}

GLElement gl_add(const GLElement& a, const GLElement& b) {
    if (a.num.is_zero())
        return b;
    if (b.num.is_zero())
        return a;
    int e = std::max(a.det_power, b.det_power);
    AlgebraPtr alg = a.num.algebra();
    NCPoly num = a.num * quantum_det_power(alg, e - a.det_power) +
                 b.num * quantum_det_power(alg, e - b.det_power);
    return gl_element(std::move(num), e);
}

GLElement gl_scaled(const GLElement& a, const Laurent& c) {
    return gl_element(a.num.scaled(c), a.det_power);
}

bool gl_equal(const GLElement& a, const GLElement& b) {
    if (a.num.is_zero() || b.num.is_zero())
        return a.num.is_zero() && b.num.is_zero();
    AlgebraPtr alg = a.num.algebra();
    // Cross-multiply: num_a det^-ea = num_b det^-eb  iff  num_a det^eb = num_b det^ea.
    int e = std::max(a.det_power, b.det_power);
    return a.num * quantum_det_power(alg, e - a.det_power) ==
           b.num * quantum_det_power(alg, e - b.det_power);
}

bool gl_is_one(const GLElement& a) {
    if (a.num.is_zero())
        return false;
    return gl_equal(a, GLElement{NCPoly::one(a.num.algebra()), 0});
}

GLElement gl_normalized(GLElement g) {
    if (g.num.is_zero())
        return GLElement{std::move(g.num), 0};
    AlgebraPtr alg = g.num.algebra();
    const int t = alg->qm_cols();
    NCPoly det = quantum_det(alg);
    while (g.det_power > 0) {
        // Try exact division of every homogeneous component by det.
        NCPoly quotient(alg);
        bool ok = true;
        for (auto& [d, comp] : homogeneous_components(g.num)) {
            if (d < t) {
                ok = false;
                break;
            }
            std::vector<NormalMonomial> small = graded_basis(*alg, d - t);
            LaurentMatrix m(static_cast<int>(graded_dimension(*alg, d)),
                            static_cast<int>(small.size()) + 1);
            for (int c = 0; c < static_cast<int>(small.size()); ++c) {
                NCPoly col = det * NCPoly::monomial(alg, small[c]);
                std::vector<Laurent> cv = coordinate_vector(col, d);
                for (int r = 0; r < static_cast<int>(cv.size()); ++r)
                    m.add(r, c, cv[r]);
            }
            std::vector<Laurent> target = coordinate_vector(comp, d);
            for (int r = 0; r < static_cast<int>(target.size()); ++r)
                m.add(r, static_cast<int>(small.size()), target[r]);
            auto kb = kernel_basis(m);
            // A representable quotient shows up as a kernel vector whose last
            // coordinate is a unit.
            bool found = false;
            for (const auto& v : kb) {
                const Laurent& last = v.back();
                if (last.is_zero() || last.term_count() != 1)
                    continue;
                for (int c = 0; c < static_cast<int>(small.size()); ++c) {
                    if (!v[c].is_zero())
                        quotient.add_term(small[c], -v[c].div_exact(last));
                }
                found = true;
                break;
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (!ok)
            break;
        g.num = std::move(quotient);
        --g.det_power;
    }
    return g;
}

std::string gl_to_string(const GLElement& g) {
    std::string s = g.num.str();
    if (g.det_power != 0)
        s += " * det^" + std::to_string(-g.det_power);
    return s;
}

GLElement gl_parse(AlgebraPtr algebra, std::string_view text) {
    auto pos = text.rfind(" * det^");
    if (pos == std::string_view::npos)
        return gl_element(qm_parse(algebra, text), 0);
    int e = std::stoi(std::string(text.substr(pos + 7)));
    return gl_element(qm_parse(algebra, text.substr(0, pos)), -e);
}

// ---------------------------------------------------------------------------
// Bounded-filtration ideal membership in the SL quotient

bool sl_ideal_member(const NCPoly& h, int dmax) {
    AlgebraPtr alg = h.algebra();
    require_square_qm(*alg);
    const int t = alg->qm_cols();
    if (!h.is_zero()) {
        for (const auto& [mon, c] : h.terms())
            if (monomial_degree(*alg, mon) > dmax)
                throw std::invalid_argument("sl_ideal_member: element exceeds degree bound");
    } else {
        return true;
    }

    // Coordinates over the filtered basis of degrees 0..dmax.
    std::vector<NormalMonomial> filtered;
    for (int d = 0; d <= dmax; ++d) {
        auto b = graded_basis(*alg, d);
        filtered.insert(filtered.end(), b.begin(), b.end());
    }
    std::map<NormalMonomial, int> index;
    for (int i = 0; i < static_cast<int>(filtered.size()); ++i)
        index.emplace(filtered[i], i);

    auto to_vec = [&](const NCPoly& f) {
        std::vector<Laurent> v(filtered.size());
        for (const auto& [mon, c] : f.terms())
            v[index.at(mon)] = c;
        return v;
    };

    NCPoly det_minus_one = quantum_det(alg) - NCPoly::one(alg);
    std::vector<std::vector<Laurent>> span;
    for (int d = 0; d + t <= dmax; ++d)
        for (const NormalMonomial& m : graded_basis(*alg, d))
            span.push_back(to_vec(det_minus_one * NCPoly::monomial(alg, m)));

    return in_span(span, to_vec(h), static_cast<int>(filtered.size()));
}

std::map<int, NCPoly> homogeneous_components(const NCPoly& f) {
    std::map<int, NCPoly> out;
    for (const auto& [mon, c] : f.terms()) {
        int d = monomial_degree(*f.algebra(), mon);
        auto [it, inserted] = out.try_emplace(d, NCPoly(f.algebra()));
        it->second.add_term(mon, c);
    }
    return out;
}

}  // namespace qcoinv
