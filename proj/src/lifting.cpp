#include "qcoinv/lifting.hpp"

#include <json.hpp>

#include <stdexcept>

namespace qcoinv {

EvalPoint EvalPoint::at(Rational l) {
    if (l.is_zero())
        throw std::invalid_argument("EvalPoint: lambda must be nonzero (q is a unit)");
    return {Kind::Specialized, std::move(l)};
}

std::string EvalPoint::str() const {
    switch (kind) {
        case Kind::Generic:
            return "generic";
        case Kind::Q1:
            return "q=1";
        default:
            return "q=" + lambda.str();
    }
}

bool check_complex(const GradedComplex& c, int d) {
    auto it = c.degrees.find(d);
    if (it == c.degrees.end())
        throw std::out_of_range("check_complex: degree not present");
    return matmul(it->second.psi, it->second.phi).is_zero();
}

ExactnessEntry exactness(const GradedComplex& c, int d, const EvalPoint& at) {
    auto it = c.degrees.find(d);
    if (it == c.degrees.end())
        throw std::out_of_range("exactness: degree not present");
    const DegreeEntry& e = it->second;
    ExactnessEntry out;
    out.degree = d;
    out.point = at;
    out.dim_b = e.phi.rows();
    if (e.psi.cols() != e.phi.rows())
        throw std::invalid_argument("exactness: psi domain must equal phi codomain");
    if (at.kind == EvalPoint::Kind::Generic) {
        out.rank_phi = rank(e.phi);
        out.rank_psi = rank(e.psi);
    } else {
        Rational l = at.kind == EvalPoint::Kind::Q1 ? Rational(1) : at.lambda;
        out.rank_phi = rank_at(e.phi, l);
        out.rank_psi = rank_at(e.psi, l);
    }
    out.exact = out.rank_phi + out.rank_psi == out.dim_b;
    return out;
}

LaurentMatrix hom_matrix(const AlgebraHom& hom, int d) {
    if (!hom.degree_multiplier())
        throw std::invalid_argument("hom_matrix: hom needs a degree multiplier");
    const int target_degree = *hom.degree_multiplier() * d;
    std::vector<NormalMonomial> src = graded_basis(*hom.source(), d);
    LaurentMatrix m(static_cast<int>(graded_dimension(*hom.target(), target_degree)),
                    static_cast<int>(src.size()));
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
        NCPoly img = hom.apply(NCPoly::monomial(hom.source(), src[c]));
        std::vector<Laurent> col = coordinate_vector(img, target_degree);
        for (int r = 0; r < static_cast<int>(col.size()); ++r)
            m.add(r, c, col[r]);
    }
    return m;
}

DegreeEntry build_coinvariant_complex(const Coaction& c, const AlgebraHom& hom, int d) {
    DegreeEntry out;
    out.psi = coinvariance_matrix(c, d);
    const int mult = hom.degree_multiplier().value_or(1);
    const int dim_b = static_cast<int>(graded_dimension(*c.carrier, d));
    if (d % mult == 0) {
        out.phi = hom_matrix(hom, d / mult);
    } else {
        out.phi = LaurentMatrix(dim_b, 0);  // no source component maps here
    }
    if (out.phi.rows() != dim_b)
        throw std::logic_error("build_coinvariant_complex: dimension mismatch");
    return out;
}

std::vector<std::vector<Laurent>> ideal_component_span(AlgebraPtr algebra,
                                                       const std::vector<NCPoly>& gens, int d) {
    std::vector<std::vector<Laurent>> span;
    for (const NCPoly& g : gens) {
        if (g.is_zero())
            continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("ideal_component_span: homogeneous generators required");
        const int dg = g.homogeneous_degree();
        if (dg > d)
            continue;
        for (int d1 = 0; d1 + dg <= d; ++d1) {
            const int d2 = d - dg - d1;
            for (const NormalMonomial& m1 : graded_basis(*algebra, d1)) {
                NCPoly leftprod = NCPoly::monomial(algebra, m1) * g;
                for (const NormalMonomial& m2 : graded_basis(*algebra, d2)) {
                    NCPoly w = leftprod * NCPoly::monomial(algebra, m2);
                    if (!w.is_zero())
                        span.push_back(coordinate_vector(w, d));
                }
            }
        }
    }
    return span;
}

DegreeEntry build_kernel_complex(const std::vector<NCPoly>& ideal_gens, const AlgebraHom& hom,
                                 int d) {
    DegreeEntry out;
    const int dim_a = static_cast<int>(graded_dimension(*hom.source(), d));
    std::vector<std::vector<Laurent>> span = ideal_component_span(hom.source(), ideal_gens, d);
    LaurentMatrix eta(dim_a, static_cast<int>(span.size()));
    for (int c = 0; c < static_cast<int>(span.size()); ++c)
        for (int r = 0; r < dim_a; ++r)
            if (!span[c][r].is_zero())
                eta.add(r, c, span[c][r]);
    out.phi = std::move(eta);
    out.psi = hom_matrix(hom, d);
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::ordered_json matrix_to_json(const LaurentMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            entries.push_back({r, c, v.str()});
    j["entries"] = std::move(entries);
    return j;
}

LaurentMatrix matrix_from_json(const nlohmann::json& j) {
    LaurentMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries"))
        m.add(e.at(0).get<int>(), e.at(1).get<int>(), Laurent::parse(e.at(2).get<std::string>()));
    return m;
}

}  // namespace

std::string complex_to_json(const GradedComplex& c) {
    nlohmann::ordered_json j;
    j["labels"] = {{"a", c.label_a}, {"b", c.label_b}, {"c", c.label_c}};
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (const auto& [d, entry] : c.degrees) {
        nlohmann::ordered_json je;
        je["d"] = d;
        je["phi"] = matrix_to_json(entry.phi);
        je["psi"] = matrix_to_json(entry.psi);
        degrees.push_back(std::move(je));
    }
    j["degrees"] = std::move(degrees);
    return j.dump(2);
}

GradedComplex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GradedComplex c;
    c.label_a = j.at("labels").at("a").get<std::string>();
    c.label_b = j.at("labels").at("b").get<std::string>();
    c.label_c = j.at("labels").at("c").get<std::string>();
    for (const auto& je : j.at("degrees")) {
        DegreeEntry e;
        e.phi = matrix_from_json(je.at("phi"));
        e.psi = matrix_from_json(je.at("psi"));
        c.degrees.emplace(je.at("d").get<int>(), std::move(e));
    }
    return c;
}

}  // namespace qcoinv
