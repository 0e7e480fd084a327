#include "qcoinv/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace qcoinv {

Coaction ExperimentParams::coaction() const {
    switch (kind) {
        case CoactionKind::Interior:
            return Coaction::interior(m, n, t);
        case CoactionKind::SLr:
            return Coaction::slr(n, r);
        default:
            return Coaction::conjugation(n);
    }
}

std::string ExperimentParams::kind_name() const {
    switch (kind) {
        case CoactionKind::Interior:
            return "interior";
        case CoactionKind::SLr:
            return "slr";
        default:
            return "conjugation";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void guard_dimension(long long dim, const ExperimentParams& p, const std::string& what) {
    if (dim > p.ceiling)
        throw SizeGuardError(what + " has dimension " + std::to_string(dim) +
                             " above the ceiling " + std::to_string(p.ceiling));
}

LaurentMatrix prep(const LaurentMatrix& m, bool classical) {
    return classical ? specialize_matrix(m, Rational(1)) : m;
}

std::vector<Laurent> prep_vec(const std::vector<Laurent>& v, bool classical) {
    if (!classical)
        return v;
    std::vector<Laurent> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = Laurent(v[i].eval_at(Rational(1)));
    return out;
}

/// Exactness certificates for one degree entry. The generic ranks are passed
/// in (already computed for the dimension table); q=1 and any requested
/// lambdas are certified by specialization. Classical-mode matrices are
/// already evaluated, so only the q=1 certificate is meaningful there.
std::vector<ExactnessCert> certify(const DegreeEntry& e, int rank_phi_generic,
                                   int rank_psi_generic, bool classical,
                                   const std::vector<Rational>& lambdas) {
    const int dim_b = e.phi.rows();
    std::vector<ExactnessCert> out;
    if (classical) {
        out.push_back({"q=1", dim_b, rank_phi_generic, rank_psi_generic,
                       rank_phi_generic + rank_psi_generic == dim_b});
        return out;
    }
    auto push_at = [&](const std::string& name, const Rational& l) {
        int rp = rank_at(e.phi, l);
        int rs = rank_at(e.psi, l);
        out.push_back({name, dim_b, rp, rs, rp + rs == dim_b});
    };
    push_at("q=1", Rational(1));
    out.push_back({"generic", dim_b, rank_phi_generic, rank_psi_generic,
                   rank_phi_generic + rank_psi_generic == dim_b});
    for (const Rational& l : lambdas)
        push_at("q=" + l.str(), l);
    return out;
}

bool certs_lift(const std::vector<ExactnessCert>& certs) {
    // Instance-wise direction of the reduction principle: exact at q=1 must
    // imply exact generically. Vacuous when no generic certificate exists
    // (classical-mode runs certify only at q=1).
    bool q1 = false, generic = false, has_generic = false;
    for (const auto& c : certs) {
        if (c.point == "q=1")
            q1 = c.exact;
        if (c.point == "generic") {
            has_generic = true;
            generic = c.exact;
        }
    }
    return !has_generic || !q1 || generic;
}

long long partition_count(int d, int maxpart) {
    std::vector<long long> ways(d + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= maxpart; ++part)
        for (int s = part; s <= d; ++s)
            ways[s] += ways[s - part];
    return ways[d];
}

void finish(Report& r, Clock::time_point start) {
    for (const auto& rec : r.degrees)
        r.pass = r.pass && rec.pass;
    for (const auto& [k, v] : r.global_checks)
        r.pass = r.pass && v;
    r.wall_ms = ms_since(start);
}

}  // namespace

// ---------------------------------------------------------------------------
// Presentation homs and ideal generators

AlgebraHom interior_multiplication_hom(int m, int n, int t) {
    AlgebraPtr source = AlgebraSpec::quantum_matrix(m, n);
    AlgebraPtr target = AlgebraSpec::tensor(AlgebraSpec::quantum_matrix(m, t),
                                            AlgebraSpec::quantum_matrix(t, n));
    std::vector<NCPoly> images;
    for (int g = 0; g < m * n; ++g) {
        const int i = g / n;
        const int j = g % n;
        NCPoly img(target);
        for (int l = 0; l < t; ++l) {
            NCPoly a = NCPoly::generator(target, target->global_generator(0, i * t + l));
            NCPoly b = NCPoly::generator(target, target->global_generator(1, l * n + j));
            img += a * b;
        }
        images.push_back(std::move(img));
    }
    return AlgebraHom(source, target, std::move(images), 2);
}

namespace {

std::vector<std::vector<int>> increasing_tuples(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r);
    for (int k = 0; k < r; ++k)
        cur[k] = k + 1;
    while (true) {
        out.push_back(cur);
        int k = r - 1;
        while (k >= 0 && cur[k] == n - (r - 1 - k))
            --k;
        if (k < 0)
            break;
        ++cur[k];
        for (int j = k + 1; j < r; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

AlgebraHom slr_minor_hom(int n, int r) {
    auto tuples = increasing_tuples(n, r);
    std::vector<std::string> labels;
    for (const auto& tup : tuples) {
        std::string s = "L";
        for (int x : tup)
            s += std::to_string(x);
        labels.push_back(std::move(s));
    }
    AlgebraPtr source =
        AlgebraSpec::free_algebra(std::move(labels), std::vector<int>(tuples.size(), 1));
    AlgebraPtr target = AlgebraSpec::quantum_matrix(n, r);
    std::vector<int> all_cols(r);
    std::iota(all_cols.begin(), all_cols.end(), 1);
    std::vector<NCPoly> images;
    for (const auto& tup : tuples)
        images.push_back(quantum_minor(target, tup, all_cols));
    return AlgebraHom(source, target, std::move(images), r);
}

AlgebraHom conjugation_trace_hom(int n) {
    std::vector<std::string> labels;
    std::vector<int> weights;
    for (int i = 1; i <= n; ++i) {
        labels.push_back("g" + std::to_string(i));
        weights.push_back(i);
    }
    AlgebraPtr source = AlgebraSpec::free_algebra(std::move(labels), std::move(weights));
    AlgebraPtr target = AlgebraSpec::quantum_matrix(n, n);
    std::vector<NCPoly> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(quantum_trace(n, i));
    return AlgebraHom(source, target, std::move(images), 1);
}

std::vector<NCPoly> minor_ideal_generators(int m, int n, int t) {
    std::vector<NCPoly> gens;
    if (t + 1 > std::min(m, n))
        return gens;
    AlgebraPtr a = AlgebraSpec::quantum_matrix(m, n);
    for (const auto& rows : increasing_tuples(m, t + 1))
        for (const auto& cols : increasing_tuples(n, t + 1))
            gens.push_back(quantum_minor(a, rows, cols));
    return gens;
}

std::vector<NCPoly> commutator_ideal_generators(int n) {
    std::vector<std::string> labels;
    std::vector<int> weights;
    for (int i = 1; i <= n; ++i) {
        labels.push_back("g" + std::to_string(i));
        weights.push_back(i);
    }
    AlgebraPtr f = AlgebraSpec::free_algebra(std::move(labels), std::move(weights));
    std::vector<NCPoly> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            NCPoly gi = NCPoly::generator(f, i), gj = NCPoly::generator(f, j);
            gens.push_back(gi * gj - gj * gi);
        }
    return gens;
}

// ---------------------------------------------------------------------------
// Interior experiment

namespace {

Report run_interior(const ExperimentParams& p, bool classical) {
    auto start = Clock::now();
    Report rep;
    rep.experiment = classical ? "interior-q1" : "interior";
    rep.params = p;
    Coaction c = p.coaction();
    // Guard every component this run will touch before any expensive setup
    // (the ideal generators alone can be enormous for large t).
    for (int D = 0; D <= 2 * p.dmax; ++D)
        guard_dimension(graded_dimension(*c.carrier, D), p, "carrier degree " + std::to_string(D));
    AlgebraHom hom = interior_multiplication_hom(p.m, p.n, p.t);
    std::vector<NCPoly> ideal_gens = minor_ideal_generators(p.m, p.n, p.t);

    for (int d = 0; d <= p.dmax; ++d) {
        const int D = 2 * d;
        DegreeRecord rec;
        rec.d = d;

        DegreeEntry inv = build_coinvariant_complex(c, hom, D);
        inv.phi = prep(inv.phi, classical);
        inv.psi = prep(inv.psi, classical);
        DegreeEntry ker = build_kernel_complex(ideal_gens, hom, d);
        ker.phi = prep(ker.phi, classical);
        ker.psi = prep(ker.psi, classical);

        const long long dim_carrier = graded_dimension(*c.carrier, D);
        const long long dim_source = inv.phi.cols();
        const int rank_mu = rank(inv.phi);
        const int rank_psi = rank(inv.psi);
        const int rank_ideal = rank(ker.phi);
        const long long dim_coinv = dim_carrier - rank_psi;
        const long long dim_image = rank_mu;
        const long long dim_kernel = dim_source - rank_mu;
        const long long dim_ideal = rank_ideal;

        rec.dims["carrier"] = dim_carrier;
        rec.dims["source"] = dim_source;
        rec.dims["coinvariants"] = dim_coinv;
        rec.dims["image"] = dim_image;
        rec.dims["kernel"] = dim_kernel;
        rec.dims["ideal"] = dim_ideal;

        // Containments first, dimension equalities second.
        rec.checks["image_in_coinvariants"] = matmul(inv.psi, inv.phi).is_zero();
        rec.checks["coinvariants_equal_image"] = dim_coinv == dim_image;
        rec.checks["ideal_in_kernel"] = matmul(ker.psi, ker.phi).is_zero();
        rec.checks["kernel_equals_ideal"] = dim_kernel == dim_ideal;

        rec.coinvariant_complex = certify(inv, rank_mu, rank_psi, classical, p.lambdas);
        rec.kernel_complex = certify(ker, rank_ideal, rank_mu, classical, p.lambdas);
        rec.checks["lifting_direction"] =
            certs_lift(rec.coinvariant_complex) && certs_lift(rec.kernel_complex);

        for (const auto& [k, v] : rec.checks)
            rec.pass = rec.pass && v;
        rep.degrees.push_back(std::move(rec));
    }

    // Odd carrier degrees: computed and reported, no assertion attached.
    for (int D = 1; D <= 2 * p.dmax; D += 2) {
        LaurentMatrix psi = prep(coinvariance_matrix(c, D), classical);
        long long dim = graded_dimension(*c.carrier, D) - rank(psi);
        rep.extras["odd_coinv_dim_degree_" + std::to_string(D)] = dim;
        rep.findings.push_back("carrier degree " + std::to_string(D) +
                               " (odd): coinvariant dimension " + std::to_string(dim));
    }

    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------
// SL_r experiment

Report run_slr(const ExperimentParams& p, bool classical) {
    auto start = Clock::now();
    Report rep;
    rep.experiment = classical ? "slr-q1" : "slr";
    rep.params = p;
    Coaction c = p.coaction();
    for (int d = 0; d <= std::max(p.dmax, 3 * p.r); ++d)
        guard_dimension(graded_dimension(*c.carrier, d), p, "carrier degree " + std::to_string(d));
    AlgebraHom hom = slr_minor_hom(p.n, p.r);
    AlgebraPtr free_alg = hom.source();

    for (int d = 0; d <= p.dmax; ++d) {
        DegreeRecord rec;
        rec.d = d;
        const long long dim_carrier = graded_dimension(*c.carrier, d);
        // The slr reduction must be assembled at the evaluation point (its
        // filtration echelon is point-dependent), so each certificate builds
        // its own psi instead of specializing the generic one.
        DegreeEntry inv;
        inv.psi = classical ? coinvariance_matrix_at(c, d, Rational(1))
                            : coinvariance_matrix(c, d);
        if (d % p.r == 0) {
            inv.phi = prep(hom_matrix(hom, d / p.r), classical);
        } else {
            inv.phi = LaurentMatrix(static_cast<int>(dim_carrier), 0);
        }

        const int rank_psi = rank(inv.psi);
        const int rank_phi = rank(inv.phi);
        const long long dim_coinv = dim_carrier - rank_psi;
        const long long dim_image = rank_phi;

        rec.dims["carrier"] = dim_carrier;
        rec.dims["coinvariants"] = dim_coinv;
        rec.dims["minor_span"] = dim_image;

        if (d % p.r == 0) {
            rec.checks["image_in_coinvariants"] = matmul(inv.psi, inv.phi).is_zero();
            rec.checks["coinvariants_equal_minor_span"] = dim_coinv == dim_image;
        } else {
            rec.checks["offdegree_coinvariants_zero"] = dim_coinv == 0;
            rep.findings.push_back("X-degree " + std::to_string(d) +
                                   " not divisible by r: coinvariant dimension " +
                                   std::to_string(dim_coinv));
        }
        const int dim_b = inv.phi.rows();
        if (classical) {
            rec.coinvariant_complex.push_back(
                {"q=1", dim_b, rank_phi, rank_psi, rank_phi + rank_psi == dim_b});
        } else {
            auto push_at = [&](const std::string& name, const Rational& l) {
                int rp = rank_at(inv.phi, l);
                int rs = rank(coinvariance_matrix_at(c, d, l));
                rec.coinvariant_complex.push_back({name, dim_b, rp, rs, rp + rs == dim_b});
            };
            push_at("q=1", Rational(1));
            rec.coinvariant_complex.push_back(
                {"generic", dim_b, rank_phi, rank_psi, rank_phi + rank_psi == dim_b});
            for (const Rational& l : p.lambdas)
                push_at("q=" + l.str(), l);
        }
        rec.checks["lifting_direction"] = certs_lift(rec.coinvariant_complex);

        for (const auto& [k, v] : rec.checks)
            rec.pass = rec.pass && v;
        rep.degrees.push_back(std::move(rec));
    }

    // Kernel of the presentation map, lambda-degrees 1..3: dimensions, the
    // degree-2 generation (saturation at degree 3), and the q=1 Pluecker check.
    {
        LaurentMatrix h1 = prep(hom_matrix(hom, 1), classical);
        LaurentMatrix h2 = prep(hom_matrix(hom, 2), classical);
        LaurentMatrix h3 = prep(hom_matrix(hom, 3), classical);
        auto k2 = kernel_basis(h2);
        const long long dim_k1 = h1.cols() - rank(h1);
        const long long dim_k3 = h3.cols() - rank(h3);
        rep.extras["kernel_dim_lambda_degree_1"] = dim_k1;
        rep.extras["kernel_dim_lambda_degree_2"] = static_cast<long long>(k2.size());
        rep.extras["kernel_dim_lambda_degree_3"] = dim_k3;

        std::vector<std::vector<Laurent>> generated;
        bool contained = true;
        const int ngens = free_alg->generator_count();
        for (const auto& kv : k2) {
            NCPoly kpoly = from_coordinates(free_alg, 2, kv);
            for (int g = 0; g < ngens; ++g) {
                NCPoly gen = NCPoly::generator(free_alg, g);
                for (const NCPoly& w : {gen * kpoly, kpoly * gen}) {
                    std::vector<Laurent> v = coordinate_vector(w, 3);
                    for (const Laurent& x : mat_vec(h3, v))
                        contained = contained && x.is_zero();
                    generated.push_back(std::move(v));
                }
            }
        }
        const long long dim_generated = span_rank(generated, h3.cols());
        rep.extras["kernel_dim_lambda_degree_3_generated"] = dim_generated;
        rep.global_checks["ideal_products_in_kernel"] = contained;
        rep.global_checks["kernel_generated_in_lambda_degree_2"] = dim_generated == dim_k3;

        // Classical Pluecker relations inside the q=1 specialization of K_2.
        if (p.n >= 4 && p.r == 2) {
            std::vector<std::vector<Laurent>> k2_at_1;
            for (const auto& kv : k2)
                k2_at_1.push_back(prep_vec(kv, true));
            auto tuples = increasing_tuples(p.n, 2);
            std::map<std::pair<int, int>, int> gen_of;
            for (int g = 0; g < static_cast<int>(tuples.size()); ++g)
                gen_of[{tuples[g][0], tuples[g][1]}] = g;
            bool all_in = true;
            for (const auto& quad : increasing_tuples(p.n, 4)) {
                const int i = quad[0], j = quad[1], k = quad[2], l = quad[3];
                NCPoly rel(free_alg);
                auto word = [&](int g1, int g2) {
                    return NCPoly::generator(free_alg, g1) * NCPoly::generator(free_alg, g2);
                };
                rel += word(gen_of.at({i, j}), gen_of.at({k, l}));
                rel -= word(gen_of.at({i, k}), gen_of.at({j, l}));
                rel += word(gen_of.at({i, l}), gen_of.at({j, k}));
                all_in = all_in && in_span(k2_at_1, coordinate_vector(rel, 2),
                                           static_cast<int>(graded_dimension(*free_alg, 2)));
            }
            rep.global_checks["plucker_relations_in_q1_kernel"] = all_in;
        }
    }

    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------
// Conjugation experiment

Report run_conjugation(const ExperimentParams& p, bool classical) {
    auto start = Clock::now();
    Report rep;
    rep.experiment = classical ? "conjugation-q1" : "conjugation";
    rep.params = p;
    Coaction c = p.coaction();
    for (int d = 0; d <= p.dmax; ++d)
        guard_dimension(graded_dimension(*c.carrier, d), p, "carrier degree " + std::to_string(d));
    guard_dimension(graded_dimension(*c.carrier, p.n), p,
                    "carrier degree " + std::to_string(p.n));
    AlgebraHom hom = conjugation_trace_hom(p.n);
    AlgebraPtr free_alg = hom.source();
    std::vector<NCPoly> ideal_gens = commutator_ideal_generators(p.n);

    // Pairwise commutators of the weighted traces vanish exactly.
    {
        bool all_zero = true;
        std::vector<NCPoly> taus;
        for (int i = 1; i <= p.n; ++i)
            taus.push_back(quantum_trace(p.n, i));
        for (int i = 0; i < p.n; ++i)
            for (int j = i + 1; j < p.n; ++j) {
                NCPoly comm = taus[i] * taus[j] - taus[j] * taus[i];
                if (classical)
                    comm = comm.specialized(Rational(1));
                all_zero = all_zero && comm.is_zero();
            }
        rep.global_checks["traces_commute"] = all_zero;
    }

    for (int d = 0; d <= p.dmax; ++d) {
        DegreeRecord rec;
        rec.d = d;
        DegreeEntry inv = build_coinvariant_complex(c, hom, d);
        inv.phi = prep(inv.phi, classical);
        inv.psi = prep(inv.psi, classical);
        DegreeEntry ker = build_kernel_complex(ideal_gens, hom, d);
        ker.phi = prep(ker.phi, classical);
        ker.psi = prep(ker.psi, classical);

        const long long dim_carrier = graded_dimension(*c.carrier, d);
        const long long dim_free = inv.phi.cols();
        const int rank_phi = rank(inv.phi);
        const int rank_psi = rank(inv.psi);
        const int rank_ideal = rank(ker.phi);
        const long long dim_coinv = dim_carrier - rank_psi;
        const long long n_trace_monomials = partition_count(d, p.n);

        // Sorted trace monomials (one per weighted partition of d).
        std::vector<std::vector<Laurent>> trace_monomials;
        {
            std::vector<NormalMonomial> words = graded_basis(*free_alg, d);
            for (const NormalMonomial& w : words) {
                if (!std::is_sorted(w.comps[0].begin(), w.comps[0].end()))
                    continue;
                NCPoly img = hom.apply(NCPoly::monomial(free_alg, w));
                std::vector<Laurent> v = prep_vec(coordinate_vector(img, d), classical);
                trace_monomials.push_back(std::move(v));
            }
        }
        const long long dim_trace_span =
            span_rank(trace_monomials, static_cast<int>(dim_carrier));

        rec.dims["carrier"] = dim_carrier;
        rec.dims["free_words"] = dim_free;
        rec.dims["coinvariants"] = dim_coinv;
        rec.dims["trace_monomials"] = n_trace_monomials;
        rec.dims["trace_span"] = dim_trace_span;
        rec.dims["kernel"] = dim_free - rank_phi;
        rec.dims["commutator_ideal"] = rank_ideal;

        bool contained = matmul(inv.psi, inv.phi).is_zero();
        rec.checks["image_in_coinvariants"] = contained;
        rec.checks["coinvariants_equal_trace_span"] = dim_coinv == dim_trace_span;
        rec.checks["trace_monomials_independent"] =
            dim_trace_span == n_trace_monomials;
        rec.checks["ideal_in_kernel"] = matmul(ker.psi, ker.phi).is_zero();
        rec.checks["kernel_equals_commutator_ideal"] = dim_free - rank_phi == rank_ideal;

        rec.coinvariant_complex = certify(inv, rank_phi, rank_psi, classical, p.lambdas);
        rec.kernel_complex = certify(ker, rank_ideal, rank_phi, classical, p.lambdas);
        rec.checks["lifting_direction"] =
            certs_lift(rec.coinvariant_complex) && certs_lift(rec.kernel_complex);

        for (const auto& [k, v] : rec.checks)
            rec.pass = rec.pass && v;
        rep.degrees.push_back(std::move(rec));
    }

    finish(rep, start);
    return rep;
}

Report run_experiment(const ExperimentParams& p, bool classical) {
    switch (p.kind) {
        case CoactionKind::Interior:
            return run_interior(p, classical);
        case CoactionKind::SLr:
            return run_slr(p, classical);
        default:
            return run_conjugation(p, classical);
    }
}

}  // namespace

Report verify_interior(const ExperimentParams& p) {
    return run_interior(p, false);
}

Report verify_slr(const ExperimentParams& p) {
    return run_slr(p, false);
}

Report verify_conjugation(const ExperimentParams& p) {
    return run_conjugation(p, false);
}

Report classical_baseline(const ExperimentParams& p) {
    auto start = Clock::now();
    Report quantum = run_experiment(p, false);
    Report classical = run_experiment(p, true);
    Report out = classical;
    out.experiment = p.kind_name() + "-baseline";
    bool match = quantum.degrees.size() == classical.degrees.size();
    for (size_t i = 0; match && i < quantum.degrees.size(); ++i)
        match = quantum.degrees[i].dims == classical.degrees[i].dims;
    match = match && quantum.extras == classical.extras;
    out.global_checks["dimension_tables_match_quantum"] = match;
    out.pass = out.pass && match && quantum.pass;
    out.wall_ms = ms_since(start);
    return out;
}

// ---------------------------------------------------------------------------
// Report rendering

namespace {

nlohmann::ordered_json cert_json(const ExactnessCert& c) {
    return {{"point", c.point},
            {"dim_b", c.dim_b},
            {"rank_phi", c.rank_phi},
            {"rank_psi", c.rank_psi},
            {"exact", c.exact}};
}

}  // namespace

std::string report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["experiment"] = r.experiment;
    nlohmann::ordered_json params;
    params["kind"] = r.params.kind_name();
    params["m"] = r.params.m;
    params["n"] = r.params.n;
    params["t"] = r.params.t;
    params["r"] = r.params.r;
    params["dmax"] = r.params.dmax;
    nlohmann::ordered_json lambdas = nlohmann::ordered_json::array();
    for (const Rational& l : r.params.lambdas)
        lambdas.push_back(l.str());
    params["lambdas"] = std::move(lambdas);
    params["ceiling"] = r.params.ceiling;
    j["params"] = std::move(params);

    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (const DegreeRecord& rec : r.degrees) {
        nlohmann::ordered_json jd;
        jd["d"] = rec.d;
        jd["dims"] = rec.dims;
        jd["checks"] = rec.checks;
        nlohmann::ordered_json inv_certs = nlohmann::ordered_json::array();
        for (const auto& c : rec.coinvariant_complex)
            inv_certs.push_back(cert_json(c));
        jd["coinvariant_complex"] = std::move(inv_certs);
        nlohmann::ordered_json ker_certs = nlohmann::ordered_json::array();
        for (const auto& c : rec.kernel_complex)
            ker_certs.push_back(cert_json(c));
        jd["kernel_complex"] = std::move(ker_certs);
        jd["pass"] = rec.pass;
        degrees.push_back(std::move(jd));
    }
    j["degrees"] = std::move(degrees);
    j["global_checks"] = r.global_checks;
    j["extras"] = r.extras;
    j["findings"] = r.findings;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["wall_ms"] = r.wall_ms;
    return j.dump(2);
}

std::string report_to_markdown(const Report& r) {
    std::ostringstream os;
    os << "# " << r.experiment << " report\n\n";
    os << "params: kind=" << r.params.kind_name() << " m=" << r.params.m << " n=" << r.params.n
       << " t=" << r.params.t << " r=" << r.params.r << " dmax=" << r.params.dmax
       << " ceiling=" << r.params.ceiling;
    if (!r.params.lambdas.empty()) {
        os << " lambdas=";
        for (size_t i = 0; i < r.params.lambdas.size(); ++i)
            os << (i ? "," : "") << r.params.lambdas[i].str();
    }
    os << "\n\n## Degrees\n\n";
    for (const DegreeRecord& rec : r.degrees) {
        os << "### d = " << rec.d << (rec.pass ? "  [pass]" : "  [FAIL]") << "\n\n";
        os << "| quantity | value |\n|---|---|\n";
        for (const auto& [k, v] : rec.dims)
            os << "| " << k << " | " << v << " |\n";
        for (const auto& [k, v] : rec.checks)
            os << "| check: " << k << " | " << (v ? "pass" : "FAIL") << " |\n";
        auto render_certs = [&](const char* name, const std::vector<ExactnessCert>& certs) {
            for (const auto& c : certs)
                os << "| " << name << " @ " << c.point << " | rank_phi=" << c.rank_phi
                   << " rank_psi=" << c.rank_psi << " dim_b=" << c.dim_b
                   << (c.exact ? " exact" : " NOT exact") << " |\n";
        };
        render_certs("coinvariant complex", rec.coinvariant_complex);
        render_certs("kernel complex", rec.kernel_complex);
        os << "\n";
    }
    if (!r.global_checks.empty()) {
        os << "## Global checks\n\n";
        for (const auto& [k, v] : r.global_checks)
            os << "- " << k << ": " << (v ? "pass" : "FAIL") << "\n";
        os << "\n";
    }
    if (!r.extras.empty()) {
        os << "## Extra dimensions\n\n";
        for (const auto& [k, v] : r.extras)
            os << "- " << k << " = " << v << "\n";
        os << "\n";
    }
    if (!r.findings.empty()) {
        os << "## Findings\n\n";
        for (const auto& f : r.findings)
            os << "- " << f << "\n";
        os << "\n";
    }
    os << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
    os << "wall_ms: " << r.wall_ms << "\n";
    return os.str();
}

}  // namespace qcoinv
