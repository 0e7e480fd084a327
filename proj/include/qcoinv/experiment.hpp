#pragma once

#include "qcoinv/lifting.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcoinv {

/// Thrown when a requested component dimension exceeds the configured ceiling.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentParams {
    CoactionKind kind = CoactionKind::Interior;
    int m = 0, n = 0, t = 0, r = 0;
    int dmax = 0;
    std::vector<Rational> lambdas;  // optional extra specialization points
    bool baseline = false;          // also run the q=1 rerun and compare
    long long ceiling = 4000;       // carrier component dimension guard

    Coaction coaction() const;
    std::string kind_name() const;
};

struct ExactnessCert {
    std::string point;  // "generic", "q=1", "q=<lambda>"
    int dim_b = 0;
    int rank_phi = 0;
    int rank_psi = 0;
    bool exact = false;
};

struct DegreeRecord {
    int d = 0;
    std::map<std::string, long long> dims;
    std::map<std::string, bool> checks;
    std::vector<ExactnessCert> coinvariant_complex;  // A -> B -> H (x) B
    std::vector<ExactnessCert> kernel_complex;       // I -> A -> B
    bool pass = true;
};

struct Report {
    std::string experiment;
    ExperimentParams params;
    std::vector<DegreeRecord> degrees;
    std::map<std::string, bool> global_checks;
    std::map<std::string, long long> extras;  // e.g. odd-degree coinvariant dims
    std::vector<std::string> findings;
    bool pass = true;
    std::int64_t wall_ms = 0;
};

/// Interior action checks: per source degree d <= dmax, the image of the
/// multiplication comorphism equals the coinvariants in carrier degree 2d
/// (containment first), and its kernel equals the (t+1)-minor ideal component.
/// Odd carrier degrees are reported, not asserted.
Report verify_interior(const ExperimentParams& p);

/// SL_r checks: coinvariants equal minor-product spans per X-degree; the
/// kernel of the free-algebra presentation map is generated in lambda-degree 2
/// (saturation at lambda-degree 3); at q=1 the degree-2 kernel contains the
/// classical Pluecker relations.
Report verify_slr(const ExperimentParams& p);

/// Conjugation checks: coinvariants equal the span of weighted-trace monomials,
/// the traces commute, and the presentation kernel is the commutator ideal.
Report verify_conjugation(const ExperimentParams& p);

/// Reruns the same pipeline with every structure map specialized at q=1 and
/// compares dimension tables degree-for-degree with the quantum run.
Report classical_baseline(const ExperimentParams& p);

/// Deterministic JSON (payload fields only; wall_ms carries the measured time
/// and is normalized by determinism comparisons).
std::string report_to_json(const Report& r);
std::string report_to_markdown(const Report& r);

/// The presentation homs used by the experiments, exposed for tests.
AlgebraHom interior_multiplication_hom(int m, int n, int t);
/// Free algebra on one generator per strictly increasing r-tuple of rows,
/// mapped to the corresponding maximal quantum minor. Reordered tuples would
/// only contribute unit multiples of the same minors, so the increasing family
/// generates the full minor subalgebra.
AlgebraHom slr_minor_hom(int n, int r);
AlgebraHom conjugation_trace_hom(int n);

/// (t+1)-minor ideal generators inside O_q(M_{m,n}); empty when t+1 exceeds
/// min(m,n).
std::vector<NCPoly> minor_ideal_generators(int m, int n, int t);
/// Commutator ideal generators of the weighted free algebra on n generators.
std::vector<NCPoly> commutator_ideal_generators(int n);

}  // namespace qcoinv
