#include "qcoinv/debug.hpp"
#include "qcoinv/experiment.hpp"
#include "qcoinv/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

struct CliOptions {
    qcoinv::ExperimentParams params;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    std::vector<std::string> lambda_texts;
};

int write_report(const qcoinv::Report& report, const CliOptions& opt) {
    std::string text = opt.format == "markdown" ? qcoinv::report_to_markdown(report)
                                                : qcoinv::report_to_json(report);
    if (opt.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "cannot open output file: " << opt.out << "\n";
            return 2;
        }
        f << text << "\n";
    }
    return report.pass ? 0 : 1;
}

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--dmax", opt.params.dmax, "degree bound")->required();
    cmd->add_option("--format", opt.format, "json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
    cmd->add_option("--seed", opt.seed, "seed for randomized suites");
    cmd->add_option("--ceiling", opt.params.ceiling, "component dimension ceiling")
        ->envname("QCOINV_CEILING");
    cmd->add_option("--lambda", opt.lambda_texts,
                    "extra specialization point (rational, e.g. 3/2); repeatable");
    cmd->add_flag("--baseline", opt.params.baseline, "also run the q=1 rerun and compare");
}

int parse_lambdas(CliOptions& opt) {
    for (const std::string& s : opt.lambda_texts) {
        qcoinv::Rational l;
        try {
            l = qcoinv::Rational::parse(s);
        } catch (const std::exception&) {
            std::cerr << "invalid --lambda value: " << s << "\n";
            return 2;
        }
        if (l.is_zero()) {
            std::cerr << "--lambda must be nonzero (q is invertible)\n";
            return 2;
        }
        opt.params.lambdas.push_back(std::move(l));
    }
    return 0;
}

int run_verify(CliOptions& opt) {
    if (int rc = parse_lambdas(opt))
        return rc;
    try {
        qcoinv::Report report;
        if (opt.params.baseline) {
            report = qcoinv::classical_baseline(opt.params);
        } else {
            switch (opt.params.kind) {
                case qcoinv::CoactionKind::Interior:
                    report = qcoinv::verify_interior(opt.params);
                    break;
                case qcoinv::CoactionKind::SLr:
                    report = qcoinv::verify_slr(opt.params);
                    break;
                default:
                    report = qcoinv::verify_conjugation(opt.params);
                    break;
            }
        }
        return write_report(report, opt);
    } catch (const qcoinv::SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    }
}

int run_selftest(std::uint64_t seed) {
    auto results = qcoinv::run_selftest(seed);
    int checks = 0, failures = 0;
    for (const auto& r : results) {
        std::cout << "suite " << r.name << ": " << r.checks << " checks, " << r.failures
                  << " failures\n";
        for (const auto& m : r.messages)
            std::cout << "  failed: " << m << "\n";
        checks += r.checks;
        failures += r.failures;
    }
    std::cout << "total: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for quantized coinvariant theorems"};
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* verify = app.add_subcommand("verify", "run a verification experiment");
    verify->require_subcommand(1);

    CLI::App* interior = verify->add_subcommand("interior", "GL_t on matrix pairs");
    interior->add_option("--m", opt.params.m, "rows of the left factor")->required();
    interior->add_option("--n", opt.params.n, "columns of the right factor")->required();
    interior->add_option("--t", opt.params.t, "size of the acting quantum group")->required();
    add_common(interior, opt);

    CLI::App* slr = verify->add_subcommand("slr", "SL_r on rectangular matrices");
    slr->add_option("--n", opt.params.n, "rows")->required();
    slr->add_option("--r", opt.params.r, "columns / group size")->required();
    add_common(slr, opt);

    CLI::App* conj = verify->add_subcommand("conjugation", "GL_n conjugation on square matrices");
    conj->add_option("--n", opt.params.n, "matrix size")->required();
    add_common(conj, opt);

    CLI::App* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--seed", opt.seed, "seed for randomized suites");

    // Negative controls: corrupt a structural constant so the suites must fail.
    // Hidden; they exist to prove the tests can fail.
    bool corrupt_row = false, corrupt_antipode = false;
    for (CLI::App* cmd : {selftest, interior, slr, conj}) {
        cmd->add_flag("--corrupt-row-relation", corrupt_row)->group("");
        cmd->add_flag("--corrupt-antipode-sign", corrupt_antipode)->group("");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    qcoinv::debug::corruptions().flip_row_relation = corrupt_row;
    qcoinv::debug::corruptions().flip_antipode_sign = corrupt_antipode;

    if (selftest->parsed())
        return run_selftest(opt.seed);

    if (interior->parsed())
        opt.params.kind = qcoinv::CoactionKind::Interior;
    else if (slr->parsed())
        opt.params.kind = qcoinv::CoactionKind::SLr;
    else
        opt.params.kind = qcoinv::CoactionKind::Conjugation;
    return run_verify(opt);
}
