// lapbound: construct graph/complex Laplacians, compute spectra, and check
// every eigenvalue-sum bound in the registry over instance streams.
//
// Exit codes: 0 clean, 1 theorem-tier violation, 2 usage/config error,
// 3 conjecture-tier violation found.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapbound/errors.hpp"
#include "lapbound/harness.hpp"
#include "lapbound/io.hpp"
#include "lapbound/operators.hpp"
#include "lapbound/spectra.hpp"

namespace {

double env_default_tol() {
    if (const char* env = std::getenv("LB_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw lb::malformed_input_error("LB_TOL is not a number");
        }
    }
    return 1e-7;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

// A JSON config file mirrors the flags per subcommand:
//   {"search": {"bounds": "brouwer,bai", "k": "paper-valid", "jobs": 2}}
// Config values are injected before the user's own flags, which win.
std::vector<std::string> config_args(const std::string& path, const std::string& subcommand) {
    std::ifstream in(path);
    if (!in) throw lb::malformed_input_error("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw lb::malformed_input_error(std::string("invalid config JSON: ") + e.what());
    }
    std::vector<std::string> args;
    if (!j.contains(subcommand)) return args;
    for (const auto& [key, value] : j[subcommand].items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back("--" + key);
        } else if (value.is_string()) {
            args.push_back("--" + key);
            args.push_back(value.get<std::string>());
        } else {
            args.push_back("--" + key);
            args.push_back(value.dump());
        }
    }
    return args;
}

int finish_run(const lb::RunSummary& summary) {
    std::printf(
        "instances=%llu reports=%llu theorem_violations=%llu conjecture_violations=%llu wall=%.2fs\n",
        static_cast<unsigned long long>(summary.instances),
        static_cast<unsigned long long>(summary.reports),
        static_cast<unsigned long long>(summary.theorem_violations),
        static_cast<unsigned long long>(summary.conjecture_violations), summary.wall_seconds);
    for (const auto& [id, board] : summary.leaderboards) {
        std::printf("min-slack leaderboard %s:\n", id.c_str());
        for (const auto& rep : board)
            std::printf("  slack=%.12g instance=%s r=%d k=%d\n", rep.slack, rep.instance_id.c_str(),
                        rep.r, rep.k);
    }
    return lb::exit_code(summary);
}

struct CommonOpts {
    std::string bounds;
    std::string k_spec = "paper-valid";
    int r = -1;
    std::string assume;
    double tol = -1.0;
    bool strict = false;
};

void apply_common(lb::SuiteConfig& cfg, const CommonOpts& opt) {
    cfg.bounds = split_commas(opt.bounds);
    cfg.k_spec = opt.k_spec;
    if (opt.r > 0) cfg.r_lo = cfg.r_hi = opt.r;
    cfg.assumptions = lb::parse_assumptions(split_commas(opt.assume));
    cfg.tol = opt.tol > 0 ? opt.tol : env_default_tol();
    cfg.strict = opt.strict;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"eigenvalue-sum bound checker for graph and simplicial-complex Laplacians"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file mirroring the flags per subcommand");

    auto* spectrum = app.add_subcommand("spectrum", "print the spectrum of a Laplacian operator");
    std::string spectrum_file, spectrum_kind = "upper";
    int spectrum_r = 1;
    spectrum->add_option("file", spectrum_file, "complex JSON file")->required();
    spectrum->add_option("--r", spectrum_r, "dimension parameter (default 1)");
    spectrum->add_option("--kind", spectrum_kind, "upper|lower|signless-upper|signless-lower")
        ->check(CLI::IsMember({"upper", "lower", "signless-upper", "signless-lower"}));

    auto* check = app.add_subcommand("check", "evaluate bounds on one instance file");
    std::string check_file, check_out;
    CommonOpts check_opts;
    check->add_option("file", check_file, "complex JSON file")->required();
    check->add_option("--bounds", check_opts.bounds,
                      "comma list of bound ids (default: all applicable)");
    check->add_option("--k", check_opts.k_spec, "k spec: paper-valid, A..B (B may be n), or list");
    check->add_option("--r", check_opts.r, "restrict to one r");
    check->add_option("--assume", check_opts.assume,
                      "family assertions: forest,planar,square_free,girth5,max_degree,"
                      "no_path=T,no_long_cycle=T,triangle_free");
    check->add_option("--tol", check_opts.tol, "slack tolerance (default LB_TOL or 1e-7)");
    check->add_option("--out", check_out, "write reports to this JSONL file instead of stdout");
    check->add_flag("--strict", check_opts.strict, "inapplicable combinations become errors");

    auto* search = app.add_subcommand("search", "run bound suites over an instance stream");
    std::string search_family, search_out, search_csv, search_violations;
    int search_enumerate = 0, search_minslack = 10, search_jobs = 1;
    bool search_connected = false, search_dedup = false;
    CommonOpts search_opts;
    search->add_option("--family", search_family, "instance stream descriptor (family:param=...)");
    search->add_option("--enumerate", search_enumerate, "all labeled graphs on N vertices (N <= 8)");
    search->add_option("--bounds", search_opts.bounds, "comma list of bound ids");
    search->add_option("--k", search_opts.k_spec, "k spec (default paper-valid)");
    search->add_option("--r", search_opts.r, "restrict to one r");
    search->add_option("--assume", search_opts.assume, "family assertions");
    search->add_option("--tol", search_opts.tol, "slack tolerance");
    search->add_option("--min-slack", search_minslack, "leaderboard size (default 10)");
    search->add_option("--out", search_out, "reports JSONL path")->required();
    search->add_option("--csv", search_csv, "summary CSV path (default <out>.summary.csv)");
    search->add_option("--violations", search_violations,
                       "violations JSONL path (default violations.jsonl beside --out)");
    search->add_option("--jobs", search_jobs, "parallel evaluation degree");
    search->add_flag("--connected-only", search_connected, "skip disconnected graphs");
    search->add_flag("--dedup", search_dedup, "suppress repeats of the same invariant class");
    search->add_flag("--strict", search_opts.strict, "inapplicable combinations become errors");

    auto* identities = app.add_subcommand("identities", "check the classical spectral identities");
    std::string identities_file;
    double identities_tol = -1.0;
    identities->add_option("file", identities_file, "complex JSON file")->required();
    identities->add_option("--tol", identities_tol, "residual tolerance");

    auto* gen = app.add_subcommand("gen", "write generated instances to a file");
    std::string gen_family, gen_out;
    gen->add_option("family", gen_family, "family descriptor (family:param=value,...)")->required();
    gen->add_option("--out", gen_out, "output path")->required();

    for (auto* sub : {spectrum, check, search, identities, gen})
        for (auto* opt : sub->get_options()) opt->take_last();

    // Inject config-file values right after the subcommand name; later
    // (user-typed) duplicates win via take_last.
    std::vector<std::string> args(argv + 1, argv + argc);
    for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    if (!config_path.empty()) {
        for (const char* name : {"spectrum", "check", "search", "identities", "gen"}) {
            auto it = std::find(args.begin(), args.end(), name);
            if (it != args.end()) {
                auto extra = config_args(config_path, name);
                args.insert(it + 1, extra.begin(), extra.end());
                break;
            }
        }
    }
    std::vector<const char*> cargv{argv[0]};
    for (const std::string& a : args) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), const_cast<char**>(cargv.data()));

    if (*spectrum) {
        lb::LoadedComplex lc = lb::read_complex_file(spectrum_file);
        lb::OperatorKind kind = lb::OperatorKind::upper_laplacian;
        if (spectrum_kind == "lower") kind = lb::OperatorKind::lower_laplacian;
        else if (spectrum_kind == "signless-upper") kind = lb::OperatorKind::signless_upper;
        else if (spectrum_kind == "signless-lower") kind = lb::OperatorKind::signless_lower;
        lb::SpectrumSummary s = lb::sym_spectrum(lb::laplacian(lc.complex, kind, spectrum_r));
        for (double ev : s.eigenvalues()) std::printf("%.12g\n", ev);
        return 0;
    }

    if (*check) {
        lb::SuiteConfig cfg;
        apply_common(cfg, check_opts);
        lb::Instance inst;
        inst.id = "file:" + check_file + "#0";
        lb::LoadedComplex lc = lb::read_complex_file(check_file);
        inst.complex = std::move(lc.complex);
        inst.partition = std::move(lc.partition);
        std::vector<lb::BoundReport> reports = lb::evaluate_all(cfg, inst);
        lb::RunSummary summary;
        std::ofstream file_out;
        std::ostream* out = &std::cout;
        if (!check_out.empty()) {
            file_out.open(check_out);
            if (!file_out) throw lb::malformed_input_error("cannot write " + check_out);
            out = &file_out;
        }
        for (const lb::BoundReport& rep : reports) {
            *out << lb::report_to_jsonl(rep) << "\n";
            if (!rep.holds) {
                if (rep.tier == lb::Tier::conjecture) ++summary.conjecture_violations;
                else ++summary.theorem_violations;
            }
        }
        return lb::exit_code(summary);
    }

    if (*search) {
        if (search_family.empty() == (search_enumerate == 0))
            throw lb::malformed_input_error("search needs exactly one of --family or --enumerate");
        lb::SuiteConfig cfg;
        apply_common(cfg, search_opts);
        cfg.stream = search_family.empty() ? "enumerate:n=" + std::to_string(search_enumerate)
                                           : search_family;
        cfg.jobs = search_jobs;
        cfg.connected_only = search_connected;
        cfg.dedup = search_dedup;
        cfg.leaderboard_size = search_minslack;
        cfg.out_reports = search_out;
        cfg.out_csv = search_csv.empty() ? search_out + ".summary.csv" : search_csv;
        if (search_violations.empty()) {
            auto slash = search_out.find_last_of('/');
            search_violations =
                (slash == std::string::npos ? std::string() : search_out.substr(0, slash + 1)) +
                "violations.jsonl";
        }
        cfg.out_violations = search_violations;
        return finish_run(lb::run_suite(cfg));
    }

    if (*identities) {
        double tol = identities_tol > 0 ? identities_tol : env_default_tol();
        lb::Instance inst;
        inst.id = "file:" + identities_file;
        lb::LoadedComplex lc = lb::read_complex_file(identities_file);
        inst.complex = std::move(lc.complex);
        inst.partition = std::move(lc.partition);
        bool all_ok = true;
        for (const lb::IdentityReport& rep : lb::check_identities(inst, tol)) {
            std::printf("%-22s residual=%.3e %s\n", rep.name.c_str(), rep.residual,
                        rep.ok ? "ok" : "FAIL");
            all_ok &= rep.ok;
        }
        return all_ok ? 0 : 1;
    }

    if (*gen) {
        lb::InstanceStream stream = lb::InstanceStream::parse(gen_family);
        if (stream.size() == 1) {
            lb::Instance inst = stream.at(0);
            lb::write_complex_file(gen_out, inst.complex,
                                   inst.partition ? &*inst.partition : nullptr);
        } else {
            std::ofstream out(gen_out);
            if (!out) throw lb::malformed_input_error("cannot write " + gen_out);
            for (uint64_t i = 0; i < stream.size(); ++i) {
                lb::Instance inst = stream.at(i);
                nlohmann::ordered_json j =
                    lb::complex_to_json(inst.complex, inst.partition ? &*inst.partition : nullptr);
                j["instance_id"] = inst.id;
                out << j.dump() << "\n";
            }
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? 0 : 2;  // --help exits cleanly, bad usage is 2
    } catch (const lb::internal_consistency_error& e) {
        std::fprintf(stderr, "internal consistency error: %s\n", e.what());
        return 1;  // a failed self-check is a theorem-tier failure
    } catch (const lb::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
