#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "symdet/io.hpp"
#include "symdet/measures.hpp"
#include "symdet/naimark.hpp"
#include "symdet/oracle.hpp"
#include "symdet/strategies.hpp"

namespace symdet::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

struct Options {
    std::string command;
    std::string family = "am"; // construct subcommand / info strategy
    std::size_t M = 0;
    std::size_t m = 1;
    std::size_t n = 1;
    std::size_t k = 2;
    std::size_t l = 0;
    double eps = 0.0;
    double lambda = 0.5;
    double theta = 0.0;
    bool theta_set = false;
    bool verify = false;
    std::size_t points = 1000;
    std::size_t grid_n = 48;
    std::size_t refine_iters = 200;
    std::uint64_t shots = 0;
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    std::string unit = "nats";
    std::string format; // json or csv; default depends on command
    std::string out_path;
    std::string povm_path;
    std::string ensemble_path;
};

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Writes to opts.out_path when set, else to the stream.
void emit(const Options &opts, std::ostream &out, const std::string &text) {
    if (opts.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') {
            out << '\n';
        }
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        throw IoError("cannot write " + opts.out_path);
    }
}

double unit_scale(const Options &opts) {
    return opts.unit == "bits" ? 1.0 / std::log(2.0) : 1.0;
}

Ensemble resolve_ensemble(const Options &opts) {
    if (!opts.ensemble_path.empty()) {
        return load_ensemble_json(read_file(opts.ensemble_path));
    }
    if (opts.M == 0) {
        throw std::invalid_argument("either --M or --ensemble is required");
    }
    return opts.eps > 0.0 ? make_mixed_em(opts.M, opts.eps) : make_em(opts.M);
}

Povm build_family(const Options &opts) {
    const std::string &f = opts.family;
    if (f == "am") {
        return covariant_am(opts.M);
    }
    if (f == "w") {
        return theorem2_w(opts.M, opts.m, opts.n);
    }
    if (f == "subgroup") {
        return subgroup_povm(opts.M, opts.k, opts.l);
    }
    if (f == "mu4") {
        return mu4_povm(opts.lambda);
    }
    if (f == "cov-w") {
        return covariant_from_w(opts.M, opts.m, opts.n);
    }
    if (f == "sqrt") {
        return state_direction_povm(opts.M);
    }
    throw std::invalid_argument("unknown strategy family: " + f);
}

Povm resolve_povm(const Options &opts) {
    if (!opts.povm_path.empty()) {
        Povm p = load_povm_json(read_file(opts.povm_path));
        const ValidationReport report = validate(p);
        if (!report.ok()) {
            throw std::invalid_argument("POVM in " + opts.povm_path +
                                        " is invalid: " + report.to_string());
        }
        return p;
    }
    if (opts.M == 0 && opts.family != "mu4") {
        throw std::invalid_argument("--M is required to construct a strategy family");
    }
    return build_family(opts);
}

int cmd_info(const Options &opts, std::ostream &out) {
    const Ensemble e = resolve_ensemble(opts);
    const Povm p = resolve_povm(opts);
    const double value = mutual_information(e, p) * unit_scale(opts);
    std::ostringstream os;
    os << "{\"command\":\"info\"";
    if (opts.M > 0) {
        os << ",\"M\":" << opts.M;
    }
    if (opts.eps > 0.0) {
        os << ",\"eps\":" << fmt17(opts.eps);
    }
    os << ",\"strategy\":\""
       << (opts.povm_path.empty() ? opts.family : "file:" + opts.povm_path) << '"';
    os << ",\"unit\":\"" << opts.unit << "\",\"value\":" << fmt17(value) << '}';
    emit(opts, out, os.str());
    return 0;
}

int cmd_sweep(const Options &opts, std::ostream &out) {
    const SweepCurve curve = theta_sweep(opts.M, opts.points);
    if (opts.format == "json") {
        const double scale = unit_scale(opts);
        std::ostringstream os;
        os << "{\"command\":\"sweep\",\"M\":" << opts.M << ",\"unit\":\"" << opts.unit
           << "\",\"theta_rad\":[";
        for (std::size_t i = 0; i < curve.thetas.size(); ++i) {
            os << (i ? "," : "") << fmt17(curve.thetas[i]);
        }
        os << "],\"info\":[";
        for (std::size_t i = 0; i < curve.values.size(); ++i) {
            os << (i ? "," : "") << fmt17(curve.values[i] * scale);
        }
        os << "]}";
        emit(opts, out, os.str());
    } else {
        emit(opts, out, sweep_to_csv(curve, opts.unit == "bits"));
    }
    return 0;
}

int cmd_scan(const Options &opts, std::ostream &out) {
    const ScanResult r = scan3(opts.M, opts.grid_n, opts.refine_iters);
    std::ostringstream os;
    os << "{\"command\":\"scan\",\"M\":" << opts.M << ",\"grid_n\":" << opts.grid_n
       << ",\"refine_iters\":" << opts.refine_iters << ",\"best_theta\":" << fmt17(r.best_theta)
       << ",\"best_phi_a\":" << fmt17(r.best_phi_a) << ",\"best_phi_b\":" << fmt17(r.best_phi_b)
       << ",\"best_value\":" << fmt17(r.best_value * unit_scale(opts)) << ",\"unit\":\""
       << opts.unit << "\",\"grid_points_evaluated\":" << r.grid_points_evaluated
       << ",\"refined\":" << (r.refined ? "true" : "false") << '}';
    emit(opts, out, os.str());
    return 0;
}

int cmd_construct(const Options &opts, std::ostream &out) {
    emit(opts, out, dump_povm_json(build_family(opts)));
    return 0;
}

int cmd_naimark(const Options &opts, std::ostream &out, std::ostream &err) {
    const NaimarkPlan plan = build_plan(opts.M, opts.m);
    const DilationReport report = verify_dilation(plan);
    if (!report.all_pass()) {
        err << "naimark: dilation self-check failed\n";
        return 1;
    }
    if (opts.shots > 0) {
        if (!opts.theta_set) {
            throw std::invalid_argument("naimark: --shots requires --theta");
        }
        const auto counts = sample_counts(plan, opts.theta, opts.shots, opts.seed);
        std::ostringstream os;
        if (opts.format == "json") {
            os << "{\"command\":\"naimark\",\"M\":" << opts.M << ",\"m\":" << opts.m
               << ",\"theta\":" << fmt17(opts.theta) << ",\"shots\":" << opts.shots
               << ",\"seed\":" << opts.seed << ",\"counts\":[" << counts[0] << ',' << counts[1]
               << ',' << counts[2] << ',' << counts[3] << "]}";
        } else {
            os << "port,count\n";
            for (std::size_t j = 0; j < 4; ++j) {
                os << j << ',' << counts[j] << '\n';
            }
        }
        emit(opts, out, os.str());
        return 0;
    }
    if (opts.theta_set) {
        const DetectionStats stats = simulate(plan, opts.theta);
        if (opts.format == "json") {
            std::ostringstream os;
            os << "{\"command\":\"naimark\",\"M\":" << opts.M << ",\"m\":" << opts.m
               << ",\"theta\":" << fmt17(opts.theta) << ",\"probs\":[";
            for (std::size_t j = 0; j < 4; ++j) {
                os << (j ? "," : "") << fmt17(stats.probs[j]);
            }
            os << "],\"outcome_map\":[2,1,0,-1]}";
            emit(opts, out, os.str());
        } else {
            emit(opts, out, stats_to_csv(stats));
        }
        return 0;
    }
    if (opts.verify) {
        std::ostringstream os;
        os << "{\"command\":\"naimark\",\"M\":" << opts.M << ",\"m\":" << opts.m
           << ",\"checks\":[";
        for (std::size_t i = 0; i < report.checks.size(); ++i) {
            const auto &c = report.checks[i];
            os << (i ? "," : "") << "{\"name\":\"" << c.name
               << "\",\"defect\":" << fmt17(c.defect)
               << ",\"pass\":" << (c.pass ? "true" : "false") << '}';
        }
        os << "],\"all_pass\":true}";
        emit(opts, out, os.str());
        return 0;
    }
    emit(opts, out, dump_plan_json(plan));
    return 0;
}

int cmd_pe_check(const Options &opts, std::ostream &out) {
    const Ensemble e = resolve_ensemble(opts);
    const Povm p = resolve_povm(opts);
    const double pe = error_probability(e, p);
    const PeOptimalityReport report = check_pe_optimal(e, p, opts.tol);
    double min_eig = 0.0;
    for (std::size_t j = 0; j < report.min_eigenvalues.size(); ++j) {
        min_eig = j == 0 ? report.min_eigenvalues[j] : std::min(min_eig,
                                                                report.min_eigenvalues[j]);
    }
    std::ostringstream os;
    os << "{\"command\":\"pe-check\"";
    if (opts.M > 0) {
        os << ",\"M\":" << opts.M;
    }
    os << ",\"strategy\":\""
       << (opts.povm_path.empty() ? opts.family : "file:" + opts.povm_path) << '"'
       << ",\"error_probability\":" << fmt17(pe)
       << ",\"gamma_hermiticity_defect\":" << fmt17(report.hermiticity_defect)
       << ",\"min_eigenvalue\":" << fmt17(min_eig)
       << ",\"pe_optimal\":" << (report.pass() ? "true" : "false") << '}';
    emit(opts, out, os.str());
    return 0;
}

int cmd_validate(const Options &opts, std::ostream &out) {
    if (!opts.ensemble_path.empty()) {
        // the loader throws on the first violation
        load_ensemble_json(read_file(opts.ensemble_path));
        emit(opts, out, "{\"command\":\"validate\",\"valid\":true}");
        return 0;
    }
    if (opts.povm_path.empty()) {
        throw std::invalid_argument("validate: --povm or --ensemble is required");
    }
    const Povm p = load_povm_json(read_file(opts.povm_path));
    const ValidationReport report = validate(p, opts.tol);
    std::ostringstream os;
    os << "{\"command\":\"validate\",\"valid\":" << (report.ok() ? "true" : "false")
       << ",\"violations\":[";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        const auto &v = report.violations[i];
        os << (i ? "," : "") << "{\"element\":" << v.element << ",\"property\":\"" << v.property
           << "\",\"magnitude\":" << fmt17(v.magnitude) << '}';
    }
    os << "]}";
    emit(opts, out, os.str());
    return report.ok() ? 0 : 1;
}

void add_common(CLI::App *cmd, Options &opts) {
    cmd->add_option("--unit", opts.unit, "Output unit: nats or bits")
        ->check(CLI::IsMember({"nats", "bits"}));
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opts;
    CLI::App app{"Accessible-information strategies for symmetric real qubit sources"};
    app.require_subcommand(1);

    auto *info = app.add_subcommand("info", "Mutual information of an ensemble/POVM pair");
    info->add_option("--M", opts.M, "Number of source states");
    info->add_option("--eps", opts.eps, "Mixing noise in [0, 1]");
    info->add_option("--family", opts.family, "Strategy family: am, w, subgroup, mu4, cov-w, sqrt");
    info->add_option("--m", opts.m);
    info->add_option("--n", opts.n);
    info->add_option("--k", opts.k);
    info->add_option("--l", opts.l);
    info->add_option("--lambda", opts.lambda);
    info->add_option("--povm", opts.povm_path, "POVM JSON file (instead of --family)");
    info->add_option("--ensemble", opts.ensemble_path, "Ensemble JSON file (instead of --M)");
    add_common(info, opts);

    auto *sweep = app.add_subcommand("sweep", "Sample the information curve I(theta)");
    sweep->add_option("--M", opts.M)->required();
    sweep->add_option("--points", opts.points, "Number of samples over [0, pi)");
    add_common(sweep, opts);

    auto *scan = app.add_subcommand("scan", "Brute-force scan over all 3-element real POVMs");
    scan->add_option("--M", opts.M)->required();
    scan->add_option("--grid", opts.grid_n, "Lattice points per axis");
    scan->add_option("--refine", opts.refine_iters, "Coordinate-descent rounds");
    add_common(scan, opts);

    auto *construct = app.add_subcommand("construct", "Build an optimal POVM family");
    construct->require_subcommand(1);
    const std::vector<std::string> families{"am", "w", "subgroup", "mu4", "cov-w"};
    for (const auto &family : families) {
        auto *sub = construct->add_subcommand(family);
        if (family != "mu4") {
            sub->add_option("--M", opts.M)->required();
        }
        if (family == "w" || family == "cov-w") {
            sub->add_option("--m", opts.m)->required();
            sub->add_option("--n", opts.n)->required();
        }
        if (family == "subgroup") {
            sub->add_option("--k", opts.k)->required();
            sub->add_option("--l", opts.l);
        }
        if (family == "mu4") {
            sub->add_option("--lambda", opts.lambda)->required();
        }
        add_common(sub, opts);
        sub->callback([&opts, family] { opts.family = family; });
    }

    auto *naimark = app.add_subcommand("naimark", "Build/verify/simulate the dilation receiver");
    naimark->add_option("--M", opts.M)->required();
    naimark->add_option("--m", opts.m)->required();
    naimark->add_option("--theta", opts.theta, "Simulate the input state (cos t, sin t)")
        ->each([&opts](const std::string &) { opts.theta_set = true; });
    naimark->add_flag("--verify", opts.verify, "Emit the dilation verification report");
    naimark->add_option("--shots", opts.shots, "Draw sampled counts instead of probabilities");
    naimark->add_option("--seed", opts.seed, "Sampler seed");
    add_common(naimark, opts);

    auto *pe = app.add_subcommand("pe-check", "Error probability and P_e-optimality certificate");
    pe->add_option("--M", opts.M);
    pe->add_option("--eps", opts.eps);
    pe->add_option("--family", opts.family, "Strategy family (default sqrt)");
    pe->add_option("--m", opts.m);
    pe->add_option("--n", opts.n);
    pe->add_option("--k", opts.k);
    pe->add_option("--l", opts.l);
    pe->add_option("--lambda", opts.lambda);
    pe->add_option("--povm", opts.povm_path);
    pe->add_option("--ensemble", opts.ensemble_path);
    pe->add_option("--tol", opts.tol);
    add_common(pe, opts);
    pe->callback([&opts, pe] {
        if (pe->count("--family") == 0 && opts.povm_path.empty()) {
            opts.family = "sqrt";
        }
    });

    auto *validate_cmd = app.add_subcommand("validate", "Check a POVM or ensemble JSON file");
    validate_cmd->add_option("--povm", opts.povm_path);
    validate_cmd->add_option("--ensemble", opts.ensemble_path);
    validate_cmd->add_option("--tol", opts.tol);
    add_common(validate_cmd, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 1;
    }

    try {
        if (info->parsed()) {
            return cmd_info(opts, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(opts, out);
        }
        if (scan->parsed()) {
            return cmd_scan(opts, out);
        }
        if (construct->parsed()) {
            return cmd_construct(opts, out);
        }
        if (naimark->parsed()) {
            return cmd_naimark(opts, out, err);
        }
        if (pe->parsed()) {
            return cmd_pe_check(opts, out);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(opts, out);
        }
        err << "error: no command given\n" << app.help();
        return 1;
    } catch (const IoError &e) {
        err << "io error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace symdet::cli
