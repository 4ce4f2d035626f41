#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cohdist/complementarity.hpp"
#include "cohdist/io.hpp"

namespace {

using namespace cohdist;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitViolation = 2;
constexpr int kExitClosedForm = 3;
constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;

int env_threads() {
    const char* v = std::getenv("COHDIST_THREADS");
    if (!v) return 0;
    const int n = std::atoi(v);
    return n > 0 ? n : 0;
}

Relation parse_relation(const std::string& s) {
    if (s == "single") return Relation::single;
    if (s == "measurement") return Relation::measurement;
    if (s == "bipartite-entanglement") return Relation::bipartite_entanglement;
    if (s == "bipartite-discord") return Relation::bipartite_discord;
    throw CLI::ValidationError("--relation", "unknown relation '" + s + "'");
}

StateFamily parse_family(const std::string& s) {
    if (s == "computational") return StateFamily::computational;
    if (s == "plus-minus") return StateFamily::plus_minus;
    if (s == "schmidt-family") return StateFamily::schmidt_family;
    throw CLI::ValidationError("--basis", "unknown basis '" + s + "'");
}

int run_sweep(const SweepConfig& cfg) {
    try {
        const std::vector<SweepRecord> records = sweep(cfg);
        write_sweep_csv(cfg.output_path, records);
        write_sweep_meta(cfg.output_path, cfg);
        double min_res = std::numeric_limits<double>::infinity();
        for (const SweepRecord& r : records) min_res = std::min(min_res, r.residual);
        std::cout << "wrote " << records.size() << " records to " << cfg.output_path
                  << " (min residual " << format_double(min_res) << ")\n";
        return kExitOk;
    } catch (const CounterexampleError& e) {
        const std::string dump = cfg.output_path + ".counterexample.json";
        write_counterexample(dump, e);
        std::cerr << "violation: " << e.what() << "\n"
                  << "  lhs = " << format_double(e.lhs) << ", bound = " << format_double(e.bound)
                  << "\n  reproduction payload: " << dump << "\n";
        return kExitViolation;
    }
}

struct ClosedFormRow {
    std::string name;
    double max_dev;
    bool must_match;  // contributes to the exit decision directly
};

int run_verify(int grid) {
    if (grid < 1) {
        std::cerr << "--grid must be >= 1\n";
        return kExitUsage;
    }
    const Basis frame = Basis::computational(2);
    double dev_coh = 0.0, dev_weak = 0.0, dev_depol = 0.0, dev_ad_printed = 0.0,
           dev_ad_corrected = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double l0 = static_cast<double>(i) / grid;
        const double l1 = 1.0 - l0;
        const DensityMatrix rho = system_state_plus_minus_basis(l0, l1);
        dev_coh = std::max(dev_coh, std::abs(coherence_closed_form(l0, l1) -
                                             coherence_relative_entropy(rho.mat(), frame)));
        for (int j = 0; j <= grid; ++j) {
            const double p = static_cast<double>(j) / grid;
            dev_weak = std::max(dev_weak, std::abs(disturbance_weak_closed_form(l0, l1, p) -
                                                   disturbance(rho, weak_measurement(p))));
            dev_depol =
                std::max(dev_depol, std::abs(disturbance_depolarizing_closed_form(l0, l1, p) -
                                             disturbance(rho, depolarizing(p))));
            const double d_ad = disturbance(rho, amplitude_damping(p));
            dev_ad_printed =
                std::max(dev_ad_printed, std::abs(disturbance_ad_closed_form(l0, l1, p) - d_ad));
            dev_ad_corrected = std::max(
                dev_ad_corrected, std::abs(disturbance_ad_closed_form_corrected(l0, l1, p) - d_ad));
        }
    }

    const double tol = 1e-8;
    auto verdict = [&](double dev) { return dev < tol ? "OK" : "MISMATCH"; };
    std::cout << "closed-form check against the general definition, " << (grid + 1) << "x"
              << (grid + 1) << " (weight, parameter) grid\n";
    std::cout << "  coherence:                        max dev = " << format_double(dev_coh)
              << "  " << verdict(dev_coh) << "\n";
    std::cout << "  weak-measurement disturbance:     max dev = " << format_double(dev_weak)
              << "  " << verdict(dev_weak) << "\n";
    std::cout << "  depolarizing disturbance:         max dev = " << format_double(dev_depol)
              << "  " << verdict(dev_depol) << "\n";
    std::cout << "  amplitude damping (as printed):   max dev = " << format_double(dev_ad_printed)
              << "  " << verdict(dev_ad_printed) << "\n";
    std::cout << "  amplitude damping (corrected):    max dev = "
              << format_double(dev_ad_corrected) << "  " << verdict(dev_ad_corrected) << "\n";

    if (dev_ad_printed < tol)
        std::cout << "amplitude damping: the as-printed variant matches\n";
    else if (dev_ad_corrected < tol)
        std::cout << "amplitude damping: the corrected variant matches\n";
    else
        std::cout << "amplitude damping: neither variant matches the general definition\n";

    const bool ok = dev_coh < tol && dev_weak < tol && dev_depol < tol &&
                    (dev_ad_printed < tol || dev_ad_corrected < tol);
    return ok ? kExitOk : kExitClosedForm;
}

struct ParsedChannel {
    KrausChannel ch;
    bool has_param = false;
};

ParsedChannel parse_channel_spec(const std::string& spec, int dim) {
    std::string name = spec;
    std::optional<double> param;
    const size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        try {
            param = std::stod(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("channel spec: bad parameter in '" + spec + "'");
        }
    }
    auto need = [&]() {
        if (!param)
            throw std::invalid_argument("channel '" + name + "' needs a parameter, e.g. " + name +
                                        ":0.5");
        return *param;
    };
    ParsedChannel out;
    out.has_param = param.has_value();
    if (name == "identity") {
        out.ch = unitary_channel(identity(dim), "identity");
    } else if (name == "projective") {
        out.ch = projective_measurement(Basis::computational(dim));
    } else if (name == "weak") {
        out.ch = weak_measurement(need());
    } else if (name == "depolarizing") {
        out.ch = depolarizing(need(), dim);
    } else if (name == "amplitude_damping") {
        out.ch = amplitude_damping(need());
    } else if (name == "bit_flip") {
        out.ch = bit_flip(need());
    } else if (name == "phase_flip") {
        out.ch = phase_flip(need());
    } else if (name == "bit_phase_flip") {
        out.ch = bit_phase_flip(need());
    } else {
        throw std::invalid_argument("unknown channel '" + name + "'");
    }
    return out;
}

DensityMatrix parse_state_spec(const std::string& spec) {
    if (spec.rfind("schmidt:", 0) == 0) {
        double l0 = 0.0;
        try {
            l0 = std::stod(spec.substr(8));
        } catch (const std::exception&) {
            throw std::invalid_argument("state spec: bad weight in '" + spec + "'");
        }
        return system_state_plus_minus_basis(l0, 1.0 - l0);
    }
    return read_density_json(spec);
}

int run_report(const std::string& state_spec, const std::string& channel_spec,
               const std::string& basis_name) {
    const DensityMatrix rho = parse_state_spec(state_spec);
    const int d = rho.dim();
    ParsedChannel pc = parse_channel_spec(channel_spec, d);
    if (pc.ch.dim_in != d)
        throw std::invalid_argument("channel acts on dim " + std::to_string(pc.ch.dim_in) +
                                    " but the state has dim " + std::to_string(d));
    Basis frame = Basis::computational(d);
    if (basis_name == "plus-minus") {
        if (d != 2) throw std::invalid_argument("plus-minus basis needs a qubit state");
        Mat h(2, 2);
        const double s = 1.0 / std::sqrt(2.0);
        h << s, s, s, -s;
        frame = Basis(h);
    } else if (basis_name != "computational") {
        throw std::invalid_argument("unknown basis '" + basis_name + "'");
    }

    const double s_rho = von_neumann_entropy(rho.mat());
    const double c_rel = coherence_relative_entropy(rho.mat(), frame);
    const double c_l1 = coherence_l1(rho.mat(), frame);
    const double ic = coherent_information(rho, pc.ch);
    const double dist = disturbance(rho, pc.ch);

    std::cout << "state: " << state_spec << " (dim " << d << ")\n";
    std::cout << "channel: " << pc.ch.label;
    if (pc.has_param) std::cout << " (param " << format_double(pc.ch.param) << ")";
    std::cout << "\n";
    std::cout << "entropy S              = " << format_double(s_rho) << "\n";
    std::cout << "coherence (rel. ent.)  = " << format_double(c_rel) << "\n";
    std::cout << "coherence (l1)         = " << format_double(c_l1) << "\n";
    std::cout << "coherent information   = " << format_double(ic) << "\n";
    std::cout << "disturbance            = " << format_double(dist) << "\n";

    const InequalityReport rep = pc.ch.measurement_type
                                     ? check_measurement_channel(rho, pc.ch, frame)
                                     : check_single(rho, pc.ch, frame);
    std::cout << "relation: " << (pc.ch.measurement_type ? "C + D <= log2(d_E)" : "2C + D <= 2 log2(d)")
              << ": lhs = " << format_double(rep.lhs) << ", bound = " << format_double(rep.bound)
              << ", residual = " << format_double(rep.residual)
              << (rep.satisfied ? "  [satisfied]" : "  [VIOLATED]") << "\n";
    return rep.satisfied ? kExitOk : kExitViolation;
}

int run_plot(const std::string& csv_path, const std::string& svg_path) {
    const std::vector<SweepRecord> records = read_sweep_csv(csv_path);
    const std::string svg = render_scatter_svg(records);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + svg_path);
    out << svg;
    if (!out) throw std::runtime_error("write failed: " + svg_path);
    std::cout << "wrote " << svg_path << " (" << records.size() << " points)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence / disturbance trade-off toolkit"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo sweep of one trade-off relation");
    std::string relation = "single", channel = "depolarizing", basis = "computational",
                output = "sweep.csv", er_mode = "certified";
    SweepConfig cfg;
    sweep_cmd->add_option("--relation", relation,
                          "single | measurement | bipartite-entanglement | bipartite-discord");
    sweep_cmd->add_option("--channel", channel, "channel family to sweep");
    sweep_cmd->add_option("--param-start", cfg.param_start, "first grid value (default 0)");
    sweep_cmd->add_option("--param-stop", cfg.param_stop, "last grid value (default 1)");
    sweep_cmd->add_option("--steps", cfg.param_steps, "grid size (default 11)");
    auto* dim_opt = sweep_cmd->add_option("--dim", cfg.dim, "state dimension (default 2; bipartite uses 4)");
    sweep_cmd->add_option("--samples", cfg.samples, "states per grid value (default 1000)");
    sweep_cmd->add_option("--seed", cfg.seed, "RNG seed (default 0)");
    sweep_cmd->add_option("--basis", basis, "computational | plus-minus | schmidt-family");
    sweep_cmd->add_option("--output,-o", output, "CSV output path");
    sweep_cmd->add_option("--er-mode", er_mode, "certified | variational (entanglement relation)");
    sweep_cmd->add_option("--threads", cfg.threads, "worker cap (default: COHDIST_THREADS or all cores)");

    // verify-closed-forms
    auto* verify_cmd =
        app.add_subcommand("verify-closed-forms", "compare closed forms with the general definition");
    int grid = 20;
    verify_cmd->add_option("--grid", grid, "grid density per axis (default 20)");

    // report
    auto* report_cmd = app.add_subcommand("report", "single-instance report");
    std::string state_spec, channel_spec, report_basis = "computational";
    report_cmd->add_option("--state", state_spec, "schmidt:<weight> or a density-matrix JSON file")
        ->required();
    report_cmd->add_option("--channel", channel_spec, "e.g. weak:1, depolarizing:0.3, identity")
        ->required();
    report_cmd->add_option("--basis", report_basis, "computational | plus-minus");

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "render a sweep CSV as an SVG scatter");
    std::string plot_in, plot_out = "sweep.svg";
    plot_cmd->add_option("--input,-i", plot_in, "sweep CSV path")->required();
    plot_cmd->add_option("--output,-o", plot_out, "SVG output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep_cmd->parsed()) {
            cfg.relation = parse_relation(relation);
            cfg.channel = channel;
            cfg.basis = parse_family(basis);
            cfg.output_path = output;
            cfg.er_mode = er_mode == "variational" ? EntanglementMode::variational
                                                   : EntanglementMode::certified;
            if (er_mode != "variational" && er_mode != "certified")
                throw std::invalid_argument("unknown --er-mode '" + er_mode + "'");
            if (cfg.threads == 0) cfg.threads = env_threads();
            if (dim_opt->count() == 0 && (cfg.relation == Relation::bipartite_entanglement ||
                                          cfg.relation == Relation::bipartite_discord))
                cfg.dim = 4;
            return run_sweep(cfg);
        }
        if (verify_cmd->parsed()) return run_verify(grid);
        if (report_cmd->parsed()) return run_report(state_spec, channel_spec, report_basis);
        if (plot_cmd->parsed()) return run_plot(plot_in, plot_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
