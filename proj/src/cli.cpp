#include "lmg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>

namespace lmg {

namespace {

struct FlagSet {
    std::string config_path;
    double coupling = 1.0;
    double gamma = 0.0;
    std::string gamma_grid;
    double h0 = 0.0;
    double h = 0.0;
    std::string h_grid;
    std::string twice_j;
    double t_max = 0.0;
    int n_samples = 0;
    std::string generators;
    std::string ref;
    double beta = 0.0;
    std::string tiebreak;
    int workers = 0;
    std::uint64_t seed = 0;
    std::string out;

    CLI::Option* config_opt = nullptr;
    CLI::Option* coupling_opt = nullptr;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* gamma_grid_opt = nullptr;
    CLI::Option* h0_opt = nullptr;
    CLI::Option* h_opt = nullptr;
    CLI::Option* h_grid_opt = nullptr;
    CLI::Option* twice_j_opt = nullptr;
    CLI::Option* t_max_opt = nullptr;
    CLI::Option* n_samples_opt = nullptr;
    CLI::Option* generators_opt = nullptr;
    CLI::Option* ref_opt = nullptr;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* tiebreak_opt = nullptr;
    CLI::Option* workers_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* out_opt = nullptr;
};

void add_flags(CLI::App* cmd, FlagSet& f) {
    cmd->set_help_flag("--help", "Print help");
    f.config_opt = cmd->add_option("--config", f.config_path,
                                   "Key=value config file; explicit flags override it");
    f.coupling_opt = cmd->add_option("--J", f.coupling, "Interaction strength J (default 1)");
    f.gamma_opt = cmd->add_option("--gamma", f.gamma, "Anisotropy gamma in [0,1]");
    f.gamma_grid_opt =
        cmd->add_option("--gamma-grid", f.gamma_grid, "Gamma grid lo:hi:n (sweep modes)");
    f.h0_opt = cmd->add_option("--h0", f.h0, "Pre-quench transverse field");
    f.h_opt = cmd->add_option("--h", f.h, "Post-quench transverse field");
    f.h_grid_opt = cmd->add_option("--h-grid", f.h_grid, "Field grid lo:hi:n (sweep modes)");
    f.twice_j_opt = cmd->add_option(
        "--j2", f.twice_j, "Twice the total angular momentum; comma list in order-parameter mode");
    f.t_max_opt = cmd->add_option("--tmax", f.t_max, "Evolution window in units of 1/J");
    f.n_samples_opt = cmd->add_option("--samples", f.n_samples, "Time samples including t=0");
    f.generators_opt =
        cmd->add_option("--generators", f.generators, "Generator subset, e.g. x,y,z");
    f.ref_opt =
        cmd->add_option("--ref", f.ref, "Entropy-bound reference: diagonal, ground or gibbs");
    f.beta_opt = cmd->add_option("--beta", f.beta, "Inverse temperature for the gibbs reference");
    f.tiebreak_opt = cmd->add_option(
        "--tiebreak", f.tiebreak,
        "Degenerate ground-state selection: max-jz, max-jx or raw (default by gamma)");
    f.workers_opt = cmd->add_option("--workers", f.workers, "Worker threads (0 = hardware)");
    f.seed_opt = cmd->add_option("--seed", f.seed, "Seed for the validation suites");
    f.out_opt = cmd->add_option("--out", f.out, "Output stem; writes <out>.csv and <out>.meta");
}

void apply_flags(const FlagSet& f, RunConfig& config) {
    if (f.coupling_opt->count()) config.coupling = f.coupling;
    if (f.gamma_opt->count()) config.gamma = f.gamma;
    if (f.gamma_grid_opt->count()) {
        config.gamma_grid = f.gamma_grid == "none" ? std::nullopt
                                                   : std::optional(GridSpec::parse(f.gamma_grid));
    }
    if (f.h0_opt->count()) config.h0 = f.h0;
    if (f.h_opt->count()) config.h = f.h;
    if (f.h_grid_opt->count()) {
        config.h_grid =
            f.h_grid == "none" ? std::nullopt : std::optional(GridSpec::parse(f.h_grid));
    }
    if (f.twice_j_opt->count()) {
        config.twice_j.clear();
        for (const auto& part : CLI::detail::split(f.twice_j, ',')) {
            try {
                config.twice_j.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw ConfigError("--j2: cannot parse integer '" + part + "'");
            }
        }
    }
    if (f.t_max_opt->count()) config.t_max = f.t_max;
    if (f.n_samples_opt->count()) config.n_samples = f.n_samples;
    if (f.generators_opt->count()) {
        config.generators.clear();
        for (const auto& part : CLI::detail::split(f.generators, ',')) {
            config.generators.push_back(axis_from_name(part));
        }
    }
    if (f.ref_opt->count()) config.ref_kind = reference_kind_from_name(f.ref);
    if (f.beta_opt->count()) config.beta = f.beta;
    if (f.tiebreak_opt->count()) {
        config.tiebreak = f.tiebreak == "auto" ? std::nullopt
                                               : std::optional(tiebreak_from_name(f.tiebreak));
    }
    if (f.workers_opt->count()) config.workers = f.workers;
    if (f.seed_opt->count()) config.seed = f.seed;
    if (f.out_opt->count()) config.out = f.out;
}

}  // namespace

CliParse parse_command_line(const std::vector<std::string>& args) {
    CLI::App app{"LMG quench dynamics: asymmetry monotones, entropy-production bound and "
                 "dynamical order parameter"};
    app.set_help_flag("--help", "Print help");   // keep -h free, --h is the field flag
    app.require_subcommand(1);

    struct ModeCmd {
        Mode mode;
        CLI::App* cmd;
        FlagSet flags;
    };
    std::vector<ModeCmd> cmds;
    cmds.push_back({Mode::trace,
                    app.add_subcommand("trace", "Per-time-sample series for one quench"),
                    {}});
    cmds.push_back({Mode::sweep1d,
                    app.add_subcommand("sweep1d", "Time-averaged observables over one grid"),
                    {}});
    cmds.push_back({Mode::sweep2d,
                    app.add_subcommand("sweep2d", "Time-averaged observables over (gamma,h)"),
                    {}});
    cmds.push_back({Mode::order_parameter,
                    app.add_subcommand("order-parameter",
                                       "Multi-j order-parameter curves and critical points"),
                    {}});
    cmds.push_back({Mode::validate,
                    app.add_subcommand("validate", "Run the numerical oracle suites"),
                    {}});
    for (auto& mc : cmds) add_flags(mc.cmd, mc.flags);

    CliParse parsed;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        parsed.exit_code = 0;
        parsed.message = app.help();
        return parsed;
    } catch (const CLI::ParseError& e) {
        parsed.exit_code = 2;
        parsed.message = std::string(e.what()) + "\nRun with --help for usage.";
        return parsed;
    }

    for (auto& mc : cmds) {
        if (!mc.cmd->parsed()) continue;
        if (mc.cmd->get_option("--help")->count()) {
            parsed.exit_code = 0;
            parsed.message = mc.cmd->help();
            return parsed;
        }
        RunConfig config;
        if (mc.flags.config_opt->count()) {
            config = load_config_file(mc.flags.config_path);
        }
        config.mode = mc.mode;
        apply_flags(mc.flags, config);
        config.validate();
        parsed.config = std::move(config);
        return parsed;
    }
    parsed.exit_code = 2;
    parsed.message = "no subcommand given; run with --help";
    return parsed;
}

}  // namespace lmg
