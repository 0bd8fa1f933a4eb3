#include "lmg/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "lmg/criticality.hpp"
#include "lmg/parallel.hpp"
#include "lmg/validate.hpp"
#include "lmg/version.hpp"

namespace lmg {

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::trace: return "trace";
        case Mode::sweep1d: return "sweep1d";
        case Mode::sweep2d: return "sweep2d";
        case Mode::order_parameter: return "order-parameter";
        case Mode::validate: return "validate";
    }
    return "?";
}

Mode mode_from_name(const std::string& name) {
    if (name == "trace") return Mode::trace;
    if (name == "sweep1d") return Mode::sweep1d;
    if (name == "sweep2d") return Mode::sweep2d;
    if (name == "order-parameter" || name == "order_parameter") return Mode::order_parameter;
    if (name == "validate") return Mode::validate;
    throw ConfigError("unknown mode '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::string current;
    for (const char c : s) {
        if (c == delim) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_double(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) {
        throw ConfigError(what + ": cannot parse number '" + s + "'");
    }
    return v;
}

long long parse_integer(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(what + ": cannot parse integer '" + s + "'");
    }
    return v;
}

std::string double_str(double v) {
    // Shortest representation that parses back to the same bits.
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string generators_str(const std::vector<GeneratorAxis>& generators) {
    std::string out;
    for (size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ',';
        out += axis_name(generators[i]);
    }
    return out;
}

std::string twice_j_str(const std::vector<int>& twice_j) {
    std::string out;
    for (size_t i = 0; i < twice_j.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(twice_j[i]);
    }
    return out;
}

}  // namespace

std::vector<double> GridSpec::points() const {
    std::vector<double> pts;
    pts.reserve(n);
    if (n == 1) {
        pts.push_back(lo);
        return pts;
    }
    for (int k = 0; k < n; ++k) {
        pts.push_back(k == n - 1 ? hi : lo + (hi - lo) * k / (n - 1));
    }
    return pts;
}

std::string GridSpec::str() const {
    return double_str(lo) + ":" + double_str(hi) + ":" + std::to_string(n);
}

GridSpec GridSpec::parse(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw ConfigError("grid '" + text + "' must look like lo:hi:n");
    }
    GridSpec g;
    g.lo = parse_double(parts[0], "grid lower bound");
    g.hi = parse_double(parts[1], "grid upper bound");
    g.n = static_cast<int>(parse_integer(parts[2], "grid point count"));
    if (g.n < 1) throw ConfigError("grid '" + text + "': need at least one point");
    if (g.n >= 2 && !(g.hi > g.lo)) {
        throw ConfigError("grid '" + text + "': upper bound must exceed lower bound");
    }
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi)) {
        throw ConfigError("grid '" + text + "': bounds must be finite");
    }
    return g;
}

Tiebreak RunConfig::resolved_tiebreak(double gamma_value) const {
    if (tiebreak) return *tiebreak;
    return gamma_value < 1.0 ? Tiebreak::max_jz : Tiebreak::max_jx;
}

void RunConfig::validate() const {
    if (!(coupling > 0.0) || !std::isfinite(coupling)) {
        throw ConfigError("J must be positive and finite");
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in [0,1]");
    if (gamma_grid) {
        for (const double g : gamma_grid->points()) {
            if (!(g >= 0.0 && g <= 1.0)) throw ConfigError("gamma-grid must lie in [0,1]");
        }
    }
    if (!std::isfinite(h0) || !std::isfinite(h)) throw ConfigError("fields must be finite");
    if (twice_j.empty()) throw ConfigError("j2 must have at least one entry");
    for (const int tj : twice_j) {
        if (tj < 1) throw ConfigError("j2 entries must be >= 1");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("tmax must be positive");
    if (n_samples < 2) throw ConfigError("samples must be >= 2");
    if (generators.empty()) throw ConfigError("generators must be non-empty");
    for (size_t i = 0; i < generators.size(); ++i) {
        for (size_t k = i + 1; k < generators.size(); ++k) {
            if (generators[i] == generators[k]) {
                throw ConfigError("generators contains duplicates");
            }
        }
    }
    if (ref_kind == ReferenceKind::gibbs_of_post && !(beta > 0.0)) {
        throw ConfigError("beta must be positive for the gibbs reference");
    }
    if (workers < 0) throw ConfigError("workers must be >= 0");

    const bool multi_j = twice_j.size() > 1;
    switch (mode) {
        case Mode::trace:
            if (h_grid || gamma_grid) throw ConfigError("trace mode takes scalar h and gamma");
            if (multi_j) throw ConfigError("trace mode takes a single j2");
            break;
        case Mode::sweep1d:
            if (static_cast<bool>(h_grid) == static_cast<bool>(gamma_grid)) {
                throw ConfigError("sweep1d needs exactly one of h-grid, gamma-grid");
            }
            if (multi_j) throw ConfigError("sweep1d takes a single j2");
            break;
        case Mode::sweep2d:
            if (!h_grid || !gamma_grid) throw ConfigError("sweep2d needs h-grid and gamma-grid");
            if (multi_j) throw ConfigError("sweep2d takes a single j2");
            break;
        case Mode::order_parameter:
            if (!h_grid) throw ConfigError("order-parameter mode needs h-grid");
            if (gamma_grid) throw ConfigError("order-parameter mode takes scalar gamma");
            break;
        case Mode::validate:
            break;
    }
    if (mode != Mode::validate && trim(out).empty()) {
        throw ConfigError("out path must be non-empty");
    }
}

namespace {

std::vector<std::pair<std::string, std::string>> config_key_values(const RunConfig& c) {
    return {
        {"mode", mode_name(c.mode)},
        {"J", double_str(c.coupling)},
        {"gamma", double_str(c.gamma)},
        {"gamma-grid", c.gamma_grid ? c.gamma_grid->str() : "none"},
        {"h0", double_str(c.h0)},
        {"h", double_str(c.h)},
        {"h-grid", c.h_grid ? c.h_grid->str() : "none"},
        {"j2", twice_j_str(c.twice_j)},
        {"tmax", double_str(c.t_max)},
        {"samples", std::to_string(c.n_samples)},
        {"generators", generators_str(c.generators)},
        {"ref", reference_kind_name(c.ref_kind)},
        {"beta", double_str(c.beta)},
        {"tiebreak", c.tiebreak ? tiebreak_name(*c.tiebreak) : "auto"},
        {"workers", std::to_string(c.workers)},
        {"seed", std::to_string(c.seed)},
        {"out", c.out},
    };
}

}  // namespace

std::string serialize_config(const RunConfig& config) {
    std::string text;
    for (const auto& [key, value] : config_key_values(config)) {
        text += key + " = " + value + "\n";
    }
    return text;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig config;
    int line_no = 0;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string where = "config line " + std::to_string(line_no) + " (" + key + ")";
        try {
            if (key == "mode") {
                config.mode = mode_from_name(value);
            } else if (key == "J") {
                config.coupling = parse_double(value, where);
            } else if (key == "gamma") {
                config.gamma = parse_double(value, where);
            } else if (key == "gamma-grid") {
                config.gamma_grid =
                    value == "none" ? std::nullopt : std::optional(GridSpec::parse(value));
            } else if (key == "h0") {
                config.h0 = parse_double(value, where);
            } else if (key == "h") {
                config.h = parse_double(value, where);
            } else if (key == "h-grid") {
                config.h_grid =
                    value == "none" ? std::nullopt : std::optional(GridSpec::parse(value));
            } else if (key == "j2") {
                config.twice_j.clear();
                for (const auto& part : split(value, ',')) {
                    config.twice_j.push_back(static_cast<int>(parse_integer(part, where)));
                }
            } else if (key == "tmax") {
                config.t_max = parse_double(value, where);
            } else if (key == "samples") {
                config.n_samples = static_cast<int>(parse_integer(value, where));
            } else if (key == "generators") {
                config.generators.clear();
                for (const auto& part : split(value, ',')) {
                    config.generators.push_back(axis_from_name(trim(part)));
                }
            } else if (key == "ref") {
                config.ref_kind = reference_kind_from_name(value);
            } else if (key == "beta") {
                config.beta = parse_double(value, where);
            } else if (key == "tiebreak") {
                config.tiebreak = value == "auto" ? std::nullopt
                                                  : std::optional(tiebreak_from_name(value));
            } else if (key == "workers") {
                config.workers = static_cast<int>(parse_integer(value, where));
            } else if (key == "seed") {
                config.seed = static_cast<std::uint64_t>(parse_integer(value, where));
            } else if (key == "out") {
                config.out = value;
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            if (std::string(e.what()).rfind("config line", 0) == 0) throw;
            throw ConfigError(where + ": " + e.what());
        }
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_csv(const SweepTable& table) {
    std::string out;
    for (size_t i = 0; i < table.schema.size(); ++i) {
        if (i) out += ',';
        out += table.schema[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.schema.size()) {
            throw NumericalError("render_csv: row width does not match the schema");
        }
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_table_files(const SweepTable& table, const std::string& out_stem) {
    {
        std::ofstream csv(out_stem + ".csv", std::ios::binary);
        if (!csv) throw ConfigError("cannot write '" + out_stem + ".csv'");
        csv << render_csv(table);
    }
    std::ofstream meta(out_stem + ".meta", std::ios::binary);
    if (!meta) throw ConfigError("cannot write '" + out_stem + ".meta'");
    meta << "# " << kVersion << " run metadata\n";
    for (const auto& [key, value] : table.metadata) {
        meta << key << " = " << value << "\n";
    }
}

PointRecord evaluate_quench_point(HalfInteger j, double gamma, double h, const PointOptions& opt,
                                  const GroundState* initial) {
    const LmgParams post(opt.coupling, gamma, h, j);
    const TimeGrid grid(opt.t_max, opt.n_samples);

    GroundState local_initial;
    if (initial == nullptr) {
        local_initial = ground_state(post.with_field(opt.h0), opt.tiebreak);
        initial = &local_initial;
    }
    const HermitianOperator h_post = build_hamiltonian(post);
    const Spectrum post_spectrum = hermitian_eigendecomposition(h_post);
    const Trajectory traj = evolve_from(post_spectrum, h_post, initial->vector, grid);

    PointRecord rec;
    rec.gamma = gamma;
    rec.h = h;

    // Per-sample observables go through the tridiagonal form of the collective
    // operators; the dense operator path stays as the reference implementation.
    const auto tridiags = collective_tridiagonals(j);
    const int n = grid.n_samples;
    std::vector<double> jz_series(n);
    std::array<std::vector<double>, 3> asym_series;
    if (opt.with_asymmetry) {
        for (auto& s : asym_series) s.resize(n);
    }
    for (int s = 0; s < n; ++s) {
        const StateVector& psi = traj.states[s];
        const auto [jz_mean, jz_second] = tridiags.jz.moments(psi);
        jz_series[s] = jz_mean;
        if (opt.with_asymmetry) {
            const auto [jx_mean, jx_second] = tridiags.jx.moments(psi);
            const auto [jy_mean, jy_second] = tridiags.jy.moments(psi);
            asym_series[0][s] = asymmetry_from_moments(jx_mean, jx_second);
            asym_series[1][s] = asymmetry_from_moments(jy_mean, jy_second);
            asym_series[2][s] = asymmetry_from_moments(jz_mean, jz_second);
        }
    }

    const TimeAverageResult jz_avg = time_average(jz_series, grid);
    rec.order_param = jz_avg.value;
    rec.order_param_norm = jz_avg.value / j.value();
    rec.order_converged = jz_avg.converged;

    if (opt.with_asymmetry) {
        for (int axis = 0; axis < 3; ++axis) {
            const TimeAverageResult avg = time_average(asym_series[axis], grid);
            rec.asym_avg[axis] = avg.value;
            rec.asym_converged[axis] = avg.converged;
        }
    }
    if (opt.with_entropy_bound) {
        const auto make_reference = [&]() {
            switch (opt.ref_kind) {
                case ReferenceKind::ground_of_post:
                    return ReferenceState::ground_from_spectrum(post_spectrum, h_post, j,
                                                                opt.tiebreak);
                case ReferenceKind::gibbs_of_post:
                    return ReferenceState::gibbs_from_spectrum(post_spectrum, opt.beta);
                case ReferenceKind::diagonal_of_post:
                    return ReferenceState::diagonal_from_spectrum(post_spectrum,
                                                                  initial->vector);
            }
            throw ConfigError("unknown reference kind");
        };
        const EntropyBoundRecord bound = entropy_bound_series(traj, make_reference());
        rec.bound_avg = bound.time_average.value;
        rec.bound_converged = bound.time_average.converged;
        rec.bures_avg = time_average(bound.bures_series, grid).value;
    }

    for (const double v : {rec.order_param, rec.asym_avg[0], rec.asym_avg[1], rec.asym_avg[2],
                           rec.bures_avg, rec.bound_avg}) {
        if (!std::isfinite(v)) {
            throw NumericalError("evaluate_quench_point: non-finite time average");
        }
    }
    return rec;
}

namespace {

std::string iso_timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

PointOptions point_options(const RunConfig& config, double gamma_value) {
    PointOptions opt;
    opt.coupling = config.coupling;
    opt.h0 = config.h0;
    opt.t_max = config.t_max;
    opt.n_samples = config.n_samples;
    opt.tiebreak = config.resolved_tiebreak(gamma_value);
    opt.ref_kind = config.ref_kind;
    opt.beta = config.beta;
    return opt;
}

std::vector<GeneratorAxis> sorted_generators(const RunConfig& config) {
    std::vector<GeneratorAxis> axes = config.generators;
    std::sort(axes.begin(), axes.end(),
              [](GeneratorAxis a, GeneratorAxis b) { return static_cast<int>(a) < static_cast<int>(b); });
    return axes;
}

SweepTable run_trace(const RunConfig& config) {
    const HalfInteger j(config.twice_j[0]);
    const LmgParams post(config.coupling, config.gamma, config.h, j);
    const Tiebreak tiebreak = config.resolved_tiebreak(config.gamma);
    const QuenchProtocol q(post, config.h0, tiebreak);
    const TimeGrid grid(config.t_max, config.n_samples);

    const GroundState gs = ground_state(q.pre, tiebreak);
    const HermitianOperator h_post = build_hamiltonian(post);
    const Spectrum post_spectrum = hermitian_eigendecomposition(h_post);
    const Trajectory traj = evolve_from(post_spectrum, h_post, gs.vector, grid);

    const auto ops = collective_operators(j);
    const auto jx = expectation_series(traj, ops.jx);
    const auto jy = expectation_series(traj, ops.jy);
    const auto jz = expectation_series(traj, ops.jz);
    const auto loschmidt = return_probability(traj);
    const auto rate = rate_function(traj, j);
    const auto fx = asymmetry_series(traj, GeneratorChoice::make(GeneratorAxis::x, ops));
    const auto fy = asymmetry_series(traj, GeneratorChoice::make(GeneratorAxis::y, ops));
    const auto fz = asymmetry_series(traj, GeneratorChoice::make(GeneratorAxis::z, ops));
    const auto make_reference = [&]() {
        switch (config.ref_kind) {
            case ReferenceKind::ground_of_post:
                return ReferenceState::ground_from_spectrum(post_spectrum, h_post, j, tiebreak);
            case ReferenceKind::gibbs_of_post:
                return ReferenceState::gibbs_from_spectrum(post_spectrum, config.beta);
            case ReferenceKind::diagonal_of_post:
                return ReferenceState::diagonal_from_spectrum(post_spectrum, gs.vector);
        }
        throw ConfigError("unknown reference kind");
    };
    const EntropyBoundRecord bound = entropy_bound_series(traj, make_reference());

    SweepTable table;
    table.schema = {"t",      "exp_jx", "exp_jy", "exp_jz",      "loschmidt",    "rate_function",
                    "asym_x", "asym_y", "asym_z", "bures_angle", "entropy_bound"};
    table.rows.reserve(config.n_samples);
    for (int s = 0; s < config.n_samples; ++s) {
        table.rows.push_back({grid.time(s), jx[s], jy[s], jz[s], loschmidt[s], rate[s],
                              fx.series[s], fy.series[s], fz.series[s], bound.bures_series[s],
                              bound.bound_series[s]});
    }

    table.metadata.emplace_back("run.tiebreak_resolved", tiebreak_name(tiebreak));
    table.metadata.emplace_back("run.rate_normalization", "1/N with N = 2j");
    table.metadata.emplace_back("run.ground_state", gs.selection_note);
    table.metadata.emplace_back("run.ground_energy", double_str(gs.energy));
    table.metadata.emplace_back("run.ground_degenerate", gs.degenerate ? "1" : "0");
    const TimeAverageResult jz_avg = time_average(jz, grid);
    table.metadata.emplace_back("run.avg_jz", double_str(jz_avg.value));
    table.metadata.emplace_back("run.avg_jz_converged", jz_avg.converged ? "1" : "0");
    for (const auto* rec : {&fx, &fy, &fz}) {
        const std::string base = std::string("run.avg_asym_") + axis_name(rec->axis);
        table.metadata.emplace_back(base, double_str(rec->time_average.value));
        table.metadata.emplace_back(base + "_converged", rec->time_average.converged ? "1" : "0");
    }
    table.metadata.emplace_back("run.avg_entropy_bound", double_str(bound.time_average.value));
    table.metadata.emplace_back("run.avg_entropy_bound_converged",
                                bound.time_average.converged ? "1" : "0");
    return table;
}

SweepTable run_sweep(const RunConfig& config) {
    const HalfInteger j(config.twice_j[0]);
    const std::vector<double> gammas =
        config.gamma_grid ? config.gamma_grid->points() : std::vector<double>{config.gamma};
    const std::vector<double> hs =
        config.h_grid ? config.h_grid->points() : std::vector<double>{config.h};

    const int nh = static_cast<int>(hs.size());
    const int total = nh * static_cast<int>(gammas.size());

    // The pre-quench ground state depends only on gamma, so compute it per row.
    std::vector<GroundState> row_initial(gammas.size());
    for (size_t gi = 0; gi < gammas.size(); ++gi) {
        row_initial[gi] = ground_state(LmgParams(config.coupling, gammas[gi], config.h0, j),
                                       config.resolved_tiebreak(gammas[gi]));
    }

    const auto records = parallel_map<PointRecord>(total, config.workers, [&](int idx) {
        const double gamma = gammas[idx / nh];
        const double h = hs[idx % nh];
        try {
            return evaluate_quench_point(j, gamma, h, point_options(config, gamma),
                                         &row_initial[idx / nh]);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " [at gamma=" + format_number(gamma) +
                                 " h=" + format_number(h) + "]");
        }
    });

    const auto axes = sorted_generators(config);
    SweepTable table;
    table.schema = {"gamma", "h", "order_parameter", "order_parameter_norm", "order_converged"};
    for (const auto axis : axes) {
        table.schema.push_back(std::string("asym_") + axis_name(axis));
        table.schema.push_back(std::string("asym_") + axis_name(axis) + "_converged");
    }
    table.schema.push_back("bures_avg");
    table.schema.push_back("entropy_bound_avg");
    table.schema.push_back("entropy_bound_converged");

    int unconverged = 0;
    for (const auto& rec : records) {
        std::vector<double> row = {rec.gamma, rec.h, rec.order_param, rec.order_param_norm,
                                   rec.order_converged ? 1.0 : 0.0};
        bool all_converged = rec.order_converged && rec.bound_converged;
        for (const auto axis : axes) {
            row.push_back(rec.asym_avg[static_cast<int>(axis)]);
            row.push_back(rec.asym_converged[static_cast<int>(axis)] ? 1.0 : 0.0);
            all_converged = all_converged && rec.asym_converged[static_cast<int>(axis)];
        }
        row.push_back(rec.bures_avg);
        row.push_back(rec.bound_avg);
        row.push_back(rec.bound_converged ? 1.0 : 0.0);
        table.rows.push_back(std::move(row));
        if (!all_converged) ++unconverged;
    }
    table.metadata.emplace_back("run.unconverged_rows", std::to_string(unconverged));
    return table;
}

SweepTable run_order_parameter(const RunConfig& config) {
    std::vector<int> js = config.twice_j;
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    const std::vector<double> hs = config.h_grid->points();
    const int nh = static_cast<int>(hs.size());
    const int total = nh * static_cast<int>(js.size());

    std::vector<GroundState> initial_per_j(js.size());
    for (size_t q = 0; q < js.size(); ++q) {
        initial_per_j[q] =
            ground_state(LmgParams(config.coupling, config.gamma, config.h0, HalfInteger(js[q])),
                         config.resolved_tiebreak(config.gamma));
    }

    const auto records = parallel_map<PointRecord>(total, config.workers, [&](int idx) {
        const HalfInteger j(js[idx / nh]);
        const double h = hs[idx % nh];
        PointOptions opt = point_options(config, config.gamma);
        opt.with_asymmetry = false;
        opt.with_entropy_bound = false;
        try {
            return evaluate_quench_point(j, config.gamma, h, opt, &initial_per_j[idx / nh]);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " [at 2j=" + std::to_string(j.twice()) +
                                 " h=" + format_number(h) + "]");
        }
    });

    SweepTable table;
    table.schema = {"twice_j", "gamma", "h", "order_parameter", "order_parameter_norm",
                    "order_converged"};
    for (int q = 0; q < static_cast<int>(js.size()); ++q) {
        for (int k = 0; k < nh; ++k) {
            const auto& rec = records[q * nh + k];
            table.rows.push_back({static_cast<double>(js[q]), rec.gamma, rec.h, rec.order_param,
                                  rec.order_param_norm, rec.order_converged ? 1.0 : 0.0});
        }
    }

    // Critical-point estimates per j, both methods.
    for (int q = 0; q < static_cast<int>(js.size()); ++q) {
        OrderParameterCurve curve{hs, {}, HalfInteger(js[q]), config.gamma};
        curve.values.reserve(nh);
        for (int k = 0; k < nh; ++k) curve.values.push_back(records[q * nh + k].order_param);
        for (const auto method :
             {CriticalPointMethod::threshold_crossing, CriticalPointMethod::max_neg_slope}) {
            const auto est = critical_point(curve, method);
            const std::string key =
                "run.critical_point.j2_" + std::to_string(js[q]) + "." +
                (method == CriticalPointMethod::threshold_crossing ? "threshold_crossing"
                                                                   : "max_neg_slope");
            table.metadata.emplace_back(key,
                                        est.h_star ? double_str(*est.h_star)
                                                   : "none (" + est.diagnostic + ")");
        }
    }
    return table;
}

SweepTable run_validate(const RunConfig& config, std::vector<SuiteResult>& suites) {
    suites = run_validation_suites(config.seed);
    SweepTable table;
    for (const auto& suite : suites) {
        table.metadata.emplace_back("run.suite." + suite.name,
                                    std::to_string(suite.passed) + " passed, " +
                                        std::to_string(suite.failed) + " failed");
    }
    return table;
}

}  // namespace

RunResult run(const RunConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    RunResult result;
    std::vector<SuiteResult> suites;
    SweepTable table;
    switch (config.mode) {
        case Mode::trace: table = run_trace(config); break;
        case Mode::sweep1d:
        case Mode::sweep2d: table = run_sweep(config); break;
        case Mode::order_parameter: table = run_order_parameter(config); break;
        case Mode::validate: table = run_validate(config, suites); break;
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<std::pair<std::string, std::string>> metadata;
    metadata.emplace_back("version", kVersion);
    for (auto& kv : config_key_values(config)) metadata.push_back(std::move(kv));
    metadata.emplace_back("run.rows", std::to_string(table.rows.size()));
    metadata.emplace_back("run.wall_time_s", format_number(wall));
    metadata.emplace_back("run.timestamp_utc", iso_timestamp_utc());
    for (auto& kv : table.metadata) metadata.push_back(std::move(kv));
    table.metadata = std::move(metadata);

    if (config.mode == Mode::validate) {
        int failed = 0;
        for (const auto& suite : suites) failed += suite.failed;
        if (failed > 0) {
            std::string detail;
            for (const auto& suite : suites) {
                for (const auto& f : suite.failures) detail += "\n  " + suite.name + ": " + f;
            }
            throw NumericalError("validation failed (" + std::to_string(failed) + " checks)" +
                                 detail);
        }
        result.table = std::move(table);
        result.suites = std::move(suites);
        return result;
    }

    write_table_files(table, config.out);
    result.csv_path = config.out + ".csv";
    result.meta_path = config.out + ".meta";
    result.table = std::move(table);
    return result;
}

}  // namespace lmg
