#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmg/thermo.hpp"
#include "lmg/validate.hpp"

namespace lmg {

enum class Mode { trace, sweep1d, sweep2d, order_parameter, validate };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

/// Inclusive uniform grid "lo:hi:n".
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;

    std::vector<double> points() const;
    std::string str() const;
    static GridSpec parse(const std::string& text);
    bool operator==(const GridSpec&) const = default;
};

/// Every knob that affects emitted numbers. Round-trips losslessly through the
/// key-value serialization below.
struct RunConfig {
    Mode mode = Mode::trace;
    double coupling = 1.0;                    // J
    double gamma = 0.2;
    std::optional<GridSpec> gamma_grid;
    double h0 = 0.0;
    double h = 0.8;
    std::optional<GridSpec> h_grid;
    std::vector<int> twice_j = {200};         // multiple entries only in order-parameter mode
    double t_max = 200.0;
    int n_samples = 4001;
    std::vector<GeneratorAxis> generators = {GeneratorAxis::x, GeneratorAxis::y,
                                             GeneratorAxis::z};
    ReferenceKind ref_kind = ReferenceKind::diagonal_of_post;
    double beta = 1.0;                        // used by the gibbs reference only
    std::optional<Tiebreak> tiebreak;         // empty = pick by gamma (max-jz below 1, else max-jx)
    int workers = 0;                          // 0 = hardware concurrency
    std::uint64_t seed = 12345;               // validation suites only
    std::string out = "run";

    Tiebreak resolved_tiebreak(double gamma_value) const;
    void validate() const;
    bool operator==(const RunConfig&) const = default;
};

std::string serialize_config(const RunConfig& config);
RunConfig parse_config_text(const std::string& text);    // diagnostics carry line numbers
RunConfig load_config_file(const std::string& path);

/// Figure-ready result table: fixed column order, rows pre-sorted by the mode's
/// key, metadata echoed alongside.
struct SweepTable {
    std::vector<std::string> schema;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// 12 significant digits, round-half-even; the reproducibility contract for
/// every number written to disk.
std::string format_number(double v);

std::string render_csv(const SweepTable& table);
void write_table_files(const SweepTable& table, const std::string& out_stem);

struct PointOptions {
    double coupling = 1.0;
    double h0 = 0.0;
    double t_max = 200.0;
    int n_samples = 4001;
    Tiebreak tiebreak = Tiebreak::max_jz;
    ReferenceKind ref_kind = ReferenceKind::diagonal_of_post;
    double beta = 1.0;
    bool with_asymmetry = true;
    bool with_entropy_bound = true;
};

/// Time-averaged observables of one quench, the unit of work a sweep farms out.
struct PointRecord {
    double gamma = 0.0;
    double h = 0.0;
    double order_param = 0.0;        // time-averaged <Jz>
    double order_param_norm = 0.0;   // divided by j
    bool order_converged = false;
    std::array<double, 3> asym_avg{};       // indexed by GeneratorAxis
    std::array<bool, 3> asym_converged{};
    double bures_avg = 0.0;
    double bound_avg = 0.0;
    bool bound_converged = false;
};

// `initial` lets a sweep reuse one pre-quench ground state (it only depends on
// gamma and h0) across a whole grid row; when null it is computed here.
PointRecord evaluate_quench_point(HalfInteger j, double gamma, double h, const PointOptions& opt,
                                  const GroundState* initial = nullptr);

struct RunResult {
    SweepTable table;
    std::string csv_path;
    std::string meta_path;
    std::vector<SuiteResult> suites;   // validate mode only
};

/// Executes the configured mode and writes <out>.csv and <out>.meta
/// (validate mode only reports). Throws ConfigError or NumericalError.
RunResult run(const RunConfig& config);

}  // namespace lmg
