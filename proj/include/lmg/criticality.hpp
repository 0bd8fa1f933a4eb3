#pragma once

#include "lmg/sweep.hpp"

namespace lmg {

struct OrderParameterResult {
    double raw = 0.0;          // time-averaged <Jz>
    double normalized = 0.0;   // divided by j
    bool converged = false;
};

// Time average of <Jz> along the post-quench trajectory, the dynamical order
// parameter: nonzero in the dynamical ferromagnetic phase, zero past the
// dynamical critical point.
OrderParameterResult order_parameter(const QuenchProtocol& q, const TimeGrid& grid);

struct OrderParameterCurve {
    std::vector<double> h_values;
    std::vector<double> values;   // raw time-averaged <Jz>, one per h
    HalfInteger j;
    double gamma = 0.0;
};

enum class CriticalPointMethod { threshold_crossing, max_neg_slope };

struct CriticalPointEstimate {
    std::optional<double> h_star;
    CriticalPointMethod method = CriticalPointMethod::threshold_crossing;
    double threshold = 0.1;
    std::string diagnostic;
};

// threshold_crossing: first h where |value|/j falls below the threshold,
// linearly interpolated between the bracketing grid points. max_neg_slope:
// midpoint of the steepest descending finite-difference segment. The curve
// must have at least 20 points.
CriticalPointEstimate critical_point(const OrderParameterCurve& curve,
                                     CriticalPointMethod method, double threshold = 0.1);

enum class MapObservable { order_parameter, avg_asymmetry, avg_entropy_bound };

struct MapOptions {
    double coupling = 1.0;
    double h0 = 0.0;
    double t_max = 200.0;
    int n_samples = 4001;
    std::optional<Tiebreak> tiebreak;   // empty = max-jz below gamma 1, max-jx at 1
    ReferenceKind ref_kind = ReferenceKind::ground_of_post;
    double beta = 1.0;
    int workers = 0;
};

// Dense (gamma, h) map of one observable, rows sorted by (gamma, h) regardless
// of worker scheduling. Grids must lie inside (0, 1). For avg_asymmetry the
// generator axis must be supplied.
SweepTable phase_map(const std::vector<double>& h_grid, const std::vector<double>& gamma_grid,
                     HalfInteger j, MapObservable observable,
                     std::optional<GeneratorAxis> generator, const MapOptions& opt);

}  // namespace lmg
