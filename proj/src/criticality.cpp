#include "lmg/criticality.hpp"

#include <algorithm>
#include <cmath>

#include "lmg/parallel.hpp"

namespace lmg {

OrderParameterResult order_parameter(const QuenchProtocol& q, const TimeGrid& grid) {
    const Trajectory traj = evolve(q, grid);
    const auto ops = collective_operators(q.post.j);
    const auto series = expectation_series(traj, ops.jz);
    const TimeAverageResult avg = time_average(series, grid);
    const double j = q.post.j.value();
    return OrderParameterResult{avg.value, avg.value / j, avg.converged};
}

CriticalPointEstimate critical_point(const OrderParameterCurve& curve,
                                     CriticalPointMethod method, double threshold) {
    const int n = static_cast<int>(curve.h_values.size());
    if (n < 20 || curve.values.size() != curve.h_values.size()) {
        throw ConfigError("critical_point: need a curve with at least 20 points");
    }
    if (!std::is_sorted(curve.h_values.begin(), curve.h_values.end())) {
        throw ConfigError("critical_point: h grid must be ascending");
    }

    const double j = curve.j.value();
    CriticalPointEstimate est;
    est.method = method;
    est.threshold = threshold;

    if (method == CriticalPointMethod::threshold_crossing) {
        for (int i = 0; i < n; ++i) {
            const double v = std::abs(curve.values[i]) / j;
            if (v < threshold) {
                if (i == 0) {
                    est.h_star = curve.h_values[0];
                    est.diagnostic = "curve starts below threshold";
                    return est;
                }
                const double prev = std::abs(curve.values[i - 1]) / j;
                const double span = prev - v;
                const double frac = span > 0.0 ? (prev - threshold) / span : 1.0;
                est.h_star =
                    curve.h_values[i - 1] + frac * (curve.h_values[i] - curve.h_values[i - 1]);
                return est;
            }
        }
        est.diagnostic = "no crossing below threshold in the scanned interval";
        return est;
    }

    // max_neg_slope
    int best = -1;
    double best_slope = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double dh = curve.h_values[i + 1] - curve.h_values[i];
        if (!(dh > 0.0)) continue;
        const double slope = (std::abs(curve.values[i + 1]) - std::abs(curve.values[i])) / (j * dh);
        if (slope < best_slope) {
            best_slope = slope;
            best = i;
        }
    }
    if (best < 0) {
        est.diagnostic = "curve has no descending segment";
        return est;
    }
    est.h_star = 0.5 * (curve.h_values[best] + curve.h_values[best + 1]);
    return est;
}

SweepTable phase_map(const std::vector<double>& h_grid, const std::vector<double>& gamma_grid,
                     HalfInteger j, MapObservable observable,
                     std::optional<GeneratorAxis> generator, const MapOptions& opt) {
    if (h_grid.empty() || gamma_grid.empty()) {
        throw ConfigError("phase_map: grids must be non-empty");
    }
    for (const double h : h_grid) {
        if (!(h > 0.0 && h < 1.0)) throw ConfigError("phase_map: h grid must lie inside (0,1)");
    }
    for (const double g : gamma_grid) {
        if (!(g > 0.0 && g < 1.0)) {
            throw ConfigError("phase_map: gamma grid must lie inside (0,1)");
        }
    }
    if (observable == MapObservable::avg_asymmetry && !generator) {
        throw ConfigError("phase_map: avg_asymmetry needs a generator axis");
    }

    std::vector<double> h_sorted = h_grid;
    std::vector<double> gamma_sorted = gamma_grid;
    std::sort(h_sorted.begin(), h_sorted.end());
    std::sort(gamma_sorted.begin(), gamma_sorted.end());

    const int nh = static_cast<int>(h_sorted.size());
    const int total = nh * static_cast<int>(gamma_sorted.size());

    const auto options_for = [&](double gamma) {
        PointOptions popt;
        popt.coupling = opt.coupling;
        popt.h0 = opt.h0;
        popt.t_max = opt.t_max;
        popt.n_samples = opt.n_samples;
        popt.tiebreak = opt.tiebreak ? *opt.tiebreak
                                     : (gamma < 1.0 ? Tiebreak::max_jz : Tiebreak::max_jx);
        popt.ref_kind = opt.ref_kind;
        popt.beta = opt.beta;
        return popt;
    };

    std::vector<GroundState> row_initial(gamma_sorted.size());
    for (size_t gi = 0; gi < gamma_sorted.size(); ++gi) {
        row_initial[gi] = ground_state(LmgParams(opt.coupling, gamma_sorted[gi], opt.h0, j),
                                       options_for(gamma_sorted[gi]).tiebreak);
    }

    const auto records = parallel_map<PointRecord>(total, opt.workers, [&](int idx) {
        const double gamma = gamma_sorted[idx / nh];
        const double h = h_sorted[idx % nh];
        try {
            return evaluate_quench_point(j, gamma, h, options_for(gamma), &row_initial[idx / nh]);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " [at gamma=" + format_number(gamma) +
                                 " h=" + format_number(h) + " 2j=" + std::to_string(j.twice()) +
                                 "]");
        }
    });

    SweepTable table;
    std::string column;
    switch (observable) {
        case MapObservable::order_parameter: column = "order_parameter_norm"; break;
        case MapObservable::avg_asymmetry:
            column = std::string("asym_") + axis_name(*generator);
            break;
        case MapObservable::avg_entropy_bound: column = "entropy_bound_avg"; break;
    }
    table.schema = {"gamma", "h", column, column + "_converged"};
    table.rows.reserve(records.size());
    for (const auto& rec : records) {
        double value = 0.0;
        bool converged = false;
        switch (observable) {
            case MapObservable::order_parameter:
                value = rec.order_param_norm;
                converged = rec.order_converged;
                break;
            case MapObservable::avg_asymmetry:
                value = rec.asym_avg[static_cast<int>(*generator)];
                converged = rec.asym_converged[static_cast<int>(*generator)];
                break;
            case MapObservable::avg_entropy_bound:
                value = rec.bound_avg;
                converged = rec.bound_converged;
                break;
        }
        table.rows.push_back({rec.gamma, rec.h, value, converged ? 1.0 : 0.0});
    }
    return table;
}

}  // namespace lmg
