#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgsa/gsa.hpp"
#include "qgsa/panel.hpp"
#include "qgsa/smoother.hpp"

namespace qgsa {

enum class InitMode { global_constant, per_day_constant };

struct QamConfig {
    double alpha = 0.9;
    GsaParams gsa;  // defaulted below to the averaging bundle with m = 20
    SmootherSpec smoother;
    InitMode init = InitMode::global_constant;

    QamConfig() {
        gsa.bundle_mode = BundleMode::avg;
        gsa.eps0 = 0;  // 0 = auto: 0.1 * pooled IQR of the panel values
    }

    void validate() const;
};

/// Fitted alpha-quantile values on the (t, j) grid. Unobserved cells hold NaN.
struct QuantileSurface {
    double alpha = 0;
    int hours = 0;
    int day_classes = 0;
    std::vector<double> grid;         // (t-1)*J + (j-1), NaN where n_tj == 0
    std::vector<long> cell_counts;    // n_tj, same layout
    std::vector<double> obs_vector;   // per-observation fitted values, cell-constant
    IterationLog fit_log;
    double final_loss = 0;
    bool converged = false;

    bool observed(int t, int j) const;
    double grid_at(int t, int j) const;
};

/// Constant initializer: the pooled empirical alpha-quantile (global mode) or
/// each day class's own pooled quantile (per-day mode), one entry per
/// observation.
std::vector<double> init_surface(const SalesPanel& panel, const QamConfig& config);

/// Fits the quantile additive model by gradient-sampling descent with the
/// per-day smoothed, normalized direction. Returns the best-loss iterate.
QuantileSurface qam_fit(const SalesPanel& panel, const QamConfig& config);

struct PredictResult {
    double value = 0;
    bool extrapolated = false;
};

/// Grid lookup with linear interpolation between observed hours of day j and
/// nearest-endpoint extrapolation (flagged) outside the observed range.
/// Throws std::invalid_argument if day j has no observed hours at all.
PredictResult qam_predict(const QuantileSurface& surface, double t, int j);

struct Decomposition {
    double beta0 = 0;                 // grand mean of the observed grid
    std::vector<double> day_offset;   // per day class: mean_t grid(t,j) - beta0 (NaN if unobserved)
    std::vector<double> curves;       // grid layout; h_j(t) centered per day, NaN if unobserved
};

/// Splits the grid into intercept + per-day centered curves; each curve sums
/// to zero over its observed hours and beta0 + offset_j + h_j(t) reconstructs
/// the grid exactly.
Decomposition decompose(const QuantileSurface& surface);

/// surface.csv: `# meta:` header line, then day,hour,alpha,q_hat rows.
/// Values are printed with round-trip precision.
void write_surface_csv(const QuantileSurface& surface, std::ostream& out,
                       const std::string& meta = {});
QuantileSurface read_surface_csv(std::istream& in);  // throws SchemaError on malformed input

}  // namespace qgsa
