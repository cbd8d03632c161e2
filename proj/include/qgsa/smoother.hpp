#pragma once

#include <span>
#include <string>
#include <vector>

#include "qgsa/panel.hpp"

namespace qgsa {

/// LOESS configuration. Groups are always day classes.
struct SmootherSpec {
    double span = 0.75;  // fraction of observations per local neighborhood, (0, 1]
    int degree = 1;      // local polynomial degree, 0..2
    bool resmooth_iterate = false;

    void validate() const;  // throws std::invalid_argument
};

struct SmootherDiagnostics {
    long widened_neighborhoods = 0;
    long degenerate_groups = 0;
    std::vector<std::string> warnings;
};

/// Locally weighted polynomial fit with tricube weights at every x_i.
/// Neighborhood size counts observations (ceil(span*n), ties in distance
/// included); replicated x are expected and share bitwise-identical output.
/// Neighborhoods too thin for the requested degree are widened (and flagged).
std::vector<double> loess_fit(std::span<const double> x, std::span<const double> z,
                              const SmootherSpec& spec, SmootherDiagnostics* diag = nullptr);

/// Applies loess_fit independently per day class with the hour as covariate,
/// reassembled in flat panel order. A class with fewer distinct hours than
/// degree+1 falls back to its group mean (flagged).
std::vector<double> smooth_by_group(std::span<const double> values, const SalesPanel& panel,
                                    const SmootherSpec& spec, SmootherDiagnostics* diag = nullptr);

}  // namespace qgsa
