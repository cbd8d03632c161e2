#pragma once

#include <span>
#include <string>
#include <vector>

#include "qgsa/gsa.hpp"
#include "qgsa/minnorm.hpp"

namespace qgsa {

/// Left-continuous inverse ECDF (type-1): smallest order statistic y_(k) with
/// k/n >= alpha. Throws on an empty list.
double empirical_quantile(std::span<const double> values, double alpha);

/// Exhaustive grid search for the min-norm convex combination, the brute-force
/// reference for min_norm_point. Bundles larger than dim+1 points are scanned
/// via their (dim+1)-point subsets (Caratheodory), each on a full weight grid
/// at the given resolution. Accepts at most 6 points.
std::vector<double> simplex_grid_min_norm(const GradientBundle& bundle, double resolution);

/// Central finite differences per coordinate.
std::vector<double> fd_gradient(const Objective& obj, std::span<const double> x,
                                double step = 1e-6);

/// |x1| + 10|x2|, minimum 0 at the origin; kinks on both axes.
Objective abs_weighted_objective();

/// 10|x2 - x1^2| + (1 - x1)^2, minimum 0 at (1,1); kink along the parabola
/// x2 = x1^2. The standard nonsmooth benchmark valley.
Objective nonsmooth_valley_objective();

/// |x - c|^2, smooth sanity case.
Objective shifted_quadratic_objective(std::vector<double> c);

struct BenchmarkObjective {
    std::string name;
    Objective objective;
    std::vector<double> minimizer;
    double min_value = 0;
    std::string nonsmooth_set;
};

std::vector<BenchmarkObjective> benchmark_suite();

/// Plain subgradient descent with diminishing steps step0/sqrt(k+1) along the
/// normalized a.e. gradient; returns the raw f sequence (f(x0) first). The
/// classical zigzag reference against which the sampled-gradient engine is
/// compared.
std::vector<double> subgradient_descent_trace(const Objective& obj, std::span<const double> x0,
                                              long steps, double step0);

}  // namespace qgsa
