#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qgsa/minnorm.hpp"

namespace qgsa {

using Rng = std::mt19937_64;

enum class BundleMode { qp, avg };

struct GsaParams {
    int m = 0;  // sampling size; 0 = auto (dim+1 capped at 100 in qp mode, 20 in avg mode)
    double beta = 1e-4;
    double mu = 0.5;      // eps reduction factor
    double lambda = 0.5;  // tau reduction factor
    double eps0 = 0.1;
    double tau0 = 1e-2;
    double eps_min = 1e-6;
    double tau_min = 1e-6;
    long max_iter = 10000;
    std::uint64_t seed = 0;
    BundleMode bundle_mode = BundleMode::qp;

    void validate() const;  // throws std::invalid_argument
    int effective_m(long dim) const;
};

/// A locally Lipschitz objective with an almost-everywhere gradient. eval and
/// grad must be deterministic; the supplier's tie convention applies on the
/// measure-zero nondifferentiable set.
struct Objective {
    long dim = 0;
    std::function<double(std::span<const double>)> eval;
    std::function<void(std::span<const double>, std::span<double>)> grad;
};

struct IterationRecord {
    long iter = 0;
    double f = 0;
    double gnorm = 0;
    double eps = 0;
    double tau = 0;
    double step = 0;
    double f_best = 0;
};

struct IterationLog {
    std::vector<IterationRecord> rows;
    bool converged = false;
    long shrink_events = 0;
    long null_steps = 0;
    long qp_fallbacks = 0;
    std::vector<std::string> warnings;

    void write_csv(std::ostream& out) const;
};

/// m independent draws uniform on the closed unit ball in R^n, written
/// row-major into out (resized to m*n). Direction uniform on the sphere,
/// radius U^(1/n).
void sample_unit_ball(long n, int m, Rng& rng, std::vector<double>& out);

struct ApproxSubgradient {
    std::vector<double> g;  // min-norm point (qp) or average (avg) of the bundle
    GradientBundle bundle;
    bool qp_fell_back = false;
};

/// Builds the sampled-gradient bundle {grad(x), grad(x + eps*u_k)} and
/// aggregates it per params.bundle_mode. In qp mode a solver breakdown falls
/// back to the average (flagged).
ApproxSubgradient approximate_subgradient(const Objective& obj, std::span<const double> x,
                                          double eps, const GsaParams& params, Rng& rng);

struct LineSearchResult {
    double t = 0;  // accepted step, 0 = null step
    double f_new = 0;
};

/// Backtracks t over {1, 1/2, ..., 2^-30} until
/// f(x + t*d) < f_at_x - beta * t * gnorm. Requires |d| = 1.
LineSearchResult line_search(const Objective& obj, std::span<const double> x,
                             std::span<const double> d, double gnorm, double beta,
                             double f_at_x);

struct GsaResult {
    std::vector<double> x_best;
    double f_best = 0;
    IterationLog log;
};

/// Gradient sampling descent with the eps/tau reduction schedule. Returns the
/// best iterate ever visited. A failed line search is treated as a
/// stationarity signal (shrink eps and tau, resample).
GsaResult gsa_minimize(const Objective& obj, std::span<const double> x0, const GsaParams& params);

}  // namespace qgsa
