#include "qgsa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace qgsa {

double empirical_quantile(std::span<const double> values, double alpha) {
    if (values.empty()) throw std::invalid_argument("empirical_quantile: empty list");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("empirical_quantile: alpha outside (0,1)");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<long>(sorted.size());
    long k = static_cast<long>(std::ceil(alpha * static_cast<double>(n)));
    k = std::clamp(k, 1L, n);
    return sorted[k - 1];
}

namespace {

double combo_norm2(const GradientBundle& bundle, std::span<const long> subset,
                   std::span<const double> w) {
    double norm2 = 0;
    for (long c = 0; c < bundle.dim(); ++c) {
        double p = 0;
        for (size_t s = 0; s < subset.size(); ++s) p += w[s] * bundle.point(subset[s])[c];
        norm2 += p * p;
    }
    return norm2;
}

// Exhaustive grid over the weight simplex on `subset`, recursing one weight
// coordinate at a time. steps = number of grid intervals per unit weight.
void grid_scan(const GradientBundle& bundle, std::span<const long> subset, long steps,
               std::vector<long>& ticks, std::vector<double>& scratch_w, size_t pos,
               long remaining, double& best_norm2, std::vector<double>& best_w) {
    if (pos + 1 == ticks.size()) {
        ticks[pos] = remaining;
        for (size_t s = 0; s < ticks.size(); ++s)
            scratch_w[s] = static_cast<double>(ticks[s]) / static_cast<double>(steps);
        const double n2 = combo_norm2(bundle, subset, scratch_w);
        if (n2 < best_norm2) {
            best_norm2 = n2;
            best_w = scratch_w;
        }
        return;
    }
    for (long v = 0; v <= remaining; ++v) {
        ticks[pos] = v;
        grid_scan(bundle, subset, steps, ticks, scratch_w, pos + 1, remaining - v, best_norm2,
                  best_w);
    }
}

}  // namespace

std::vector<double> simplex_grid_min_norm(const GradientBundle& bundle, double resolution) {
    const long p = bundle.count();
    if (p == 0) throw std::invalid_argument("simplex_grid_min_norm: empty bundle");
    if (p > 6) throw std::invalid_argument("simplex_grid_min_norm: more than 6 bundle points");
    if (!(resolution > 0)) throw std::invalid_argument("simplex_grid_min_norm: resolution must be positive");

    const long n = bundle.dim();
    const long steps = std::max(1L, static_cast<long>(std::llround(1.0 / resolution)));
    // Caratheodory: the min-norm hull point is a convex combination of at most
    // dim+1 points, so scanning every (dim+1)-subset covers the full hull.
    const long subset_size = std::min(p, n + 1);

    double best_norm2 = std::numeric_limits<double>::infinity();
    std::vector<double> best_point(n, 0.0);

    std::vector<long> subset(subset_size);
    std::vector<long> choose(subset_size);
    for (long s = 0; s < subset_size; ++s) choose[s] = s;
    while (true) {
        for (long s = 0; s < subset_size; ++s) subset[s] = choose[s];
        std::vector<long> ticks(subset_size, 0);
        std::vector<double> scratch(subset_size), w;
        double subset_best = std::numeric_limits<double>::infinity();
        grid_scan(bundle, subset, steps, ticks, scratch, 0, steps, subset_best, w);
        if (subset_best < best_norm2) {
            best_norm2 = subset_best;
            std::fill(best_point.begin(), best_point.end(), 0.0);
            for (long s = 0; s < subset_size; ++s)
                for (long c = 0; c < n; ++c) best_point[c] += w[s] * bundle.point(subset[s])[c];
        }
        // next combination
        long i = subset_size - 1;
        while (i >= 0 && choose[i] == p - subset_size + i) --i;
        if (i < 0) break;
        ++choose[i];
        for (long k = i + 1; k < subset_size; ++k) choose[k] = choose[k - 1] + 1;
    }
    return best_point;
}

std::vector<double> fd_gradient(const Objective& obj, std::span<const double> x, double step) {
    if (!(step > 0)) throw std::invalid_argument("fd_gradient: step must be positive");
    std::vector<double> probe(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const double xi = probe[i];
        probe[i] = xi + step;
        const double fp = obj.eval(probe);
        probe[i] = xi - step;
        const double fm = obj.eval(probe);
        probe[i] = xi;
        grad[i] = (fp - fm) / (2.0 * step);
    }
    return grad;
}

namespace {

double sign_or_one(double v) { return v < 0 ? -1.0 : 1.0; }

}  // namespace

Objective abs_weighted_objective() {
    Objective obj;
    obj.dim = 2;
    obj.eval = [](std::span<const double> x) { return std::abs(x[0]) + 10.0 * std::abs(x[1]); };
    obj.grad = [](std::span<const double> x, std::span<double> g) {
        g[0] = sign_or_one(x[0]);
        g[1] = 10.0 * sign_or_one(x[1]);
    };
    return obj;
}

Objective nonsmooth_valley_objective() {
    Objective obj;
    obj.dim = 2;
    obj.eval = [](std::span<const double> x) {
        return 10.0 * std::abs(x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
    };
    obj.grad = [](std::span<const double> x, std::span<double> g) {
        const double s = sign_or_one(x[1] - x[0] * x[0]);
        g[0] = -20.0 * s * x[0] - 2.0 * (1.0 - x[0]);
        g[1] = 10.0 * s;
    };
    return obj;
}

Objective shifted_quadratic_objective(std::vector<double> c) {
    Objective obj;
    obj.dim = static_cast<long>(c.size());
    auto center = std::make_shared<std::vector<double>>(std::move(c));
    obj.eval = [center](std::span<const double> x) {
        double f = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            const double d = x[i] - (*center)[i];
            f += d * d;
        }
        return f;
    };
    obj.grad = [center](std::span<const double> x, std::span<double> g) {
        for (size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * (x[i] - (*center)[i]);
    };
    return obj;
}

std::vector<BenchmarkObjective> benchmark_suite() {
    std::vector<BenchmarkObjective> suite;
    suite.push_back({"abs_weighted", abs_weighted_objective(), {0.0, 0.0}, 0.0, "both coordinate axes"});
    suite.push_back({"nonsmooth_valley", nonsmooth_valley_objective(), {1.0, 1.0}, 0.0, "the parabola x2 = x1^2"});
    suite.push_back({"quadratic", shifted_quadratic_objective({1.0, -2.0}), {1.0, -2.0}, 0.0, "none (smooth)"});
    return suite;
}

std::vector<double> subgradient_descent_trace(const Objective& obj, std::span<const double> x0,
                                              long steps, double step0) {
    std::vector<double> x(x0.begin(), x0.end());
    std::vector<double> g(x.size());
    std::vector<double> trace;
    trace.reserve(steps + 1);
    trace.push_back(obj.eval(x));
    for (long k = 0; k < steps; ++k) {
        obj.grad(x, g);
        double norm = 0;
        for (double v : g) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0) break;
        const double s = step0 / std::sqrt(static_cast<double>(k + 1));
        for (size_t i = 0; i < x.size(); ++i) x[i] -= s * g[i] / norm;
        trace.push_back(obj.eval(x));
    }
    return trace;
}

}  // namespace qgsa
