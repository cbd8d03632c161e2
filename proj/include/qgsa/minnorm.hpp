#pragma once

#include <optional>
#include <span>
#include <vector>

namespace qgsa {

/// A finite set of equal-dimension vectors (gradients at the center and at
/// each sampled perturbation). Rows are stored contiguously.
class GradientBundle {
public:
    GradientBundle() = default;
    explicit GradientBundle(long dim) : dim_(dim) {}

    long dim() const { return dim_; }
    long count() const { return dim_ == 0 ? 0 : static_cast<long>(data_.size()) / dim_; }
    std::span<const double> point(long k) const { return {data_.data() + k * dim_, static_cast<size_t>(dim_)}; }
    void add(std::span<const double> p);

    const std::vector<double>& data() const { return data_; }

private:
    long dim_ = 0;
    std::vector<double> data_;
};

struct MinNormResult {
    std::vector<double> weights;  // convex coefficients, one per bundle point
    std::vector<double> point;    // the projection of the origin onto the hull
    double norm = 0.0;
};

/// Projects the origin onto conv(bundle) with Wolfe's min-norm-point method
/// (active set on the simplex). Optimality is certified by the Wolfe
/// criterion  point . z_k >= |point|^2 - tol  for every bundle point z_k.
/// Returns nullopt on numerical breakdown so the caller can fall back to
/// average_point.
std::optional<MinNormResult> min_norm_point(const GradientBundle& bundle, double tol = 1e-10);

/// Arithmetic mean of the bundle points (always a feasible hull point).
std::vector<double> average_point(const GradientBundle& bundle);

}  // namespace qgsa
