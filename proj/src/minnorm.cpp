#include "qgsa/minnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgsa {

void GradientBundle::add(std::span<const double> p) {
    if (dim_ == 0) dim_ = static_cast<long>(p.size());
    if (static_cast<long>(p.size()) != dim_)
        throw std::invalid_argument("bundle point dimension mismatch");
    data_.insert(data_.end(), p.begin(), p.end());
}

std::vector<double> average_point(const GradientBundle& bundle) {
    const long p = bundle.count();
    if (p == 0) throw std::invalid_argument("average_point: empty bundle");
    std::vector<double> mean(bundle.dim(), 0.0);
    for (long k = 0; k < p; ++k) {
        const auto z = bundle.point(k);
        for (long c = 0; c < bundle.dim(); ++c) mean[c] += z[c];
    }
    for (double& v : mean) v /= static_cast<double>(p);
    return mean;
}

namespace {

// Least-norm point of the affine hull of the corral: solve
//   [0 1^T; 1 Q] [lambda; v] = [1; 0],  Q_ik = <z_i, z_k> over the corral.
// Gaussian elimination with partial pivoting; false on (near-)singularity.
bool affine_minimizer(const std::vector<double>& gram, long p, const std::vector<long>& corral,
                      std::vector<double>& v_out) {
    const long s = static_cast<long>(corral.size());
    const long dim = s + 1;
    std::vector<double> a(dim * dim, 0.0);
    std::vector<double> rhs(dim, 0.0);
    rhs[0] = 1.0;
    for (long k = 0; k < s; ++k) {
        a[0 * dim + (k + 1)] = 1.0;
        a[(k + 1) * dim + 0] = 1.0;
        for (long i = 0; i < s; ++i) a[(k + 1) * dim + (i + 1)] = gram[corral[k] * p + corral[i]];
    }
    double scale = 1.0;
    for (double g : gram) scale = std::max(scale, std::abs(g));
    for (long col = 0; col < dim; ++col) {
        long piv = col;
        for (long r = col + 1; r < dim; ++r)
            if (std::abs(a[r * dim + col]) > std::abs(a[piv * dim + col])) piv = r;
        if (std::abs(a[piv * dim + col]) < 1e-13 * scale) return false;
        if (piv != col) {
            for (long c = 0; c < dim; ++c) std::swap(a[col * dim + c], a[piv * dim + c]);
            std::swap(rhs[col], rhs[piv]);
        }
        const double d = a[col * dim + col];
        for (long r = col + 1; r < dim; ++r) {
            const double f = a[r * dim + col] / d;
            if (f == 0) continue;
            for (long c = col; c < dim; ++c) a[r * dim + c] -= f * a[col * dim + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> u(dim);
    for (long r = dim - 1; r >= 0; --r) {
        double acc = rhs[r];
        for (long c = r + 1; c < dim; ++c) acc -= a[r * dim + c] * u[c];
        u[r] = acc / a[r * dim + r];
    }
    v_out.assign(u.begin() + 1, u.end());
    return true;
}

}  // namespace

std::optional<MinNormResult> min_norm_point(const GradientBundle& bundle, double tol) {
    const long p = bundle.count();
    const long n = bundle.dim();
    if (p == 0 || n == 0) throw std::invalid_argument("min_norm_point: empty bundle");
    if (!(tol > 0)) throw std::invalid_argument("min_norm_point: tol must be positive");

    // Gram matrix; everything below works on inner products only.
    std::vector<double> gram(p * p);
    for (long i = 0; i < p; ++i) {
        const auto zi = bundle.point(i);
        for (long k = i; k < p; ++k) {
            const auto zk = bundle.point(k);
            double dot = 0;
            for (long c = 0; c < n; ++c) dot += zi[c] * zk[c];
            gram[i * p + k] = dot;
            gram[k * p + i] = dot;
        }
    }
    double scale = 0;
    for (long i = 0; i < p; ++i) scale = std::max(scale, gram[i * p + i]);
    const double eff_tol = std::max(tol, 5e-15 * scale);
    constexpr double kZeroWeight = 1e-12;

    long start = 0;
    for (long i = 1; i < p; ++i)
        if (gram[i * p + i] < gram[start * p + start]) start = i;
    std::vector<long> corral{start};
    std::vector<double> w{1.0};

    std::vector<double> xz(p);  // <x, z_j> per bundle point
    std::vector<double> v;
    const long budget = 120 + 24 * p;
    bool certified = false;

    for (long iter = 0; iter < budget && !certified; ++iter) {
        for (long j = 0; j < p; ++j) {
            double acc = 0;
            for (size_t k = 0; k < corral.size(); ++k) acc += w[k] * gram[corral[k] * p + j];
            xz[j] = acc;
        }
        double xx = 0;
        for (size_t k = 0; k < corral.size(); ++k) xx += w[k] * xz[corral[k]];
        long jmin = 0;
        for (long j = 1; j < p; ++j)
            if (xz[j] < xz[jmin]) jmin = j;
        if (xz[jmin] >= xx - eff_tol) {
            certified = true;
            break;
        }
        if (std::find(corral.begin(), corral.end(), jmin) != corral.end())
            return std::nullopt;  // cannot improve: numerical stall
        corral.push_back(jmin);
        w.push_back(0.0);

        for (long minor = 0; minor <= 2 * p + 4; ++minor) {
            if (minor == 2 * p + 4) return std::nullopt;
            if (!affine_minimizer(gram, p, corral, v)) return std::nullopt;
            double vmin = v[0];
            for (double vi : v) vmin = std::min(vmin, vi);
            if (vmin > kZeroWeight) {
                w = v;
                break;
            }
            double theta = 1.0;
            for (size_t k = 0; k < corral.size(); ++k)
                if (v[k] <= kZeroWeight && w[k] > v[k]) theta = std::min(theta, w[k] / (w[k] - v[k]));
            theta = std::clamp(theta, 0.0, 1.0);
            bool removed = false;
            std::vector<long> next_corral;
            std::vector<double> next_w;
            for (size_t k = 0; k < corral.size(); ++k) {
                const double wk = (1.0 - theta) * w[k] + theta * v[k];
                if (wk <= kZeroWeight && v[k] <= kZeroWeight) {
                    removed = true;
                    continue;
                }
                next_corral.push_back(corral[k]);
                next_w.push_back(std::max(wk, 0.0));
            }
            if (!removed) return std::nullopt;  // no progress along the segment
            double sum = 0;
            for (double wk : next_w) sum += wk;
            if (sum <= 0 || next_w.empty()) return std::nullopt;
            for (double& wk : next_w) wk /= sum;
            corral = std::move(next_corral);
            w = std::move(next_w);
        }
    }
    if (!certified) return std::nullopt;

    MinNormResult result;
    result.weights.assign(p, 0.0);
    for (size_t k = 0; k < corral.size(); ++k) result.weights[corral[k]] += w[k];
    result.point.assign(n, 0.0);
    for (size_t k = 0; k < corral.size(); ++k) {
        const auto z = bundle.point(corral[k]);
        for (long c = 0; c < n; ++c) result.point[c] += w[k] * z[c];
    }
    double norm2 = 0;
    for (double c : result.point) norm2 += c * c;
    result.norm = std::sqrt(norm2);
    return result;
}

}  // namespace qgsa
