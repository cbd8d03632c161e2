#include "qgsa/loss.hpp"

#include <stdexcept>

namespace qgsa {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha outside (0,1)");
}

}  // namespace

double pinball(double alpha, double q, double y) {
    check_alpha(alpha);
    const double z = y - q;
    return z >= 0 ? alpha * z : (alpha - 1.0) * z;
}

double pinball_grad(double alpha, double q, double y) {
    check_alpha(alpha);
    return y - q > 0 ? -alpha : 1.0 - alpha;
}

double panel_loss(double alpha, std::span<const double> q, const SalesPanel& panel) {
    check_alpha(alpha);
    if (static_cast<long>(q.size()) != panel.size())
        throw std::invalid_argument("panel_loss: q length does not match panel size");
    const auto y = panel.values();
    double total = 0;
    for (size_t i = 0; i < q.size(); ++i) {
        const double z = y[i] - q[i];
        total += z >= 0 ? alpha * z : (alpha - 1.0) * z;
    }
    return total;
}

void panel_grad(double alpha, std::span<const double> q, const SalesPanel& panel,
                std::span<double> out) {
    check_alpha(alpha);
    if (static_cast<long>(q.size()) != panel.size() || out.size() != q.size())
        throw std::invalid_argument("panel_grad: dimension mismatch");
    const auto y = panel.values();
    const double below = 1.0 - alpha;  // y - q <= 0, tie included
    for (size_t i = 0; i < q.size(); ++i) out[i] = y[i] - q[i] > 0 ? -alpha : below;
}

}  // namespace qgsa
