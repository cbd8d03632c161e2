#pragma once

#include <span>

#include "qgsa/panel.hpp"

namespace qgsa {

/// Pinball (check) loss: (1-alpha)*(y-q)_- + alpha*(y-q)_+.
double pinball(double alpha, double q, double y);

/// d/dq of the pinball loss where defined; returns 1-alpha at the tie q == y
/// (a valid subgradient, keeps the derivative right-continuous in q).
double pinball_grad(double alpha, double q, double y);

/// Sum of pinball losses over the flattened panel, one q entry per observation.
double panel_loss(double alpha, std::span<const double> q, const SalesPanel& panel);

/// Coordinatewise pinball derivative over the flattened panel.
void panel_grad(double alpha, std::span<const double> q, const SalesPanel& panel,
                std::span<double> out);

}  // namespace qgsa
