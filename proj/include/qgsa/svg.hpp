#pragma once

#include <iosfwd>
#include <string>

#include "qgsa/panel.hpp"
#include "qgsa/qam.hpp"

namespace qgsa {

/// One self-contained SVG panel for day class j: raw sales as grey points,
/// the fitted quantile curve as a black polyline with point markers.
void write_day_svg(std::ostream& out, const SalesPanel& panel, const QuantileSurface& surface,
                   int j, const std::string& title);

/// Writes day_1.svg .. day_J.svg (observed day classes only) into dir.
/// Returns the number of files written.
int write_fit_plots(const SalesPanel& panel, const QuantileSurface& surface,
                    const std::string& dir);

std::string day_class_name(int j);  // "Mon".."Sun" for 1..7, else "day<j>"

}  // namespace qgsa
