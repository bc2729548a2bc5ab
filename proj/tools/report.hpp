#pragma once

#include <ostream>
#include <span>
#include <string>

#include "pagerank/sensitivity.hpp"

namespace pagerank::report {

/// 12 significant digits, '.' decimal separator regardless of locale.
std::string number(double x);

/// `node,value` rows, 1-based ids.
void write_values(std::ostream& out, std::span<const double> values, const std::string& column);

/// Long-format sweep table `c,node,value`.
void write_sweep(std::ostream& out, const SweepRecord& rec);

/// Standalone SVG 1.1 line chart, one polyline per node.
void write_svg(std::ostream& out, const SweepRecord& rec, const std::string& title);

}  // namespace pagerank::report
