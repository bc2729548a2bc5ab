#include "report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace pagerank::report {

std::string number(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

void write_values(std::ostream& out, std::span<const double> values, const std::string& column) {
  out << "node," << column << '\n';
  for (std::size_t k = 0; k < values.size(); ++k) out << k + 1 << ',' << number(values[k]) << '\n';
}

void write_sweep(std::ostream& out, const SweepRecord& rec) {
  out << "c,node,value\n";
  for (std::size_t k = 0; k < rec.c_grid.size(); ++k) {
    for (std::size_t m = 0; m < rec.nodes.size(); ++m) {
      out << number(rec.c_grid[k]) << ',' << rec.nodes[m] << ',' << number(rec.values[k][m])
          << '\n';
    }
  }
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 130.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, const SweepRecord& rec, const std::string& title) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& row : rec.values) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double c_lo = rec.c_grid.front();
  const double c_hi = rec.c_grid.back();
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double c) { return kLeft + (c - c_lo) / (c_hi - c_lo) * plot_w; };
  auto py = [&](double v) { return kTop + (hi - v) / (hi - lo) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n"
      << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n"
      << "</g>\n"
      << "<g font-size=\"11\" font-family=\"sans-serif\">\n"
      << "<text x=\"" << kLeft << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">"
      << number(c_lo) << "</text>\n"
      << "<text x=\"" << kLeft + plot_w << "\" y=\"" << kTop + plot_h + 18
      << "\" text-anchor=\"middle\">" << number(c_hi) << "</text>\n"
      << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">c</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">"
      << number(hi) << "</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + plot_h << "\" text-anchor=\"end\">"
      << number(lo) << "</text>\n"
      << "</g>\n";

  for (std::size_t m = 0; m < rec.nodes.size(); ++m) {
    const char* colour = kPalette[m % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < rec.c_grid.size(); ++k) {
      if (k) out << ' ';
      out << number(px(rec.c_grid[k])) << ',' << number(py(rec.values[k][m]));
    }
    out << "\"/>\n";
    const double ly = kTop + 14.0 * static_cast<double>(m + 1);
    out << "<text x=\"" << kLeft + plot_w + 10 << "\" y=\"" << ly
        << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" << colour << "\">node "
        << rec.nodes[m] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace pagerank::report
