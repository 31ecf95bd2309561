#include "binsa/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "binsa/core.hpp"

namespace binsa::io {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Short tick label: up to 4 significant digits.
std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void open_svg(std::ostringstream& os, double w, double h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

void text(std::ostringstream& os, double x, double y, const std::string& s,
          const char* anchor = "start", int size = 12) {
  os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor << '"';
  if (size != 12) os << " font-size=\"" << size << '"';
  os << '>' << escape(s) << "</text>\n";
}

void rect(std::ostringstream& os, double x, double y, double w, double h, const std::string& fill) {
  os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"/>\n";
}

void line(std::ostringstream& os, double x1, double y1, double x2, double y2) {
  os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
     << num(y2) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string bar_chart_svg(std::span<const std::string> labels, std::span<const double> values,
                          const std::string& title) {
  if (labels.size() != values.size()) throw InputError("bar chart: labels and values differ in length");
  const double left = 120, right = 40, top = 40, bar_h = 22, gap = 8, plot_w = 440;
  const double height = top + static_cast<double>(values.size()) * (bar_h + gap) + 40;
  const double width = left + plot_w + right;
  double lo = 0.0, hi = 1.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  auto sx = [&](double v) { return left + (v - lo) / (hi - lo) * plot_w; };

  std::ostringstream os;
  open_svg(os, width, height);
  text(os, width / 2, 22, title, "middle", 14);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double y = top + static_cast<double>(i) * (bar_h + gap);
    const double x0 = sx(std::min(0.0, values[i]));
    const double x1 = sx(std::max(0.0, values[i]));
    rect(os, x0, y, x1 - x0, bar_h, values[i] < 0 ? "#c0504d" : "#4f81bd");
    text(os, left - 6, y + bar_h * 0.7, labels[i], "end");
    text(os, x1 + 4, y + bar_h * 0.7, num(values[i]));
  }
  const double axis_y = top + static_cast<double>(values.size()) * (bar_h + gap);
  line(os, sx(0.0), top - 4, sx(0.0), axis_y);
  line(os, left, axis_y, left + plot_w, axis_y);
  for (double t : {lo, 0.0, 0.5, 1.0, hi}) {
    if (t < lo || t > hi) continue;
    line(os, sx(t), axis_y, sx(t), axis_y + 4);
    text(os, sx(t), axis_y + 16, tick(t), "middle", 10);
  }
  os << "</svg>\n";
  return os.str();
}

std::string stacked_histogram_svg(const Decomposition& d, const std::string& title) {
  const Histogram& h = d.histogram;
  const std::size_t nb = h.edges.empty() ? 0 : h.edges.size() - 1;
  if (nb == 0) throw InputError("stacked histogram: no bins");
  const double left = 60, top = 40, plot_w = 600, plot_h = 320, legend_w = 260;
  const double row_h = 16;
  const double legend_h = static_cast<double>(d.scenarios.size()) * row_h;
  const double width = left + plot_w + 20 + legend_w;
  const double height = top + std::max(plot_h, legend_h) + 50;

  const auto total = h.total();
  const std::int64_t peak = std::max<std::int64_t>(1, *std::max_element(total.begin(), total.end()));
  const double bw = plot_w / static_cast<double>(nb);
  auto sy = [&](double c) { return top + plot_h - c / static_cast<double>(peak) * plot_h; };

  std::ostringstream os;
  open_svg(os, width, height);
  text(os, left + plot_w / 2, 22, title, "middle", 14);
  for (std::size_t b = 0; b < nb; ++b) {
    std::int64_t below = 0;
    for (std::size_t s = 0; s < d.scenarios.size(); ++s) {
      const std::int64_t c = h.counts[s][b];
      if (c == 0) continue;
      const double y1 = sy(static_cast<double>(below));
      const double y0 = sy(static_cast<double>(below + c));
      rect(os, left + static_cast<double>(b) * bw, y0, bw, y1 - y0, d.scenarios[s].color);
      below += c;
    }
  }
  line(os, left, top + plot_h, left + plot_w, top + plot_h);
  line(os, left, top, left, top + plot_h);
  for (int t = 0; t <= 4; ++t) {
    const double f = t / 4.0;
    const double x = left + f * plot_w;
    const double v = h.edges.front() + f * (h.edges.back() - h.edges.front());
    line(os, x, top + plot_h, x, top + plot_h + 4);
    text(os, x, top + plot_h + 16, tick(v), "middle", 10);
    const double y = sy(f * static_cast<double>(peak));
    line(os, left - 4, y, left, y);
    text(os, left - 6, y + 4, tick(f * static_cast<double>(peak)), "end", 10);
  }
  text(os, left + plot_w / 2, top + plot_h + 34, "output");

  const double lx = left + plot_w + 20;
  for (std::size_t s = 0; s < d.scenarios.size(); ++s) {
    const Scenario& sc = d.scenarios[s];
    const double y = top + static_cast<double>(s) * row_h;
    rect(os, lx, y, 12, 12, sc.color);
    std::string label = "sc" + std::to_string(sc.id) + ":";
    for (std::size_t p = 0; p < sc.state_labels.size(); ++p) {
      label += (p == 0 ? " " : ", ") + d.states[p].name + "=" + sc.state_labels[p];
    }
    label += " (" + num(sc.probability * 100.0) + "%)";
    text(os, lx + 16, y + 10, label, "start", 11);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace binsa::io
