#pragma once

// Serialization of level tables (CSV, JSON, text) and the SVG level diagram.
// All output is deterministic for a fixed table.

#include "salpeter/spectrum.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

namespace salpeter {

inline constexpr const char* kLevelTableCsvHeader = "N,l,eps0,eps1,eps2,energy,degeneracy";

inline void write_csv(const LevelTable& table, std::ostream& os) {
  os << kLevelTableCsvHeader << '\n';
  for (const auto& r : table.rows)
    os << r.N << ',' << r.l << ',' << to_pq(r.eps0) << ',' << to_pq(r.eps1) << ',' << to_pq(r.eps2) << ','
       << to_pq(r.energy) << ',' << r.degeneracy.str() << '\n';
}

inline nlohmann::ordered_json to_json(const LevelTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"N", r.N},
                    {"l", r.l},
                    {"eps0", to_pq(r.eps0)},
                    {"eps1", to_pq(r.eps1)},
                    {"eps2", to_pq(r.eps2)},
                    {"energy", to_pq(r.energy)},
                    {"degeneracy", r.degeneracy.str()}});
  }
  return {{"d", table.d}, {"lambda", to_pq(table.lambda)}, {"N_max", table.N_max}, {"rows", std::move(rows)}};
}

inline void write_text(const LevelTable& table, std::ostream& os) {
  os << "d = " << table.d << ", lambda = " << to_pq(table.lambda) << " (energies in hbar omega)\n";
  char line[256];
  std::snprintf(line, sizeof line, "%4s %4s %12s %16s %16s %18s %10s\n", "N", "l", "eps0", "eps1", "eps2", "energy~",
                "h(l,d)");
  os << line;
  for (const auto& r : table.rows) {
    std::snprintf(line, sizeof line, "%4d %4d %12s %16s %16s %18s %10s\n", r.N, r.l, to_pq(r.eps0).c_str(),
                  to_pq(r.eps1).c_str(), to_pq(r.eps2).c_str(), to_decimal(r.energy).c_str(),
                  r.degeneracy.str().c_str());
    os << line;
  }
}

namespace detail {

inline std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

/// Level diagram: unperturbed levels on the left, first-order sub-levels on
/// the right, joined by connectors and labelled with l and h(l, d).
inline void render_svg(const DiagramModel& model, std::ostream& os) {
  using detail::fmt2;
  double lo = model.levels.empty() ? 0 : model.levels.front().baseline;
  double hi = lo + 1;
  for (const auto& lv : model.levels) {
    lo = std::min(lo, lv.baseline);
    hi = std::max(hi, lv.baseline);
    for (const auto& s : lv.sublevels) {
      lo = std::min(lo, s.y);
      hi = std::max(hi, s.y);
    }
  }
  const double span = std::max(hi - lo, 1.0);
  const double width = 640, top = 60, plot_height = 60.0 * std::max<std::size_t>(model.levels.size(), 2);
  const double height = top + plot_height + 40;
  auto ypix = [&](double e) { return top + (hi - e) / span * plot_height; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(width) << "\" height=\"" << fmt2(height)
     << "\" viewBox=\"0 0 " << fmt2(width) << ' ' << fmt2(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"20\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">Energy levels, d = " << model.d
     << " (first-order shifts, not to scale, x" << fmt2(model.exaggeration) << ")</text>\n";
  for (const auto& lv : model.levels) {
    const double yb = ypix(lv.baseline);
    os << "<g class=\"level\" data-N=\"" << lv.N << "\">\n";
    os << "  <line class=\"baseline\" x1=\"80\" y1=\"" << fmt2(yb) << "\" x2=\"240\" y2=\"" << fmt2(yb)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"20\" y=\"" << fmt2(yb + 4) << "\" font-family=\"sans-serif\" font-size=\"12\">N=" << lv.N
       << "</text>\n";
    for (const auto& s : lv.sublevels) {
      const double ys = ypix(s.y);
      os << "  <line class=\"connector\" x1=\"240\" y1=\"" << fmt2(yb) << "\" x2=\"360\" y2=\"" << fmt2(ys)
         << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
      os << "  <line class=\"sublevel\" data-l=\"" << s.l << "\" x1=\"360\" y1=\"" << fmt2(ys) << "\" x2=\"500\" y2=\""
         << fmt2(ys) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      os << "  <text x=\"510\" y=\"" << fmt2(ys + 4) << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
         << " (h=" << s.degeneracy.str() << ")</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

inline void render_text(const DiagramModel& model, std::ostream& os) {
  os << "d = " << model.d << ", exaggeration x" << detail::fmt2(model.exaggeration) << '\n';
  for (auto it = model.levels.rbegin(); it != model.levels.rend(); ++it) {
    os << "N=" << it->N << "  baseline " << detail::fmt2(it->baseline) << '\n';
    for (auto s = it->sublevels.rbegin(); s != it->sublevels.rend(); ++s) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "    %-6s shift %+.6e  h=%s\n", s->label.c_str(), s->shift, s->degeneracy.str().c_str());
      os << buf;
    }
  }
}

}  // namespace salpeter
