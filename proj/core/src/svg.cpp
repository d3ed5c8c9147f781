#include "tropic/svg.hpp"

#include "tropic/errors.hpp"
#include "tropic/tropical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropic {

namespace {

double approx(const Rat& v) {
  return static_cast<double>(numerator(v)) / static_cast<double>(denominator(v));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << v;
  std::string s = os.str();
  // trim trailing zeros for compact output
  while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
    bool dot = s.back() == '.';
    s.pop_back();
    if (dot) break;
  }
  return s;
}

struct Frame {
  Rat min_u, max_u, min_v, max_v;
  double unit;
  double width, height;

  double px(const Rat& u) const { return (approx(u) - approx(min_u)) * unit; }
  double py(const Rat& v) const { return (approx(max_v) - approx(v)) * unit; }
};

void sorted_unique(std::vector<Rat>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

Rat ceil_rat(const Rat& v) {
  Int p = numerator(v), q = denominator(v);
  Int d = p / q; // truncates toward zero
  if (p > 0 && p % q != 0) d += 1;
  return Rat(d);
}

} // namespace

std::vector<std::pair<Rat, Rat>> arrangement_apexes(const TypeSpace& space) {
  if (space.outcome_count() != 3) {
    throw DimensionMismatchError("arrangement plots need exactly three outcomes, got " +
                                 std::to_string(space.outcome_count()));
  }
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(space.type_count());
  for (int i = 0; i < space.type_count(); ++i) {
    out.emplace_back(space.matrix.at(i, 1) - space.matrix.at(i, 0),
                     space.matrix.at(i, 2) - space.matrix.at(i, 0));
  }
  return out;
}

std::string render_arrangement_svg(const TypeSpace& space, const PlotOptions& options) {
  auto apexes = arrangement_apexes(space);

  Frame f;
  f.min_u = f.max_u = apexes[0].first;
  f.min_v = f.max_v = apexes[0].second;
  for (const auto& [u, v] : apexes) {
    f.min_u = std::min(f.min_u, u);
    f.max_u = std::max(f.max_u, u);
    f.min_v = std::min(f.min_v, v);
    f.max_v = std::max(f.max_v, v);
  }
  Rat span_u = f.max_u - f.min_u;
  Rat span_v = f.max_v - f.min_v;
  Rat margin = std::max({span_u, span_v, Rat(4)}) / 4 + 1;
  f.min_u -= margin;
  f.max_u += margin;
  f.min_v -= margin;
  f.max_v += margin;
  f.unit = options.unit;
  f.width = approx(f.max_u - f.min_u) * f.unit;
  f.height = approx(f.max_v - f.min_v) * f.unit;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(f.width) << "\" height=\""
      << fmt(f.height) << "\" viewBox=\"0 0 " << fmt(f.width) << " " << fmt(f.height) << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // unit grid
  for (Rat u = ceil_rat(f.min_u); u <= f.max_u; u += 1) {
    svg << "  <line x1=\"" << fmt(f.px(u)) << "\" y1=\"0\" x2=\"" << fmt(f.px(u))
        << "\" y2=\"" << fmt(f.height) << "\" stroke=\"#eee\" stroke-width=\"1\"/>\n";
  }
  for (Rat v = ceil_rat(f.min_v); v <= f.max_v; v += 1) {
    svg << "  <line x1=\"0\" y1=\"" << fmt(f.py(v)) << "\" x2=\"" << fmt(f.width) << "\" y2=\""
        << fmt(f.py(v)) << "\" stroke=\"#eee\" stroke-width=\"1\"/>\n";
  }

  // three boundary rays per apex: vertical up, horizontal right, diagonal down-left
  for (size_t i = 0; i < apexes.size(); ++i) {
    const auto& [u, v] = apexes[i];
    double x = f.px(u);
    double y = f.py(v);
    svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x)
        << "\" y2=\"0\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
    svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(f.width)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
    Rat reach = std::min(u - f.min_u, v - f.min_v);
    svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(f.px(u - reach))
        << "\" y2=\"" << fmt(f.py(v - reach)) << "\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
    svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"3\" fill=\"#c22\"/>\n";
    if (options.apex_labels) {
      std::string label = (space.label.empty() ? "t" : space.label) + "_" + std::to_string(i + 1);
      svg << "  <text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y + 14)
          << "\" font-size=\"11\" fill=\"#c22\">" << label << "</text>\n";
    }
  }

  if (options.cell_labels) {
    // Sample candidate interior points: midpoints of the grid induced by all
    // apex coordinates and diagonal intersections.
    std::vector<Rat> us, vs, ds;
    for (const auto& [u, v] : apexes) {
      us.push_back(u);
      vs.push_back(v);
      ds.push_back(v - u);
    }
    std::vector<Rat> u_crit = us, v_crit = vs;
    for (const Rat& d : ds) {
      for (const Rat& u : us) v_crit.push_back(u + d);
      for (const Rat& v : vs) u_crit.push_back(v - d);
    }
    u_crit.push_back(f.min_u);
    u_crit.push_back(f.max_u);
    v_crit.push_back(f.min_v);
    v_crit.push_back(f.max_v);
    sorted_unique(u_crit);
    sorted_unique(v_crit);

    std::set<std::vector<int>> seen;
    for (size_t a = 0; a + 1 < u_crit.size(); ++a) {
      Rat u = (u_crit[a] + u_crit[a + 1]) / 2;
      for (size_t b = 0; b + 1 < v_crit.size(); ++b) {
        Rat v = (v_crit[b] + v_crit[b + 1]) / 2;
        auto cov = covector_at({Rat(0), u, v}, space.matrix);
        std::vector<int> flat;
        bool open_cell = true;
        for (const auto& row : cov) {
          if (row.size() != 1) {
            open_cell = false;
            break;
          }
          flat.push_back(row[0]);
        }
        if (!open_cell || !seen.insert(flat).second) continue;
        std::string text = "(";
        for (size_t i = 0; i < flat.size(); ++i) {
          text += std::to_string(flat[i]);
          if (i + 1 < flat.size()) text += ",";
        }
        text += ")";
        svg << "  <text x=\"" << fmt(f.px(u)) << "\" y=\"" << fmt(f.py(v))
            << "\" font-size=\"10\" fill=\"#06c\" text-anchor=\"middle\">" << text
            << "</text>\n";
      }
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

} // namespace tropic
