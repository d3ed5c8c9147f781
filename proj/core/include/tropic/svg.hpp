#ifndef TROPIC_SVG_HPP
#define TROPIC_SVG_HPP

#include "tropic/mechanism.hpp"
#include "tropic/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tropic {

struct PlotOptions {
  bool apex_labels = true;
  bool cell_labels = false; // covectors of sampled full-dimensional cells
  double unit = 32.0;       // pixels per coordinate unit
};

/// Plot positions of the hyperplane apexes under (x0,x1,x2) -> (x1-x0, x2-x0).
/// Only defined for three outcomes; throws DimensionMismatchError otherwise.
std::vector<std::pair<Rat, Rat>> arrangement_apexes(const TypeSpace& space);

/// Renders the min-plus hyperplane arrangement of a three-outcome type space:
/// one apex per type with its three sector boundary rays (down-left diagonal,
/// vertical up, horizontal right).
std::string render_arrangement_svg(const TypeSpace& space, const PlotOptions& options = {});

} // namespace tropic

#endif
