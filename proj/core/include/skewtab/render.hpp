#pragma once

// SVG output for tilings and density fields. Axial coordinates are drawn with
// e1 = (1, 0) and e2 = (-1/2, sqrt(3)/2) so that unit triangles are
// equilateral.

#include <string>

#include "skewtab/lattice.hpp"
#include "skewtab/sampler.hpp"

namespace skewtab {

struct RenderOptions {
  double scale = 24.0;        // pixels per lattice unit
  bool height_labels = false; // print h at every vertex
};

std::string render_tiling_svg(const Tiling& t, const HeightFunction& h, const RenderOptions& opt = {});
/// Each A triangle and its partner half colored by the mix of type frequencies.
std::string render_density_svg(const DensityField& d, const RenderOptions& opt = {});

}  // namespace skewtab
