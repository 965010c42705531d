#ifndef HEXAMOMENT_RENDER_HPP
#define HEXAMOMENT_RENDER_HPP

#include <array>
#include <string>
#include <vector>

#include "hexamoment/pp.hpp"

namespace hexamoment {

// The three lozenge orientations. Horizontal lozenges are the top faces of
// the stacks; the other two are the wall faces along rows and columns.
enum class LozengeKind { Horizontal, Rising, Falling };

struct Lozenge {
  LozengeKind kind;
  // Corners in cycle order, oblique coordinates.
  std::array<ObliquePos, 4> corners;
};

// Every lozenge of the tiling, horizontals first, in a fixed deterministic
// order. Sizes: a*b horizontal, a*c rising, b*c falling.
std::vector<Lozenge> all_lozenges(const PlanePartition& pp);

// One character per unit triangle: '_' for horizontal lozenges, '/' for
// rising walls, '\' for falling walls. Column = oblique x of the triangle's
// slab, row = its height on the page.
std::string render_ascii(const LozengeTiling& t);
std::string render_ascii(const PlanePartition& pp);

// Plain SVG 1.1, one polygon per lozenge; fill colours distinguish the
// three orientations.
std::string render_svg(const LozengeTiling& t);
std::string render_svg(const PlanePartition& pp);

}  // namespace hexamoment

#endif  // HEXAMOMENT_RENDER_HPP
