#include <doctest.h>

#include <algorithm>

#include "hexamoment/enumdp.hpp"
#include "hexamoment/render.hpp"

using namespace hexamoment;

namespace {

long count_substr(const std::string& hay, const std::string& needle) {
  long n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("lozenge decomposition covers the hexagon") {
  for (const BoxDims& d : {BoxDims(1, 1, 1), BoxDims(2, 3, 2), BoxDims(3, 5, 4)}) {
    const PlanePartition pp = PlanePartition::zero(d);
    const std::vector<Lozenge> all = all_lozenges(pp);
    long horizontal = 0, rising = 0, falling = 0;
    for (const Lozenge& l : all) {
      if (l.kind == LozengeKind::Horizontal) ++horizontal;
      if (l.kind == LozengeKind::Rising) ++rising;
      if (l.kind == LozengeKind::Falling) ++falling;
    }
    CHECK(horizontal == d.a * d.b);
    CHECK(rising == d.a * d.c);
    CHECK(falling == d.b * d.c);
  }
}

TEST_CASE("ascii pictures of the unit hexagon") {
  const BoxDims d(1, 1, 1);
  // empty stack: the horizontal lozenge at the bottom, walls meeting above
  CHECK(render_ascii(validate({{0}}, d)) == "/\\\n/\\\n__\n");
  // full stack: the horizontal lozenge on top
  CHECK(render_ascii(validate({{1}}, d)) == "__\n\\/\n\\/\n");
}

TEST_CASE("rendering is deterministic") {
  const PlanePartition pp = validate({{2, 1}, {1, 0}}, BoxDims(2, 2, 2));
  CHECK(render_ascii(pp) == render_ascii(pp));
  CHECK(render_svg(pp) == render_svg(pp));
  const LozengeTiling t = tiling_from_pp(pp);
  CHECK(render_ascii(t) == render_ascii(pp));
  CHECK(render_svg(t) == render_svg(pp));
}

TEST_CASE("every tiling of a box renders without collisions") {
  const BoxDims d(2, 3, 2);
  for (const PlanePartition& pp : enumerate_box(d)) {
    const std::string art = render_ascii(pp);
    // one character per triangle: twice the lozenge count
    CHECK(count_substr(art, "_") == 2L * d.a * d.b);
    CHECK(count_substr(art, "/") == 2L * d.a * d.c);
    CHECK(count_substr(art, "\\") == 2L * d.b * d.c);
  }
}

TEST_CASE("svg documents are well formed and complete") {
  const BoxDims d(3, 5, 4);
  const std::string svg = render_svg(PlanePartition::zero(d));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_substr(svg, "class=\"horizontal\"") == 15);
  CHECK(count_substr(svg, "class=\"rising\"") == 12);
  CHECK(count_substr(svg, "class=\"falling\"") == 20);
  // lozenges plus the outline
  CHECK(count_substr(svg, "<polygon") == 15 + 12 + 20 + 1);
}
