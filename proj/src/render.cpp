#include "hexamoment/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hexamoment {

namespace {

Lozenge horizontal_lozenge(int x, int y) {
  return Lozenge{LozengeKind::Horizontal,
                 {ObliquePos{x, y}, ObliquePos{x + 1, y + 1}, ObliquePos{x, y + 1},
                  ObliquePos{x - 1, y}}};
}

Lozenge rising_lozenge(int u, int v) {
  return Lozenge{LozengeKind::Rising,
                 {ObliquePos{u, v - 1}, ObliquePos{u + 1, v}, ObliquePos{u + 1, v + 1},
                  ObliquePos{u, v}}};
}

Lozenge falling_lozenge(int p, int q) {
  return Lozenge{LozengeKind::Falling,
                 {ObliquePos{p, q}, ObliquePos{p + 1, q}, ObliquePos{p + 1, q + 1},
                  ObliquePos{p, q + 1}}};
}

}  // namespace

std::vector<Lozenge> all_lozenges(const PlanePartition& pp) {
  const BoxDims& d = pp.dims();
  const int a = d.a, b = d.b, c = d.c;
  std::vector<Lozenge> out;
  out.reserve(static_cast<std::size_t>(a * b + a * c + b * c));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      out.push_back(horizontal_lozenge(j - i + a, pp.entry(i, j) + a - i));
  // Wall faces appear wherever the stack height drops along a row; the box
  // walls behave like height c before column 1 and height 0 after column b.
  for (int i = 1; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      const int hi = j == 0 ? c : pp.entry(i, j);
      const int lo = j == b ? 0 : pp.entry(i, j + 1);
      for (int k = lo + 1; k <= hi; ++k) out.push_back(rising_lozenge(j - i + a, k + a - i));
    }
  for (int j = 1; j <= b; ++j)
    for (int i = 0; i <= a; ++i) {
      const int hi = i == 0 ? c : pp.entry(i, j);
      const int lo = i == a ? 0 : pp.entry(i + 1, j);
      for (int k = lo + 1; k <= hi; ++k)
        out.push_back(falling_lozenge(j - i + a - 1, k + a - i - 1));
    }
  return out;
}

namespace {

struct Triangle {
  int col;   // oblique x of the slab [x, x+1]
  int h2;    // twice the cartesian height of the triangle's centre row
  char glyph;
};

// Left-pointing triangle with corners (x,y), (x+1,y), (x+1,y+1) sits at
// h2 = 2y-x; the right-pointing one with corners (x,y), (x,y+1), (x+1,y+1)
// half a step higher.
void lozenge_triangles(const Lozenge& l, std::vector<Triangle>& out) {
  const ObliquePos& o = l.corners[0];
  switch (l.kind) {
    case LozengeKind::Horizontal:
      out.push_back(Triangle{o.x - 1, 2 * o.y - (o.x - 1), '_'});
      out.push_back(Triangle{o.x, 2 * o.y - o.x + 1, '_'});
      break;
    case LozengeKind::Rising:
      out.push_back(Triangle{o.x, 2 * o.y - o.x + 1, '/'});
      out.push_back(Triangle{o.x, 2 * (o.y + 1) - o.x, '/'});
      break;
    case LozengeKind::Falling:
      out.push_back(Triangle{o.x, 2 * o.y - o.x, '\\'});
      out.push_back(Triangle{o.x, 2 * o.y - o.x + 1, '\\'});
      break;
  }
}

}  // namespace

std::string render_ascii(const PlanePartition& pp) {
  const std::vector<Lozenge> lozenges = all_lozenges(pp);
  std::vector<Triangle> tris;
  tris.reserve(2 * lozenges.size());
  for (const Lozenge& l : lozenges) lozenge_triangles(l, tris);

  int h2min = tris.front().h2, h2max = tris.front().h2;
  int colmax = 0;
  for (const Triangle& t : tris) {
    h2min = std::min(h2min, t.h2);
    h2max = std::max(h2max, t.h2);
    colmax = std::max(colmax, t.col);
  }
  std::vector<std::string> canvas(static_cast<std::size_t>(h2max - h2min + 1),
                                  std::string(static_cast<std::size_t>(colmax + 1), ' '));
  for (const Triangle& t : tris) {
    char& cell = canvas[static_cast<std::size_t>(h2max - t.h2)][static_cast<std::size_t>(t.col)];
    if (cell != ' ') throw Error("two lozenges claim the same triangle");
    cell = t.glyph;
  }
  std::string out;
  for (std::string& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_ascii(const LozengeTiling& t) {
  return render_ascii(plane_partition_from_tiling(t));
}

namespace {

constexpr double kScale = 36.0;
constexpr double kMargin = 12.0;
const double kRoot3Half = std::sqrt(3.0) / 2.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid "-0.00"
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

std::string render_svg(const PlanePartition& pp) {
  const BoxDims& d = pp.dims();
  const int a = d.a, b = d.b, c = d.c;
  // Oblique -> cartesian: x-axis unit (sqrt(3)/2, -1/2), y-axis unit (0, 1).
  const auto px = [&](const ObliquePos& p) { return p.x * kRoot3Half; };
  const auto py = [&](const ObliquePos& p) { return p.y - p.x / 2.0; };
  const double ymax = c + a / 2.0;  // top vertex (a, a+c)
  const auto sx = [&](const ObliquePos& p) { return kMargin + kScale * px(p); };
  const auto sy = [&](const ObliquePos& p) { return kMargin + kScale * (ymax - py(p)); };

  const double width = 2 * kMargin + kScale * (a + b) * kRoot3Half;
  const double height = 2 * kMargin + kScale * (ymax + b / 2.0);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
         "\">\n";
  for (const Lozenge& l : all_lozenges(pp)) {
    const char* cls = l.kind == LozengeKind::Horizontal ? "horizontal"
                      : l.kind == LozengeKind::Rising   ? "rising"
                                                        : "falling";
    const char* fill = l.kind == LozengeKind::Horizontal ? "#e8b64c"
                       : l.kind == LozengeKind::Rising   ? "#8fbf5f"
                                                         : "#7a9cd9";
    out += "  <polygon class=\"";
    out += cls;
    out += "\" fill=\"";
    out += fill;
    out += "\" stroke=\"#333333\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < l.corners.size(); ++i) {
      if (i > 0) out += " ";
      out += fmt(sx(l.corners[i])) + "," + fmt(sy(l.corners[i]));
    }
    out += "\"/>\n";
  }
  const std::array<ObliquePos, 6> hexagon = {ObliquePos{0, 0},         ObliquePos{b, 0},
                                             ObliquePos{a + b, a},     ObliquePos{a + b, a + c},
                                             ObliquePos{a, a + c},     ObliquePos{0, c}};
  out += "  <polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < hexagon.size(); ++i) {
    if (i > 0) out += " ";
    out += fmt(sx(hexagon[i])) + "," + fmt(sy(hexagon[i]));
  }
  out += "\"/>\n</svg>\n";
  return out;
}

std::string render_svg(const LozengeTiling& t) {
  return render_svg(plane_partition_from_tiling(t));
}

}  // namespace hexamoment
