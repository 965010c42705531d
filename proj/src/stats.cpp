#include "hexamoment/stats.hpp"

#include <algorithm>

namespace hexamoment {

Center hexagon_center(const BoxDims& dims) {
  return Center{Rational(dims.a + dims.b, 2), Rational(dims.a + dims.c, 2)};
}

ProbTable::ProbTable(const BoxDims& dims, const CellMarginals& marginals) : dims_(dims) {
  const int a = dims.a, b = dims.b, c = dims.c;
  p_.assign(static_cast<std::size_t>(a + b - 1) * static_cast<std::size_t>(a + c), Rational(0));
  // The horizontal lozenge of diagonal cell (i, x-a+i) sits at height
  // entry + a - i, and on a fixed line the heights of distinct diagonal
  // cells never collide, so the cell events add up.
  for (int x = 1; x <= a + b - 1; ++x) {
    const int ilo = std::max(1, a + 1 - x);
    const int ihi = std::min(a, a + b - x);
    for (int y = 0; y <= a + c - 1; ++y) {
      Rational acc(0);
      for (int i = ilo; i <= ihi; ++i) {
        const int k = y - a + i;
        if (k < 0 || k > c) continue;
        acc += marginals.prob(i, x - a + i, k);
      }
      p_[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(a + c) +
         static_cast<std::size_t>(y)] = acc;
    }
  }
}

Rational ProbTable::p(int x, int y) const {
  if (x < 1 || x > dims_.a + dims_.b - 1 || y < 0 || y > dims_.a + dims_.c - 1) return Rational(0);
  return p_[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(dims_.a + dims_.c) +
            static_cast<std::size_t>(y)];
}

Rational ProbTable::sum() const {
  Rational s(0);
  for (const Rational& v : p_) s += v;
  return s;
}

void ProbTable::perturb(int x, int y, const Rational& delta) {
  if (x < 1 || x > dims_.a + dims_.b - 1 || y < 0 || y > dims_.a + dims_.c - 1)
    throw OutOfRangeError("perturbation outside the table");
  p_[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(dims_.a + dims_.c) +
     static_cast<std::size_t>(y)] += delta;
}

Rational row_sum(const ProbTable& table, int y0) {
  const BoxDims& d = table.dims();
  if (y0 < 0 || y0 > d.a + d.c - 1)
    throw OutOfRangeError("row y0=" + std::to_string(y0) + " outside 0.." +
                          std::to_string(d.a + d.c - 1));
  Rational s(0);
  for (int x = 1; x <= d.a + d.b - 1; ++x) s += table.p(x, y0);
  return s;
}

Rational column_sum(const ProbTable& table, int x0) {
  const BoxDims& d = table.dims();
  if (x0 < 1 || x0 > d.a + d.b - 1)
    throw OutOfRangeError("line x0=" + std::to_string(x0) + " outside 1.." +
                          std::to_string(d.a + d.b - 1));
  Rational s(0);
  for (int y = 0; y <= d.a + d.c - 1; ++y) s += table.p(x0, y);
  return s;
}

int column_sum_closed_form(const BoxDims& dims, int x0) { return column_count(dims, x0); }

Rational column_first_moment(const ProbTable& table, int x0) {
  const BoxDims& d = table.dims();
  if (x0 < 1 || x0 > d.a + d.b - 1)
    throw OutOfRangeError("line x0=" + std::to_string(x0) + " outside 1.." +
                          std::to_string(d.a + d.b - 1));
  const Rational axis(d.a + d.c - 1, 2);
  Rational s(0);
  for (int y = 0; y <= d.a + d.c - 1; ++y) s += table.p(x0, y) * (Rational(y) - axis);
  return s;
}

Rational column_first_moment_closed_form(const BoxDims& dims, int x0) {
  const int a = dims.a, b = dims.b, c = dims.c;
  if (x0 < 1 || x0 > a + b - 1)
    throw OutOfRangeError("line x0=" + std::to_string(x0) + " outside 1.." +
                          std::to_string(a + b - 1));
  const BigInt denom = 2 * (a + b);
  if (x0 <= std::min(a, b))
    return Rational(BigInt((-a * a - a * b - a * c + b * c) + (a + b) * x0) * x0, denom);
  if (x0 >= std::max(a, b))
    return Rational(BigInt((-b * b - a * b - b * c + a * c) + (a + b) * x0) * (a + b - x0), denom);
  if (a <= b) return Rational(BigInt(a) * c * (a + b - 2 * x0), denom);
  return Rational(BigInt(-b) * (a + b + c) * (a + b - 2 * x0), denom);
}

Rational square_box_first_moment_closed_form(int n, int m, int x0) {
  if (n < 1 || m < 1) throw Error("box dimensions must be positive");
  if (x0 < 1 || x0 > 2 * n - 1)
    throw OutOfRangeError("line x0=" + std::to_string(x0) + " outside 1.." +
                          std::to_string(2 * n - 1));
  if (x0 <= n) return Rational(BigInt(x0 - n) * x0, 2);
  return Rational(BigInt(x0 - n) * (2 * n - x0), 2);
}

Rational diagonal_expected_sum(const BoxDims& dims,
                               const std::vector<std::vector<Rational>>& expected, int x) {
  const int a = dims.a, b = dims.b;
  if (x < 1 || x > a + b - 1)
    throw OutOfRangeError("line x=" + std::to_string(x) + " outside 1.." +
                          std::to_string(a + b - 1));
  Rational s(0);
  for (int i = std::max(1, a + 1 - x); i <= std::min(a, a + b - x); ++i)
    s += expected[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x - a + i - 1)];
  return s;
}

Rational horizontal_moment(const ProbTable& table) {
  const BoxDims& d = table.dims();
  const Rational cx = hexagon_center(d).x;
  Rational s(0);
  for (int x = 1; x <= d.a + d.b - 1; ++x) {
    const Rational dx = Rational(x) - cx;
    const Rational w = dx * dx;
    for (int y = 0; y <= d.a + d.c - 1; ++y) s += table.p(x, y) * w;
  }
  return s;
}

Rational vertical_moment(const ProbTable& table) {
  const BoxDims& d = table.dims();
  const Rational cx = hexagon_center(d).x;
  const Rational axis(d.a + d.c - 1, 2);
  Rational s(0);
  for (int x = 1; x <= d.a + d.b - 1; ++x)
    for (int y = 0; y <= d.a + d.c - 1; ++y) {
      const Rational w = Rational(2) * (Rational(y) - axis) - (Rational(x) - cx);
      s += table.p(x, y) * w * w;
    }
  return s;
}

Rational closed_form_horizontal(const BoxDims& dims) {
  const BigInt a = dims.a, b = dims.b;
  return Rational(a * b * (a * a + b * b - 2), 12);
}

Rational closed_form_vertical(const BoxDims& dims) {
  const BigInt a = dims.a, b = dims.b, c = dims.c;
  return Rational(a * b * (a * a + b * b - 2 + 4 * c * c + 4 * a * c + 4 * b * c), 12);
}

MomentReport verify_moments(const ProbTable& table) {
  const BoxDims& d = table.dims();
  MomentReport r{d,           Rational(0), Rational(0), Rational(0), Rational(0),
                 Rational(0), Rational(0), Rational(0), Rational(0), false};
  r.horizontal = horizontal_moment(table);
  r.vertical = vertical_moment(table);
  r.closed_horizontal = closed_form_horizontal(d);
  r.closed_vertical = closed_form_vertical(d);

  const Rational axis(d.a + d.c - 1, 2);
  const Rational cx = hexagon_center(d).x;
  Rational row_term(0);
  for (int y = 0; y <= d.a + d.c - 1; ++y) {
    const Rational dy = Rational(y) - axis;
    row_term += row_sum(table, y) * dy * dy;
  }
  r.row_term = Rational(4) * row_term;
  Rational cross_term(0);
  for (int x = 1; x <= d.a + d.b - 1; ++x)
    cross_term += column_first_moment(table, x) * (Rational(x) - cx);
  r.cross_term = Rational(4) * cross_term;

  const BigInt a = d.a, b = d.b, c = d.c;
  r.row_term_closed = Rational(a * b * (a + c - 1) * (a + c + 1), 3);
  r.cross_term_closed = Rational(a * b * (-1 + a * a + a * c - b * c), 3);

  r.consistent = r.horizontal == r.closed_horizontal && r.vertical == r.closed_vertical &&
                 r.row_term == r.row_term_closed && r.cross_term == r.cross_term_closed &&
                 r.vertical == r.row_term - r.cross_term + r.horizontal;
  return r;
}

MomentReport verify_moments(const BoxDims& dims) { return verify_moments(ProbTable(dims)); }

}  // namespace hexamoment
