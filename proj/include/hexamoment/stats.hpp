#ifndef HEXAMOMENT_STATS_HPP
#define HEXAMOMENT_STATS_HPP

#include "hexamoment/enumdp.hpp"
#include "hexamoment/numeric.hpp"
#include "hexamoment/pp.hpp"

namespace hexamoment {

// Centre of the hexagon: ((a+b)/2, (a+c)/2) in oblique coordinates.
struct Center {
  Rational x;
  Rational y;
};
Center hexagon_center(const BoxDims& dims);

// Exact field p(x,y): probability that a uniformly random tiling contains
// the horizontal lozenge with lowest vertex (x,y). Indexed over
// 1 <= x <= a+b-1, 0 <= y <= a+c-1; lookups outside that rectangle return 0.
class ProbTable {
 public:
  explicit ProbTable(const BoxDims& dims) : ProbTable(dims, CellMarginals(dims)) {}
  ProbTable(const BoxDims& dims, const CellMarginals& marginals);

  const BoxDims& dims() const { return dims_; }
  Rational p(int x, int y) const;
  Rational sum() const;

  // Adds delta to a single entry. Only the verification harness uses this,
  // to prove its own checks can fail.
  void perturb(int x, int y, const Rational& delta);

 private:
  BoxDims dims_;
  std::vector<Rational> p_;
};

// Expected number of horizontal lozenges with lowest vertex on the line
// y = y0; equals ab/(a+c) for every y0.
Rational row_sum(const ProbTable& table, int y0);

// Expected number on the vertical line x = x0; deterministic per tiling.
Rational column_sum(const ProbTable& table, int x0);
int column_sum_closed_form(const BoxDims& dims, int x0);

// First moment along the vertical line x0 about the height of the central
// lozenge's lowest vertex: sum over y of p(x0,y) * (y - (a+c-1)/2).
Rational column_first_moment(const ProbTable& table, int x0);
Rational column_first_moment_closed_form(const BoxDims& dims, int x0);

// The a == b specialisation of the closed form, for an n x n x m box.
Rational square_box_first_moment_closed_form(int n, int m, int x0);

// D(x): sum of expected entries over the diagonal cells feeding line x.
Rational diagonal_expected_sum(const BoxDims& dims,
                               const std::vector<std::vector<Rational>>& expected, int x);

Rational horizontal_moment(const ProbTable& table);
Rational vertical_moment(const ProbTable& table);
Rational closed_form_horizontal(const BoxDims& dims);
Rational closed_form_vertical(const BoxDims& dims);

// The vertical moment split into its three constituent sums, each checked
// against its closed form.
struct MomentReport {
  BoxDims dims;
  Rational horizontal;
  Rational vertical;
  Rational closed_horizontal;
  Rational closed_vertical;
  Rational row_term;            // 4 * sum_y row_sum(y) (y - (a+c-1)/2)^2
  Rational cross_term;          // 4 * sum_x first_moment(x) (x - (a+b)/2)
  Rational row_term_closed;     // ab (a+c-1)(a+c+1) / 3
  Rational cross_term_closed;   // ab (-1 + a^2 + ac - bc) / 3
  bool consistent;
};

MomentReport verify_moments(const ProbTable& table);
MomentReport verify_moments(const BoxDims& dims);

}  // namespace hexamoment

#endif  // HEXAMOMENT_STATS_HPP
