#ifndef HEXAMOMENT_PP_HPP
#define HEXAMOMENT_PP_HPP

#include <string>
#include <vector>

#include "hexamoment/errors.hpp"

namespace hexamoment {

// Side lengths of the a,b,c,a,b,c hexagon / dimensions of the box.
struct BoxDims {
  BoxDims(int a, int b, int c);
  int a;
  int b;
  int c;

  friend bool operator==(const BoxDims& l, const BoxDims& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend bool operator!=(const BoxDims& l, const BoxDims& r) { return !(l == r); }
  std::string str() const;
};

// a x b matrix with entries in 0..c, weakly decreasing along rows and
// columns. Rows and columns are 1-indexed.
class PlanePartition {
 public:
  PlanePartition(const BoxDims& dims, std::vector<int> row_major);
  static PlanePartition zero(const BoxDims& dims);

  const BoxDims& dims() const { return dims_; }
  int entry(int i, int j) const { return e_[idx(i, j)]; }
  const std::vector<int>& row_major() const { return e_; }
  std::vector<std::vector<int>> matrix() const;

  friend bool operator==(const PlanePartition& l, const PlanePartition& r) {
    return l.dims_ == r.dims_ && l.e_ == r.e_;
  }
  friend bool operator<(const PlanePartition& l, const PlanePartition& r) {
    return l.e_ < r.e_;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dims_.b) +
           static_cast<std::size_t>(j - 1);
  }
  BoxDims dims_;
  std::vector<int> e_;  // row-major
};

// Checked construction from a nested matrix. Throws BadShapeError,
// EntryOutOfRangeError or NotDecreasingError.
PlanePartition validate(const std::vector<std::vector<int>>& entries, const BoxDims& dims);

// Plane partition with a-i added to every entry of row i: rows stay weakly
// decreasing, columns become strictly decreasing, row i lives in
// {a-i, ..., c+a-i} and all entries in 0..a+c-1.
class ShiftedArray {
 public:
  ShiftedArray(const BoxDims& dims, std::vector<int> row_major);

  const BoxDims& dims() const { return dims_; }
  int entry(int i, int j) const { return e_[idx(i, j)]; }
  const std::vector<int>& row_major() const { return e_; }

  friend bool operator==(const ShiftedArray& l, const ShiftedArray& r) {
    return l.dims_ == r.dims_ && l.e_ == r.e_;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dims_.b) +
           static_cast<std::size_t>(j - 1);
  }
  BoxDims dims_;
  std::vector<int> e_;
};

// Multiplicity of each value 0..a+c-1 in a shifted array; sums to a*b.
using ContentSeq = std::vector<long>;

// Lowest vertex of a horizontal lozenge in the oblique coordinate system.
struct ObliquePos {
  int x;
  int y;
  friend bool operator==(const ObliquePos& l, const ObliquePos& r) {
    return l.x == r.x && l.y == r.y;
  }
  friend bool operator<(const ObliquePos& l, const ObliquePos& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  }
};

// A lozenge tiling of the hexagon, stored as its a*b horizontal lozenges.
// The other two orientations are derivable and carry no statistics.
class LozengeTiling {
 public:
  // Validates count, bounds, distinctness and the fixed per-line counts.
  LozengeTiling(const BoxDims& dims, std::vector<ObliquePos> horizontals);

  const BoxDims& dims() const { return dims_; }
  const std::vector<ObliquePos>& horizontals() const { return horizontals_; }

 private:
  BoxDims dims_;
  std::vector<ObliquePos> horizontals_;  // sorted
};

// entry(i,j) -> c - entry(a+1-i, b+1-j); an involution.
PlanePartition complement(const PlanePartition& pp);

// For an n x n x m box: entry(i,j) -> m - entry(n+1-j, n+1-i); an
// involution. Throws NotSquareError when a != b.
PlanePartition transpose_complement(const PlanePartition& pp);

ShiftedArray shift_rows(const PlanePartition& pp);
PlanePartition unshift_rows(const ShiftedArray& sa);

ContentSeq content(const ShiftedArray& sa);

// Value toggle exchanging the multiplicities of j and j+1 while preserving
// weakly decreasing rows and strictly decreasing columns. An involution.
// Meaningful for 0 <= j <= a+c-2 (the value alphabet is 0..a+c-1).
ShiftedArray bender_knuth_swap(const ShiftedArray& sa, int j);

// The horizontal lozenge of cell (i,j) has lowest vertex
// x = j - i + a, y = entry(i,j) + a - i.
std::vector<ObliquePos> horizontal_positions(const PlanePartition& pp);
LozengeTiling tiling_from_pp(const PlanePartition& pp);

// Inverse of tiling_from_pp: recovers the entries from the per-line
// positions (on each vertical line the y values are strictly decreasing
// in the diagonal row index).
PlanePartition plane_partition_from_tiling(const LozengeTiling& t);

// Number of diagonal cells feeding vertical line x; equals the constant
// per-tiling count of horizontal lozenges on that line.
int column_count(const BoxDims& dims, int x);

}  // namespace hexamoment

#endif  // HEXAMOMENT_PP_HPP
