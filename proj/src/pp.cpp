#include "hexamoment/pp.hpp"

#include <algorithm>
#include <map>

namespace hexamoment {

BoxDims::BoxDims(int a, int b, int c) : a(a), b(b), c(c) {
  if (a < 1 || b < 1 || c < 1)
    throw Error("box dimensions must be positive, got " + str());
}

std::string BoxDims::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

PlanePartition::PlanePartition(const BoxDims& dims, std::vector<int> row_major)
    : dims_(dims), e_(std::move(row_major)) {
  const int a = dims_.a, b = dims_.b, c = dims_.c;
  if (e_.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b))
    throw BadShapeError("expected " + std::to_string(a * b) + " entries for box " + dims.str());
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      const int v = entry(i, j);
      if (v < 0 || v > c)
        throw EntryOutOfRangeError(v, i, j,
                                   "entry " + std::to_string(v) + " at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ") outside 0.." +
                                       std::to_string(c));
      if (j > 1 && entry(i, j - 1) < v)
        throw NotDecreasingError(Axis::Row, i, j - 1,
                                 "row " + std::to_string(i) + " increases at column " +
                                     std::to_string(j - 1));
      if (i > 1 && entry(i - 1, j) < v)
        throw NotDecreasingError(Axis::Column, i - 1, j,
                                 "column " + std::to_string(j) + " increases at row " +
                                     std::to_string(i - 1));
    }
}

PlanePartition PlanePartition::zero(const BoxDims& dims) {
  return PlanePartition(
      dims, std::vector<int>(static_cast<std::size_t>(dims.a) * static_cast<std::size_t>(dims.b), 0));
}

std::vector<std::vector<int>> PlanePartition::matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(dims_.a));
  for (int i = 1; i <= dims_.a; ++i) {
    m[static_cast<std::size_t>(i - 1)].reserve(static_cast<std::size_t>(dims_.b));
    for (int j = 1; j <= dims_.b; ++j) m[static_cast<std::size_t>(i - 1)].push_back(entry(i, j));
  }
  return m;
}

PlanePartition validate(const std::vector<std::vector<int>>& entries, const BoxDims& dims) {
  if (entries.size() != static_cast<std::size_t>(dims.a))
    throw BadShapeError("expected " + std::to_string(dims.a) + " rows, got " +
                        std::to_string(entries.size()));
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(dims.a) * static_cast<std::size_t>(dims.b));
  for (const auto& row : entries) {
    if (row.size() != static_cast<std::size_t>(dims.b))
      throw BadShapeError("expected " + std::to_string(dims.b) + " columns, got " +
                          std::to_string(row.size()));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return PlanePartition(dims, std::move(flat));
}

ShiftedArray::ShiftedArray(const BoxDims& dims, std::vector<int> row_major)
    : dims_(dims), e_(std::move(row_major)) {
  const int a = dims_.a, b = dims_.b, c = dims_.c;
  if (e_.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b))
    throw BadShapeError("expected " + std::to_string(a * b) + " entries for box " + dims.str());
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      const int v = entry(i, j);
      if (v < a - i || v > c + a - i)
        throw EntryOutOfRangeError(v, i, j,
                                   "shifted entry " + std::to_string(v) + " at (" +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       ") outside row range");
      if (j > 1 && entry(i, j - 1) < v)
        throw NotDecreasingError(Axis::Row, i, j - 1, "shifted row increases");
      if (i > 1 && entry(i - 1, j) <= v)
        throw NotDecreasingError(Axis::Column, i - 1, j, "shifted column not strictly decreasing");
    }
}

PlanePartition complement(const PlanePartition& pp) {
  const BoxDims& d = pp.dims();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d.a) * static_cast<std::size_t>(d.b));
  for (int i = 1; i <= d.a; ++i)
    for (int j = 1; j <= d.b; ++j) out.push_back(d.c - pp.entry(d.a + 1 - i, d.b + 1 - j));
  return PlanePartition(d, std::move(out));
}

PlanePartition transpose_complement(const PlanePartition& pp) {
  const BoxDims& d = pp.dims();
  if (d.a != d.b)
    throw NotSquareError("transpose_complement requires a == b, got " + d.str());
  const int n = d.a, m = d.c;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(m - pp.entry(n + 1 - j, n + 1 - i));
  return PlanePartition(d, std::move(out));
}

ShiftedArray shift_rows(const PlanePartition& pp) {
  const BoxDims& d = pp.dims();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d.a) * static_cast<std::size_t>(d.b));
  for (int i = 1; i <= d.a; ++i)
    for (int j = 1; j <= d.b; ++j) out.push_back(pp.entry(i, j) + d.a - i);
  return ShiftedArray(d, std::move(out));
}

PlanePartition unshift_rows(const ShiftedArray& sa) {
  const BoxDims& d = sa.dims();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d.a) * static_cast<std::size_t>(d.b));
  for (int i = 1; i <= d.a; ++i)
    for (int j = 1; j <= d.b; ++j) out.push_back(sa.entry(i, j) - (d.a - i));
  return PlanePartition(d, std::move(out));
}

ContentSeq content(const ShiftedArray& sa) {
  const BoxDims& d = sa.dims();
  ContentSeq mu(static_cast<std::size_t>(d.a + d.c), 0);
  for (int v : sa.row_major()) ++mu[static_cast<std::size_t>(v)];
  return mu;
}

ShiftedArray bender_knuth_swap(const ShiftedArray& sa, int j) {
  const BoxDims& d = sa.dims();
  const int a = d.a, b = d.b;
  std::vector<int> e = sa.row_major();
  auto at = [&](int i, int col) -> int& {
    return e[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(b) +
             static_cast<std::size_t>(col - 1)];
  };
  // Row by row: a j-cell is pinned when j+1 sits directly above, a
  // (j+1)-cell when j sits directly below; pinned cells come in vertical
  // pairs and never move. The free cells of a row form one contiguous
  // block of j+1's followed by j's; the block is rewritten with the two
  // run lengths exchanged.
  for (int i = 1; i <= a; ++i) {
    std::vector<int> free_cols;
    int free_lo = 0;  // number of free j-cells
    for (int col = 1; col <= b; ++col) {
      const int v = at(i, col);
      if (v == j + 1) {
        if (i < a && at(i + 1, col) == j) continue;  // pinned
        free_cols.push_back(col);
      } else if (v == j) {
        if (i > 1 && at(i - 1, col) == j + 1) continue;  // pinned
        free_cols.push_back(col);
        ++free_lo;
      }
    }
    for (std::size_t t = 0; t < free_cols.size(); ++t)
      at(i, free_cols[t]) = t < static_cast<std::size_t>(free_lo) ? j + 1 : j;
  }
  return ShiftedArray(d, std::move(e));
}

std::vector<ObliquePos> horizontal_positions(const PlanePartition& pp) {
  const BoxDims& d = pp.dims();
  std::vector<ObliquePos> out;
  out.reserve(static_cast<std::size_t>(d.a) * static_cast<std::size_t>(d.b));
  for (int i = 1; i <= d.a; ++i)
    for (int j = 1; j <= d.b; ++j)
      out.push_back(ObliquePos{j - i + d.a, pp.entry(i, j) + d.a - i});
  std::sort(out.begin(), out.end());
  return out;
}

int column_count(const BoxDims& dims, int x) {
  if (x < 1 || x > dims.a + dims.b - 1)
    throw OutOfRangeError("line x=" + std::to_string(x) + " outside 1.." +
                          std::to_string(dims.a + dims.b - 1));
  return std::min({x, std::min(dims.a, dims.b), dims.a + dims.b - x});
}

LozengeTiling::LozengeTiling(const BoxDims& dims, std::vector<ObliquePos> horizontals)
    : dims_(dims), horizontals_(std::move(horizontals)) {
  std::sort(horizontals_.begin(), horizontals_.end());
  const int a = dims_.a, b = dims_.b, c = dims_.c;
  if (horizontals_.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b))
    throw Error("tiling must contain exactly a*b horizontal lozenges");
  std::vector<int> per_line(static_cast<std::size_t>(a + b), 0);
  const ObliquePos* prev = nullptr;
  for (const ObliquePos& p : horizontals_) {
    if (p.x < 1 || p.x > a + b - 1 || p.y < 0 || p.y > a + c - 1)
      throw Error("horizontal lozenge at (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                  ") outside the hexagon");
    if (prev != nullptr && *prev == p) throw Error("duplicate horizontal lozenge");
    ++per_line[static_cast<std::size_t>(p.x)];
    prev = &p;
  }
  for (int x = 1; x <= a + b - 1; ++x)
    if (per_line[static_cast<std::size_t>(x)] != column_count(dims_, x))
      throw Error("line x=" + std::to_string(x) + " carries " +
                  std::to_string(per_line[static_cast<std::size_t>(x)]) +
                  " horizontal lozenges, expected " + std::to_string(column_count(dims_, x)));
}

LozengeTiling tiling_from_pp(const PlanePartition& pp) {
  return LozengeTiling(pp.dims(), horizontal_positions(pp));
}

PlanePartition plane_partition_from_tiling(const LozengeTiling& t) {
  const BoxDims& d = t.dims();
  const int a = d.a, b = d.b;
  // Per line x the y values, largest first, belong to diagonal rows
  // i = max(1, a+1-x), ..., min(a, a+b-x) in that order.
  std::map<int, std::vector<int>> per_line;
  for (const ObliquePos& p : t.horizontals()) per_line[p.x].push_back(p.y);
  std::vector<int> e(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), 0);
  for (auto& [x, ys] : per_line) {
    std::sort(ys.rbegin(), ys.rend());
    const int lo = std::max(1, a + 1 - x);
    for (std::size_t t2 = 0; t2 < ys.size(); ++t2) {
      const int i = lo + static_cast<int>(t2);
      const int jcol = x - a + i;
      e[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(b) +
        static_cast<std::size_t>(jcol - 1)] = ys[t2] - a + i;
    }
  }
  return PlanePartition(d, std::move(e));
}

}  // namespace hexamoment
