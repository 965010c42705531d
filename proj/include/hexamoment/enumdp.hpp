#ifndef HEXAMOMENT_ENUMDP_HPP
#define HEXAMOMENT_ENUMDP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hexamoment/numeric.hpp"
#include "hexamoment/pp.hpp"
#include "hexamoment/prng.hpp"

namespace hexamoment {

inline constexpr std::int64_t kDefaultEnumerationLimit = 10'000'000;

// All weakly decreasing vectors of a fixed length with entries in
// 0..max_entry, listed in ascending lexicographic order. One such vector is
// a column of a plane partition. Also provides the transfer operators of
// the column DP: sums over pointwise-dominating (or dominated) states,
// computed as a chain of per-coordinate prefix sums over the fixed
// ordering.
class ColumnStateSpace {
 public:
  ColumnStateSpace(int length, int max_entry);

  int length() const { return length_; }
  int max_entry() const { return max_; }
  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<int>& state(int idx) const { return states_[static_cast<std::size_t>(idx)]; }
  int index_of(const std::vector<int>& v) const;  // -1 if absent

  // Pointwise comparison of two states.
  bool dominated(int lo_idx, int hi_idx) const;

  // g[s] = sum of f[t] over t >= s pointwise (resp. t <= s).
  std::vector<BigInt> upset_sums(std::vector<BigInt> f) const;
  std::vector<BigInt> downset_sums(std::vector<BigInt> f) const;

 private:
  int length_;
  int max_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, int> index_;
  // bump_up_[s][i]: index of state(s) with coordinate i (0-based) raised by
  // one, or -1 when that leaves the space; bump_down_ symmetric.
  std::vector<std::vector<int>> bump_up_;
  std::vector<std::vector<int>> bump_down_;
};

// Forward/backward column DP over a box. forward[j-1][s] counts fillings of
// columns 1..j whose column j equals state s; backward[j-1][s] counts
// fillings of columns j..b whose column j equals s. The transition is
// pointwise <= between consecutive columns.
struct DpTables {
  DpTables(const BoxDims& dims);

  BoxDims dims;
  ColumnStateSpace states;  // length a, entries 0..c
  std::vector<std::vector<BigInt>> forward;
  std::vector<std::vector<BigInt>> backward;
  BigInt total;  // number of plane partitions in the box
};

// Exact number of plane partitions in the box, via the column DP.
BigInt count_box(const BoxDims& dims);

// The classical box product, used only as an independent cross-check.
BigInt macmahon_count(const BoxDims& dims);

// Visits every plane partition exactly once, in ascending row-major
// lexicographic order. Throws TooLargeError when the box holds more than
// `limit` plane partitions and force is not set.
void for_each_plane_partition(const BoxDims& dims,
                              const std::function<void(const PlanePartition&)>& visit,
                              std::int64_t limit = kDefaultEnumerationLimit, bool force = false);

std::vector<PlanePartition> enumerate_box(const BoxDims& dims,
                                          std::int64_t limit = kDefaultEnumerationLimit,
                                          bool force = false);

// Exact distribution of each entry over the uniform measure on the box.
class CellMarginals {
 public:
  explicit CellMarginals(const DpTables& dp);
  explicit CellMarginals(const BoxDims& dims) : CellMarginals(DpTables(dims)) {}

  const BoxDims& dims() const { return dims_; }
  // Prob(entry(i,j) == k); cell and value 1-indexed as in PlanePartition.
  const Rational& prob(int i, int j, int k) const;
  Rational expected(int i, int j) const;

 private:
  BoxDims dims_;
  std::vector<Rational> p_;  // [(i-1)*b + (j-1)] * (c+1) + k
};

// E(i,j): expected entry per cell, as an a x b matrix.
std::vector<std::vector<Rational>> expected_entries(const BoxDims& dims);

// Exactly uniform sample, deterministic for a fixed (seed, index) pair:
// draw `index` of a batch uses split_stream(seed, index).
PlanePartition sample_uniform(const DpTables& dp, SplitMix64& rng);
PlanePartition sample_uniform(const BoxDims& dims, std::uint64_t seed, std::uint64_t index = 0);

}  // namespace hexamoment

#endif  // HEXAMOMENT_ENUMDP_HPP
