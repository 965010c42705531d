#ifndef HEXAMOMENT_QCOMB_HPP
#define HEXAMOMENT_QCOMB_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hexamoment/enumdp.hpp"
#include "hexamoment/numeric.hpp"

namespace hexamoment {

// Partition shape: weakly decreasing positive parts; may be empty.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;                // number of cells
  int part(int i) const;           // 1-indexed; 0 beyond the last row
  const std::vector<int>& parts() const { return parts_; }
  Shape conjugate() const;
  int hook(int r, int c) const;     // arm + leg + 1
  int content(int r, int c) const { return c - r; }
  std::vector<std::pair<int, int>> cells() const;  // row-major, 1-indexed

  friend bool operator==(const Shape& l, const Shape& r) { return l.parts_ == r.parts_; }
  std::string str() const;

 private:
  std::vector<int> parts_;
};

// Semistandard Young tableau: rows weakly increasing, columns strictly
// increasing, entries in 1..max_entry.
class Ssyt {
 public:
  Ssyt(const Shape& shape, std::vector<std::vector<int>> rows, int max_entry);

  const Shape& shape() const { return shape_; }
  int max_entry() const { return max_entry_; }
  int entry(int r, int t) const {
    return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(t - 1)];
  }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  long norm() const;  // sum of entries

  friend bool operator==(const Ssyt& l, const Ssyt& r) {
    return l.shape_ == r.shape_ && l.rows_ == r.rows_;
  }

 private:
  Shape shape_;
  std::vector<std::vector<int>> rows_;
  int max_entry_;
};

// Generating function sum over tableaux of q^norm, from the hook-content
// product: q^(sum i*lambda_i) * prod (1 - q^(m + content)) / (1 - q^hook).
// Built numerator-first, then divided exactly; zero when m < rows.
QPolynomial hook_content_gf(const Shape& shape, int max_entry);

void for_each_ssyt(const Shape& shape, int max_entry, const std::function<void(const Ssyt&)>& visit,
                   std::int64_t limit = kDefaultEnumerationLimit);
std::vector<Ssyt> enumerate_ssyt(const Shape& shape, int max_entry,
                                 std::int64_t limit = kDefaultEnumerationLimit);

// Average norm over all tableaux of the shape with entries <= max_entry;
// equals (max_entry + 1)/2 * |shape|. Throws NoTableauxError when none exist.
Rational mean_norm_ssyt(const Shape& shape, int max_entry);

// Decreasing filling of the staircase cell set
//   { (i,j) : 1 <= i <= a, 1 <= j <= i + n }
// with entries <= c and prescribed values k_i in the cells (i, i+n).
class StaircaseArray {
 public:
  StaircaseArray(int a, int n, int c, std::vector<int> boundary,
                 std::vector<std::vector<int>> rows);

  int a() const { return a_; }
  int n() const { return n_; }
  int c() const { return c_; }
  const std::vector<int>& boundary() const { return k_; }
  int entry(int i, int j) const {
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  long norm() const;            // sum over all cells
  long interior_norm() const;   // excludes the cells (i, i+n)

  friend bool operator==(const StaircaseArray& l, const StaircaseArray& r) {
    return l.a_ == r.a_ && l.n_ == r.n_ && l.c_ == r.c_ && l.rows_ == r.rows_;
  }

 private:
  int a_;
  int n_;
  int c_;
  std::vector<int> k_;
  std::vector<std::vector<int>> rows_;
};

// A (count) and S (sum of interior norms) over the whole family.
struct StaircaseFamilyStats {
  BigInt count;
  BigInt interior_sum;
};

void for_each_staircase_array(int a, int n, int c, const std::vector<int>& boundary,
                              const std::function<void(const StaircaseArray&)>& visit,
                              std::int64_t limit = kDefaultEnumerationLimit);
StaircaseFamilyStats staircase_family_stats(int a, int n, int c, const std::vector<int>& boundary,
                                            std::int64_t limit = kDefaultEnumerationLimit);

// Closed form for S/A: (n a c + (a+n-1) * sum k_i) / 2.
Rational staircase_mean_norm(int a, int n, int c, const std::vector<int>& boundary);

// Bijection with tableaux of shape (c-k_a, ..., c-k_1) and entries in
// 1..a+n: complement entries to c - T, conjugate each row, stack right
// justified, rotate by 180 degrees, then replace e by a+n+1-e.
Ssyt array_to_ssyt(const StaircaseArray& arr);
StaircaseArray ssyt_to_array(const Ssyt& t, int a, int n, int c);

// norm(T) = c (a n + a(a+1)/2) - (a+n+1)(a c - sum k_i) + norm(T').
bool check_norm_relation(const StaircaseArray& arr);

}  // namespace hexamoment

#endif  // HEXAMOMENT_QCOMB_HPP
