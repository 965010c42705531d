#include "hexamoment/qcomb.hpp"

#include <algorithm>
#include <numeric>

namespace hexamoment {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw BadShapeError("shape parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw BadShapeError("shape parts must be weakly decreasing");
  }
}

int Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Shape::part(int i) const {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Shape Shape::conjugate() const {
  if (parts_.empty()) return Shape();
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Shape(std::move(conj));
}

int Shape::hook(int r, int c) const {
  const Shape conj = conjugate();
  return part(r) - c + conj.part(c) - r + 1;
}

std::vector<std::pair<int, int>> Shape::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= part(r); ++c) out.emplace_back(r, c);
  return out;
}

std::string Shape::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Ssyt::Ssyt(const Shape& shape, std::vector<std::vector<int>> rows, int max_entry)
    : shape_(shape), rows_(std::move(rows)), max_entry_(max_entry) {
  if (rows_.size() != static_cast<std::size_t>(shape_.rows()))
    throw BadShapeError("tableau row count does not match its shape");
  for (int r = 1; r <= shape_.rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r - 1)];
    if (row.size() != static_cast<std::size_t>(shape_.part(r)))
      throw BadShapeError("tableau row length does not match its shape");
    for (int t = 1; t <= shape_.part(r); ++t) {
      const int v = entry(r, t);
      if (v < 1 || v > max_entry_)
        throw EntryOutOfRangeError(v, r, t, "tableau entry outside 1..max");
      if (t > 1 && entry(r, t - 1) > v)
        throw NotDecreasingError(Axis::Row, r, t - 1, "tableau row decreases");
      if (r > 1 && shape_.part(r - 1) >= t && entry(r - 1, t) >= v)
        throw NotDecreasingError(Axis::Column, r - 1, t,
                                 "tableau column not strictly increasing");
    }
  }
}

long Ssyt::norm() const {
  long s = 0;
  for (const auto& row : rows_)
    for (int v : row) s += v;
  return s;
}

QPolynomial hook_content_gf(const Shape& shape, int max_entry) {
  if (max_entry < shape.rows()) return QPolynomial();
  int lead = 0;
  for (int r = 1; r <= shape.rows(); ++r) lead += r * shape.part(r);
  QPolynomial num = QPolynomial::monomial(1, lead);
  QPolynomial den = QPolynomial::one();
  for (const auto& [r, c] : shape.cells()) {
    const int e = max_entry + shape.content(r, c);
    num = num * (QPolynomial::one() - QPolynomial::monomial(1, e));
    den = den * (QPolynomial::one() - QPolynomial::monomial(1, shape.hook(r, c)));
  }
  return div_exact(num, den);
}

void for_each_ssyt(const Shape& shape, int max_entry,
                   const std::function<void(const Ssyt&)>& visit, std::int64_t limit) {
  if (max_entry < 0) throw Error("max_entry must be nonnegative");
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.rows(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);
  std::int64_t seen = 0;
  const std::function<void(int, int)> rec = [&](int r, int t) {
    if (r > shape.rows()) {
      if (++seen > limit)
        throw TooLargeError(limit, "", "tableau enumeration exceeded the limit of " +
                                           std::to_string(limit));
      visit(Ssyt(shape, rows, max_entry));
      return;
    }
    if (t > shape.part(r)) {
      rec(r + 1, 1);
      return;
    }
    int lo = 1;
    if (t > 1) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(t - 2)]);
    if (r > 1 && shape.part(r - 1) >= t)
      lo = std::max(lo, rows[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(t - 1)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(t - 1)] = v;
      rec(r, t + 1);
    }
  };
  rec(1, 1);
}

std::vector<Ssyt> enumerate_ssyt(const Shape& shape, int max_entry, std::int64_t limit) {
  std::vector<Ssyt> out;
  for_each_ssyt(
      shape, max_entry, [&](const Ssyt& t) { out.push_back(t); }, limit);
  return out;
}

Rational mean_norm_ssyt(const Shape& shape, int max_entry) {
  const QPolynomial gf = hook_content_gf(shape, max_entry);
  if (gf.is_zero())
    throw NoTableauxError("no tableaux of shape " + shape.str() + " with entries up to " +
                          std::to_string(max_entry));
  return Rational(gf.derivative_at_one(), gf.eval_at_one());
}

namespace {

void validate_boundary(int a, int n, int c, const std::vector<int>& k) {
  if (a < 1 || n < 1 || c < 1) throw Error("staircase parameters must be positive");
  if (k.size() != static_cast<std::size_t>(a))
    throw BadShapeError("boundary must provide one value per row");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || k[i] > c) throw BadShapeError("boundary values must lie in 0..c");
    if (i > 0 && k[i - 1] < k[i]) throw BadShapeError("boundary must be weakly decreasing");
  }
}

}  // namespace

StaircaseArray::StaircaseArray(int a, int n, int c, std::vector<int> boundary,
                               std::vector<std::vector<int>> rows)
    : a_(a), n_(n), c_(c), k_(std::move(boundary)), rows_(std::move(rows)) {
  validate_boundary(a_, n_, c_, k_);
  if (rows_.size() != static_cast<std::size_t>(a_))
    throw BadShapeError("staircase array must have a rows");
  for (int i = 1; i <= a_; ++i) {
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(i + n_))
      throw BadShapeError("staircase row " + std::to_string(i) + " must have " +
                          std::to_string(i + n_) + " cells");
    for (int j = 1; j <= i + n_; ++j) {
      const int v = entry(i, j);
      if (v < 0 || v > c_) throw EntryOutOfRangeError(v, i, j, "staircase entry outside 0..c");
      if (j > 1 && entry(i, j - 1) < v)
        throw NotDecreasingError(Axis::Row, i, j - 1, "staircase row increases");
      if (i > 1 && j <= (i - 1) + n_ && entry(i - 1, j) < v)
        throw NotDecreasingError(Axis::Column, i - 1, j, "staircase column increases");
    }
    if (entry(i, i + n_) != k_[static_cast<std::size_t>(i - 1)])
      throw BadShapeError("cell (" + std::to_string(i) + "," + std::to_string(i + n_) +
                          ") must carry the prescribed boundary value");
  }
}

long StaircaseArray::norm() const {
  long s = 0;
  for (const auto& row : rows_)
    for (int v : row) s += v;
  return s;
}

long StaircaseArray::interior_norm() const {
  long s = norm();
  for (int v : k_) s -= v;
  return s;
}

void for_each_staircase_array(int a, int n, int c, const std::vector<int>& boundary,
                              const std::function<void(const StaircaseArray&)>& visit,
                              std::int64_t limit) {
  validate_boundary(a, n, c, boundary);
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= a; ++i) rows.emplace_back(static_cast<std::size_t>(i + n), 0);
  std::int64_t seen = 0;
  const std::function<void(int, int)> rec = [&](int i, int j) {
    if (i > a) {
      if (++seen > limit)
        throw TooLargeError(limit, "", "staircase enumeration exceeded the limit of " +
                                           std::to_string(limit));
      visit(StaircaseArray(a, n, c, boundary, rows));
      return;
    }
    if (j > i + n) {
      rec(i + 1, 1);
      return;
    }
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    int hi = c;
    if (j > 1) hi = std::min(hi, row[static_cast<std::size_t>(j - 2)]);
    if (i > 1 && j <= (i - 1) + n)
      hi = std::min(hi, rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)]);
    if (j == i + n) {
      const int v = boundary[static_cast<std::size_t>(i - 1)];
      if (v <= hi) {
        row[static_cast<std::size_t>(j - 1)] = v;
        rec(i, j + 1);
      }
      return;
    }
    int lo = boundary[static_cast<std::size_t>(i - 1)];  // the row ends at k_i
    if (j > n && j - n > i && j - n <= a)
      lo = std::max(lo, boundary[static_cast<std::size_t>(j - n - 1)]);  // column hits (j-n, j)
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(j - 1)] = v;
      rec(i, j + 1);
    }
  };
  rec(1, 1);
}

StaircaseFamilyStats staircase_family_stats(int a, int n, int c, const std::vector<int>& boundary,
                                            std::int64_t limit) {
  StaircaseFamilyStats stats{0, 0};
  for_each_staircase_array(
      a, n, c, boundary,
      [&](const StaircaseArray& arr) {
        stats.count += 1;
        stats.interior_sum += arr.interior_norm();
      },
      limit);
  return stats;
}

Rational staircase_mean_norm(int a, int n, int c, const std::vector<int>& boundary) {
  validate_boundary(a, n, c, boundary);
  const long ksum = std::accumulate(boundary.begin(), boundary.end(), 0L);
  return Rational(BigInt(static_cast<long>(n) * a * c + static_cast<long>(a + n - 1) * ksum), 2);
}

Ssyt array_to_ssyt(const StaircaseArray& arr) {
  const int a = arr.a(), n = arr.n(), c = arr.c();
  // Conjugating row i of the complemented array: sigma_t counts the cells
  // of row i whose entry is at most c - t.
  const auto sigma = [&](int i, int t) {
    int cnt = 0;
    for (int j = 1; j <= i + n; ++j)
      if (arr.entry(i, j) <= c - t) ++cnt;
    return cnt;
  };
  std::vector<int> parts;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= a; ++r) {
    const int i = a + 1 - r;
    const int len = c - arr.boundary()[static_cast<std::size_t>(i - 1)];
    if (len == 0) break;  // row lengths only shrink from here on
    parts.push_back(len);
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(len));
    for (int t = 1; t <= len; ++t) row.push_back(a + n + 1 - sigma(i, t));
    rows.push_back(std::move(row));
  }
  return Ssyt(Shape(std::move(parts)), std::move(rows), a + n);
}

StaircaseArray ssyt_to_array(const Ssyt& t, int a, int n, int c) {
  if (a < 1 || n < 1 || c < 1) throw Error("staircase parameters must be positive");
  const Shape& shape = t.shape();
  if (shape.rows() > a)
    throw ShapeMismatchError("tableau has more rows than the target staircase admits");
  if (shape.rows() > 0 && shape.part(1) > c)
    throw ShapeMismatchError("tableau rows are longer than the entry bound c admits");
  std::vector<int> k(static_cast<std::size_t>(a), c);
  for (int r = 1; r <= shape.rows(); ++r)
    k[static_cast<std::size_t>(a - r)] = c - shape.part(r);
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= a; ++i) {
    const int r = a + 1 - i;
    const int len = c - k[static_cast<std::size_t>(i - 1)];
    std::vector<int> sig;
    sig.reserve(static_cast<std::size_t>(len));
    for (int tt = 1; tt <= len; ++tt) {
      const int v = a + n + 1 - t.entry(r, tt);
      if (v < 1 || v > i + n)
        throw ShapeMismatchError("tableau entries do not fit the target staircase");
      sig.push_back(v);
    }
    std::vector<int> row(static_cast<std::size_t>(i + n), 0);
    for (int j = 1; j <= i + n; ++j) {
      const int s = i + n + 1 - j;  // undo the reversal of the complement
      int rho = 0;
      for (int v : sig)
        if (v >= s) ++rho;
      row[static_cast<std::size_t>(j - 1)] = c - rho;
    }
    rows.push_back(std::move(row));
  }
  return StaircaseArray(a, n, c, std::move(k), std::move(rows));
}

bool check_norm_relation(const StaircaseArray& arr) {
  const long a = arr.a(), n = arr.n(), c = arr.c();
  long ksum = 0;
  for (int v : arr.boundary()) ksum += v;
  const long rhs =
      c * (a * n + a * (a + 1) / 2) - (a + n + 1) * (a * c - ksum) + array_to_ssyt(arr).norm();
  return arr.norm() == rhs;
}

}  // namespace hexamoment
