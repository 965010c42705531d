#include "hexamoment/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hexamoment/enumdp.hpp"
#include "hexamoment/qcomb.hpp"
#include "hexamoment/stats.hpp"

namespace hexamoment {

namespace {

class Checks {
 public:
  explicit Checks(std::vector<CheckResult>& out) : out_(out) {}

  // Opens a named check that passes unless fail() is called.
  void begin(const std::string& name, const std::string& scope) {
    flush();
    cur_ = CheckResult{name, scope, true, ""};
    open_ = true;
  }

  void fail(const std::string& detail) {
    if (!open_) throw Error("fail() outside a check");
    if (cur_.pass) {
      cur_.pass = false;
      cur_.detail = detail;
    }
  }

  void expect(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }

  void expect_eq(const Rational& actual, const Rational& expected, const std::string& what) {
    if (actual != expected) fail(what + ": expected " + expected.str() + ", got " + actual.str());
  }

  void flush() {
    if (open_) out_.push_back(cur_);
    open_ = false;
  }

 private:
  std::vector<CheckResult>& out_;
  CheckResult cur_;
  bool open_ = false;
};

std::vector<std::vector<int>> decreasing_sequences(int length, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    const int ub = cur.empty() ? max_value : cur.back();
    for (int v = 0; v <= ub; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<Shape> shapes_up_to(int max_cells) {
  std::vector<Shape> out;
  std::vector<int> cur;
  const std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (!cur.empty()) out.push_back(Shape(cur));
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(max_cells, max_cells);
  return out;
}

std::string scope_of(const BoxDims& d) { return d.str(); }

void check_lines(Checks& ck, const BoxDims& d, const ProbTable& table) {
  const int a = d.a, b = d.b, c = d.c;

  ck.begin("row-sums", scope_of(d));
  const Rational expected_row(BigInt(a) * b, BigInt(a) + c);
  for (int y0 = 0; y0 <= a + c - 1; ++y0)
    ck.expect_eq(row_sum(table, y0), expected_row, "line y=" + std::to_string(y0));

  ck.begin("column-sums", scope_of(d));
  for (int x0 = 1; x0 <= a + b - 1; ++x0)
    ck.expect_eq(column_sum(table, x0), Rational(column_sum_closed_form(d, x0)),
                 "line x=" + std::to_string(x0));

  ck.begin("column-first-moments", scope_of(d));
  for (int x0 = 1; x0 <= a + b - 1; ++x0)
    ck.expect_eq(column_first_moment(table, x0), column_first_moment_closed_form(d, x0),
                 "line x=" + std::to_string(x0));

  if (a == b) {
    ck.begin("square-first-moments", scope_of(d));
    for (int x0 = 1; x0 <= a + b - 1; ++x0)
      ck.expect_eq(column_first_moment(table, x0), square_box_first_moment_closed_form(a, c, x0),
                   "line x=" + std::to_string(x0));
  }
}

void check_diagonal_sums(Checks& ck, const BoxDims& d) {
  const int a = d.a, b = d.b, c = d.c;
  ck.begin("diagonal-sums", scope_of(d));
  const auto e = expected_entries(d);
  std::vector<Rational> dx;
  dx.push_back(Rational(0));  // unused slot 0
  for (int x = 1; x <= a + b - 1; ++x) dx.push_back(diagonal_expected_sum(d, e, x));
  const Rational d1 = dx[1];
  const Rational dlast = dx[static_cast<std::size_t>(a + b - 1)];
  ck.expect_eq(d1 + dlast, Rational(c), "first and last diagonal sums");
  for (int x = 1; x <= std::min(a, b); ++x)
    ck.expect_eq(dx[static_cast<std::size_t>(x)], Rational(x) * d1,
                 "low range x=" + std::to_string(x));
  for (int x = std::max(a, b); x <= a + b - 1; ++x)
    ck.expect_eq(dx[static_cast<std::size_t>(x)], Rational(a + b - x) * dlast,
                 "high range x=" + std::to_string(x));
  if (a <= b)
    for (int x = a; x <= b; ++x)
      ck.expect_eq(dx[static_cast<std::size_t>(x)], Rational(x) * d1 - Rational(x - a) * Rational(c),
                   "middle range x=" + std::to_string(x));
  else
    for (int x = b; x <= a; ++x)
      ck.expect_eq(dx[static_cast<std::size_t>(x)], Rational(x) * d1,
                   "middle range x=" + std::to_string(x));
}

void check_moments(Checks& ck, const BoxDims& d, const ProbTable& table) {
  ck.begin("moment-split", scope_of(d));
  const MomentReport r = verify_moments(table);
  ck.expect_eq(r.horizontal, r.closed_horizontal, "horizontal moment");
  ck.expect_eq(r.vertical, r.closed_vertical, "vertical moment");
  ck.expect_eq(r.row_term, r.row_term_closed, "row term");
  ck.expect_eq(r.cross_term, r.cross_term_closed, "cross term");
  ck.expect_eq(r.row_term - r.cross_term + r.horizontal, r.vertical, "split total");
  ck.expect(r.consistent, "report flagged inconsistent");
}

void check_table_symmetry(Checks& ck, const BoxDims& d, const ProbTable& table) {
  const int a = d.a, b = d.b, c = d.c;
  ck.begin("table-symmetry", scope_of(d));
  ck.expect_eq(table.sum(), Rational(a * b), "total mass");
  for (int x = 1; x <= a + b - 1; ++x)
    for (int y = 0; y <= a + c - 1; ++y)
      ck.expect_eq(table.p(x, y), table.p(a + b - x, a + c - 1 - y),
                   "point reflection at (" + std::to_string(x) + "," + std::to_string(y) + ")");
}

void check_marginals(Checks& ck, const BoxDims& d, const CellMarginals& m) {
  const int a = d.a, b = d.b, c = d.c;
  ck.begin("marginal-consistency", scope_of(d));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      Rational s(0);
      for (int k = 0; k <= c; ++k) s += m.prob(i, j, k);
      ck.expect_eq(s, Rational(1),
                   "cell (" + std::to_string(i) + "," + std::to_string(j) + ") distribution");
      ck.expect_eq(m.expected(i, j) + m.expected(a + 1 - i, b + 1 - j), Rational(c),
                   "complement identity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (a == b)
        ck.expect_eq(m.expected(i, j) + m.expected(a + 1 - j, a + 1 - i), Rational(c),
                     "transpose identity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

void check_counts(Checks& ck, const BoxDims& d) {
  ck.begin("count-vs-product", scope_of(d));
  const BigInt dp = count_box(d);
  const BigInt prod = macmahon_count(d);
  ck.expect(dp == prod, "DP count " + to_string(dp) + " vs product " + to_string(prod));
}

void check_against_enumeration(Checks& ck, const BoxDims& d, const ProbTable& table,
                               const CellMarginals& m, std::int64_t threshold) {
  const int a = d.a, b = d.b, c = d.c;
  const BigInt n = count_box(d);
  if (n > BigInt(static_cast<long>(threshold))) return;

  const std::vector<PlanePartition> all = enumerate_box(d, threshold, true);

  ck.begin("count-vs-enumeration", scope_of(d));
  ck.expect(BigInt(static_cast<long>(all.size())) == n,
            "enumerated " + std::to_string(all.size()) + ", DP says " + to_string(n));

  ck.begin("line-counts-constant", scope_of(d));
  for (const PlanePartition& pp : all) {
    std::map<int, int> per_line;
    for (const ObliquePos& p : horizontal_positions(pp)) ++per_line[p.x];
    for (int x = 1; x <= a + b - 1; ++x)
      if (per_line[x] != column_sum_closed_form(d, x)) {
        ck.fail("a tiling carries " + std::to_string(per_line[x]) + " lozenges on line x=" +
                std::to_string(x) + ", expected " + std::to_string(column_sum_closed_form(d, x)));
        break;
      }
  }

  ck.begin("marginals-vs-frequencies", scope_of(d));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 0; k <= c; ++k) {
        long freq = 0;
        for (const PlanePartition& pp : all)
          if (pp.entry(i, j) == k) ++freq;
        ck.expect_eq(m.prob(i, j, k), Rational(BigInt(freq), n),
                     "cell (" + std::to_string(i) + "," + std::to_string(j) + ") value " +
                         std::to_string(k));
      }

  ck.begin("table-vs-frequencies", scope_of(d));
  std::map<std::pair<int, int>, long> freq;
  for (const PlanePartition& pp : all)
    for (const ObliquePos& p : horizontal_positions(pp)) ++freq[{p.x, p.y}];
  for (int x = 1; x <= a + b - 1; ++x)
    for (int y = 0; y <= a + c - 1; ++y)
      ck.expect_eq(table.p(x, y), Rational(BigInt(freq[{x, y}]), n),
                   "position (" + std::to_string(x) + "," + std::to_string(y) + ")");

  ck.begin("complement-involution", scope_of(d));
  for (const PlanePartition& pp : all) {
    const PlanePartition cp = complement(pp);
    if (!(complement(cp) == pp)) {
      ck.fail("complement applied twice is not the identity");
      break;
    }
    // Complementation reflects every horizontal position through the centre.
    std::vector<ObliquePos> reflected;
    for (const ObliquePos& p : horizontal_positions(pp))
      reflected.push_back(ObliquePos{a + b - p.x, a + c - 1 - p.y});
    std::sort(reflected.begin(), reflected.end());
    if (!(reflected == horizontal_positions(cp))) {
      ck.fail("complement does not reflect the horizontal positions");
      break;
    }
    if (a == b) {
      const PlanePartition tc = transpose_complement(pp);
      if (!(transpose_complement(tc) == pp)) {
        ck.fail("transpose-complement applied twice is not the identity");
        break;
      }
    }
  }

  ck.begin("shift-round-trip", scope_of(d));
  for (const PlanePartition& pp : all) {
    const ShiftedArray sa = shift_rows(pp);  // the constructor checks strict columns
    if (!(unshift_rows(sa) == pp)) {
      ck.fail("unshift(shift(pp)) differs from pp");
      break;
    }
  }

  ck.begin("tiling-round-trip", scope_of(d));
  for (const PlanePartition& pp : all) {
    if (!(plane_partition_from_tiling(tiling_from_pp(pp)) == pp)) {
      ck.fail("tiling correspondence does not invert");
      break;
    }
  }
}

}  // namespace

std::vector<CheckResult> verify_box(const BoxDims& dims, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  Checks ck(out);

  const CellMarginals marginals(dims);
  ProbTable table(dims, marginals);
  if (opts.inject_fault) table.perturb(1, 0, Rational(1, 997));

  check_lines(ck, dims, table);
  check_diagonal_sums(ck, dims);
  check_moments(ck, dims, table);
  check_table_symmetry(ck, dims, table);
  check_marginals(ck, dims, marginals);
  check_counts(ck, dims);
  check_against_enumeration(ck, dims, table, marginals, opts.enumeration_threshold);

  ck.flush();
  return out;
}

namespace {

void check_hook_content(Checks& ck) {
  ck.begin("hook-content-gf", "shapes up to 6 cells, entries up to 4");
  for (const Shape& shape : shapes_up_to(6)) {
    for (int m = 1; m <= 4; ++m) {
      QPolynomial brute;
      for_each_ssyt(shape, m, [&](const Ssyt& t) {
        brute = brute + QPolynomial::monomial(1, static_cast<int>(t.norm()));
      });
      const QPolynomial gf = hook_content_gf(shape, m);
      if (gf != brute) {
        ck.fail("shape " + shape.str() + ", max entry " + std::to_string(m) + ": product gives " +
                gf.str() + ", enumeration gives " + brute.str());
        return;
      }
    }
  }

  ck.begin("ssyt-mean-norms", "shapes up to 6 cells, entries up to 4");
  for (const Shape& shape : shapes_up_to(6)) {
    for (int m = 1; m <= 4; ++m) {
      if (m < shape.rows()) continue;
      const Rational mean = mean_norm_ssyt(shape, m);
      const Rational expected = Rational(m + 1, 2) * Rational(shape.size());
      if (mean != expected) {
        ck.fail("shape " + shape.str() + ", max entry " + std::to_string(m) + ": expected " +
                expected.str() + ", got " + mean.str());
        return;
      }
    }
  }
}

void check_staircase_families(Checks& ck) {
  const std::int64_t family_limit = 10'000;
  ck.begin("staircase-mean-norms", "a<=3, n<=2, c<=3, all boundaries");
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= 2; ++n)
      for (int c = 1; c <= 3; ++c)
        for (const std::vector<int>& k : decreasing_sequences(a, c)) {
          StaircaseFamilyStats stats;
          try {
            stats = staircase_family_stats(a, n, c, k, family_limit);
          } catch (const TooLargeError&) {
            continue;
          }
          const Rational measured(stats.interior_sum, stats.count);
          const Rational closed = staircase_mean_norm(a, n, c, k);
          if (measured != closed) {
            ck.fail("a=" + std::to_string(a) + " n=" + std::to_string(n) + " c=" +
                    std::to_string(c) + ": expected " + closed.str() + ", got " + measured.str());
            return;
          }
        }

  ck.begin("staircase-bijection", "a<=3, n<=2, c<=3, all boundaries");
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= 2; ++n)
      for (int c = 1; c <= 3; ++c)
        for (const std::vector<int>& k : decreasing_sequences(a, c)) {
          long count = 0;
          bool bad = false;
          try {
            for_each_staircase_array(
                a, n, c, k,
                [&](const StaircaseArray& arr) {
                  ++count;
                  const Ssyt t = array_to_ssyt(arr);
                  if (!(ssyt_to_array(t, a, n, c) == arr)) {
                    ck.fail("round trip broke an array with boundary at a=" + std::to_string(a));
                    bad = true;
                  }
                  if (!check_norm_relation(arr)) {
                    ck.fail("norm relation failed at a=" + std::to_string(a) +
                            " n=" + std::to_string(n) + " c=" + std::to_string(c));
                    bad = true;
                  }
                },
                family_limit);
          } catch (const TooLargeError&) {
            continue;
          }
          if (bad) return;
          // The image must exhaust the tableaux of the complementary shape.
          std::vector<int> parts;
          for (int i = a; i >= 1; --i)
            if (c - k[static_cast<std::size_t>(i - 1)] > 0)
              parts.push_back(c - k[static_cast<std::size_t>(i - 1)]);
          long ssyt_count = 0;
          for_each_ssyt(Shape(parts), a + n, [&](const Ssyt&) { ++ssyt_count; }, family_limit);
          if (count != ssyt_count) {
            ck.fail("family size " + std::to_string(count) + " vs " + std::to_string(ssyt_count) +
                    " tableaux of the complementary shape");
            return;
          }
        }
}

void check_content_swap(Checks& ck) {
  ck.begin("content-swap-involution", "boxes (2,2,2) and (3,2,2)");
  for (const BoxDims& d : {BoxDims(2, 2, 2), BoxDims(3, 2, 2)}) {
    for (const PlanePartition& pp : enumerate_box(d)) {
      const ShiftedArray sa = shift_rows(pp);
      const ContentSeq mu = content(sa);
      for (int j = 0; j + 1 <= d.a + d.c - 1; ++j) {
        const ShiftedArray swapped = bender_knuth_swap(sa, j);  // constructor revalidates
        if (!(bender_knuth_swap(swapped, j) == sa)) {
          ck.fail("double swap at j=" + std::to_string(j) + " in box " + d.str());
          return;
        }
        ContentSeq nu = content(swapped);
        std::swap(nu[static_cast<std::size_t>(j)], nu[static_cast<std::size_t>(j + 1)]);
        if (nu != mu) {
          ck.fail("swap at j=" + std::to_string(j) + " in box " + d.str() +
                  " does not exchange the multiplicities");
          return;
        }
      }
    }
  }
}

}  // namespace

std::vector<CheckResult> verify_structures() {
  std::vector<CheckResult> out;
  Checks ck(out);
  check_hook_content(ck);
  check_staircase_families(ck);
  check_content_swap(ck);
  ck.flush();
  return out;
}

std::vector<CheckResult> verify_sweep(int max_side, const VerifyOptions& opts) {
  if (max_side < 1) throw Error("sweep bound must be positive");
  std::vector<CheckResult> out;
  for (int a = 1; a <= max_side; ++a)
    for (int b = 1; b <= max_side; ++b)
      for (int c = 1; c <= max_side; ++c) {
        const std::vector<CheckResult> box = verify_box(BoxDims(a, b, c), opts);
        out.insert(out.end(), box.begin(), box.end());
      }
  const std::vector<CheckResult> structural = verify_structures();
  out.insert(out.end(), structural.begin(), structural.end());
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace hexamoment
