#include "hexamoment/enumdp.hpp"

#include <algorithm>

namespace hexamoment {

namespace {

void gen_states(int length, int max_entry, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const int ub = cur.empty() ? max_entry : cur.back();
  for (int v = 0; v <= ub; ++v) {
    cur.push_back(v);
    gen_states(length, max_entry, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ColumnStateSpace::ColumnStateSpace(int length, int max_entry)
    : length_(length), max_(max_entry) {
  if (length < 1 || max_entry < 0) throw Error("bad column state space parameters");
  std::vector<int> cur;
  gen_states(length_, max_, cur, states_);
  for (int idx = 0; idx < size(); ++idx) index_[states_[static_cast<std::size_t>(idx)]] = idx;

  bump_up_.assign(states_.size(), std::vector<int>(static_cast<std::size_t>(length_), -1));
  bump_down_.assign(states_.size(), std::vector<int>(static_cast<std::size_t>(length_), -1));
  std::vector<int> probe;
  for (int idx = 0; idx < size(); ++idx) {
    const std::vector<int>& s = states_[static_cast<std::size_t>(idx)];
    for (int i = 0; i < length_; ++i) {
      const int hi = i == 0 ? max_ : s[static_cast<std::size_t>(i - 1)];
      const int lo = i == length_ - 1 ? 0 : s[static_cast<std::size_t>(i + 1)];
      if (s[static_cast<std::size_t>(i)] + 1 <= hi) {
        probe = s;
        ++probe[static_cast<std::size_t>(i)];
        bump_up_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)] = index_.at(probe);
      }
      if (s[static_cast<std::size_t>(i)] - 1 >= lo) {
        probe = s;
        --probe[static_cast<std::size_t>(i)];
        bump_down_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)] = index_.at(probe);
      }
    }
  }
}

int ColumnStateSpace::index_of(const std::vector<int>& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool ColumnStateSpace::dominated(int lo_idx, int hi_idx) const {
  const std::vector<int>& lo = state(lo_idx);
  const std::vector<int>& hi = state(hi_idx);
  for (int i = 0; i < length_; ++i)
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return false;
  return true;
}

// Replacing one coordinate at a time turns the pointwise-domination sum
// into a chain of one-dimensional suffix (resp. prefix) sums; the running
// sums are folded in place along the lexicographic ordering.
std::vector<BigInt> ColumnStateSpace::upset_sums(std::vector<BigInt> f) const {
  if (f.size() != states_.size()) throw Error("upset_sums: wrong vector length");
  for (int i = length_ - 1; i >= 0; --i)
    for (int idx = size() - 1; idx >= 0; --idx) {
      const int up = bump_up_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)];
      if (up >= 0) f[static_cast<std::size_t>(idx)] += f[static_cast<std::size_t>(up)];
    }
  return f;
}

std::vector<BigInt> ColumnStateSpace::downset_sums(std::vector<BigInt> f) const {
  if (f.size() != states_.size()) throw Error("downset_sums: wrong vector length");
  for (int i = 0; i < length_; ++i)
    for (int idx = 0; idx < size(); ++idx) {
      const int down = bump_down_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)];
      if (down >= 0) f[static_cast<std::size_t>(idx)] += f[static_cast<std::size_t>(down)];
    }
  return f;
}

DpTables::DpTables(const BoxDims& dims) : dims(dims), states(dims.a, dims.c) {
  const std::size_t b = static_cast<std::size_t>(dims.b);
  const std::size_t n_states = static_cast<std::size_t>(states.size());
  forward.assign(b, {});
  backward.assign(b, {});
  forward[0].assign(n_states, BigInt(1));
  for (std::size_t j = 1; j < b; ++j) forward[j] = states.upset_sums(forward[j - 1]);
  backward[b - 1].assign(n_states, BigInt(1));
  for (std::size_t j = b - 1; j-- > 0;) backward[j] = states.downset_sums(backward[j + 1]);

  total = 0;
  for (const BigInt& w : forward[b - 1]) total += w;
  BigInt check = 0;
  for (const BigInt& w : backward[0]) check += w;
  if (total != check) throw Error("forward/backward totals disagree");
}

BigInt count_box(const BoxDims& dims) { return DpTables(dims).total; }

BigInt macmahon_count(const BoxDims& dims) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= dims.a; ++i)
    for (int j = 1; j <= dims.b; ++j)
      for (int k = 1; k <= dims.c; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
  if (num % den != 0) throw Error("box product is not an integer");
  return num / den;
}

void for_each_plane_partition(const BoxDims& dims,
                              const std::function<void(const PlanePartition&)>& visit,
                              std::int64_t limit, bool force) {
  if (!force) {
    const BigInt n = count_box(dims);
    if (n > BigInt(static_cast<long>(limit)))
      throw TooLargeError(limit, to_string(n),
                          "box " + dims.str() + " holds " + to_string(n) +
                              " plane partitions, over the limit of " + std::to_string(limit) +
                              "; raise the limit or force");
  }
  const int a = dims.a, b = dims.b, c = dims.c;
  std::vector<int> e(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), 0);
  const auto cell = [&](int t) -> int& { return e[static_cast<std::size_t>(t)]; };
  const std::function<void(int)> rec = [&](int t) {
    if (t == a * b) {
      visit(PlanePartition(dims, e));
      return;
    }
    const int i = t / b, j = t % b;
    int ub = c;
    if (i > 0) ub = std::min(ub, cell(t - b));
    if (j > 0) ub = std::min(ub, cell(t - 1));
    for (int v = 0; v <= ub; ++v) {
      cell(t) = v;
      rec(t + 1);
    }
    cell(t) = 0;
  };
  rec(0);
}

std::vector<PlanePartition> enumerate_box(const BoxDims& dims, std::int64_t limit, bool force) {
  std::vector<PlanePartition> out;
  for_each_plane_partition(
      dims, [&](const PlanePartition& pp) { out.push_back(pp); }, limit, force);
  return out;
}

CellMarginals::CellMarginals(const DpTables& dp) : dims_(dp.dims) {
  const int a = dims_.a, b = dims_.b, c = dims_.c;
  p_.assign(static_cast<std::size_t>(a) * static_cast<std::size_t>(b) *
                static_cast<std::size_t>(c + 1),
            Rational(0));
  // One forward and one backward sweep serve every cell of a column:
  // fwd[j][s] * bwd[j][s] counts the plane partitions whose column j is s.
  std::vector<BigInt> acc;
  for (int j = 1; j <= b; ++j) {
    acc.assign(static_cast<std::size_t>(a) * static_cast<std::size_t>(c + 1), BigInt(0));
    for (int s = 0; s < dp.states.size(); ++s) {
      const BigInt w = dp.forward[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)] *
                       dp.backward[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)];
      if (w == 0) continue;
      const std::vector<int>& st = dp.states.state(s);
      for (int i = 1; i <= a; ++i)
        acc[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(c + 1) +
            static_cast<std::size_t>(st[static_cast<std::size_t>(i - 1)])] += w;
    }
    for (int i = 1; i <= a; ++i)
      for (int k = 0; k <= c; ++k)
        p_[(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(b) +
            static_cast<std::size_t>(j - 1)) *
               static_cast<std::size_t>(c + 1) +
           static_cast<std::size_t>(k)] =
            Rational(acc[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(c + 1) +
                         static_cast<std::size_t>(k)],
                     dp.total);
  }
}

const Rational& CellMarginals::prob(int i, int j, int k) const {
  if (i < 1 || i > dims_.a || j < 1 || j > dims_.b || k < 0 || k > dims_.c)
    throw OutOfRangeError("marginal query outside the box");
  return p_[(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dims_.b) +
             static_cast<std::size_t>(j - 1)) *
                static_cast<std::size_t>(dims_.c + 1) +
            static_cast<std::size_t>(k)];
}

Rational CellMarginals::expected(int i, int j) const {
  Rational e(0);
  for (int k = 1; k <= dims_.c; ++k) e += Rational(k) * prob(i, j, k);
  return e;
}

std::vector<std::vector<Rational>> expected_entries(const BoxDims& dims) {
  const CellMarginals m(dims);
  std::vector<std::vector<Rational>> e(static_cast<std::size_t>(dims.a));
  for (int i = 1; i <= dims.a; ++i)
    for (int j = 1; j <= dims.b; ++j)
      e[static_cast<std::size_t>(i - 1)].push_back(m.expected(i, j));
  return e;
}

PlanePartition sample_uniform(const DpTables& dp, SplitMix64& rng) {
  const int a = dp.dims.a, b = dp.dims.b;
  std::vector<int> cols;  // chosen state index per column
  cols.reserve(static_cast<std::size_t>(b));
  for (int j = 1; j <= b; ++j) {
    // Completions of columns j..b below the previous column sum to the
    // previous column's backward weight, so the draw bound is already known.
    const BigInt bound =
        j == 1 ? dp.total
               : dp.backward[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(cols.back())];
    const BigInt r = uniform_bigint(rng, bound);
    BigInt acc = 0;
    int chosen = -1;
    for (int s = 0; s < dp.states.size(); ++s) {
      if (j > 1 && !dp.states.dominated(s, cols.back())) continue;
      acc += dp.backward[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)];
      if (acc > r) {
        chosen = s;
        break;
      }
    }
    if (chosen < 0) throw Error("sampling walk exhausted its weights");
    cols.push_back(chosen);
  }
  std::vector<int> e(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), 0);
  for (int j = 1; j <= b; ++j) {
    const std::vector<int>& st = dp.states.state(cols[static_cast<std::size_t>(j - 1)]);
    for (int i = 1; i <= a; ++i)
      e[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(b) +
        static_cast<std::size_t>(j - 1)] = st[static_cast<std::size_t>(i - 1)];
  }
  return PlanePartition(dp.dims, std::move(e));
}

PlanePartition sample_uniform(const BoxDims& dims, std::uint64_t seed, std::uint64_t index) {
  const DpTables dp(dims);
  SplitMix64 rng = split_stream(seed, index);
  return sample_uniform(dp, rng);
}

}  // namespace hexamoment
