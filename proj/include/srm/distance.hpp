#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srm/codes.hpp"
#include "srm/errors.hpp"

namespace srm {

// ---- bounds from the defining set ------------------------------------------

struct StructuralBound {
  bool covered = false;
  bool exact = false;       // equality branch vs plain lower bound
  int64_t value = 0;        // for the kind of the queried code
  bool degenerate = false;  // hypothesis set collapsed or left the M_r range
  std::string branch;
};

struct DistanceBounds {
  int64_t bch = 1;
  bool extended_shift = false;  // +1 applied on top of the punctured run bound
  StructuralBound structural;
};

namespace detail {

inline int64_t longest_cyclic_run(const std::vector<int64_t>& sorted, int64_t N) {
  if (sorted.empty()) return 0;
  if (static_cast<int64_t>(sorted.size()) == N) return N;
  int64_t best = 0, cur = 1;
  for (size_t i = 1; i < sorted.size(); ++i) {
    cur = (sorted[i] == sorted[i - 1] + 1) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  // wrap-around through N-1 -> 0
  if (sorted.front() == 0 && sorted.back() == N - 1) {
    int64_t head = 1;
    while (head < static_cast<int64_t>(sorted.size()) && sorted[head] == head) ++head;
    int64_t tail = 1;
    while (tail < static_cast<int64_t>(sorted.size()) &&
           sorted[sorted.size() - 1 - tail] == N - 1 - tail)
      ++tail;
    best = std::max(best, head + tail);
  }
  return std::max(best, cur);
}

// classify one (r_form, I) description; value reported for the extended code
inline StructuralBound classify_form(const ExponentDomain& dom, int r_form,
                                     const std::vector<int>& I) {
  StructuralBound out;
  const int paper_r = r_form - 1;
  if (paper_r < 0 || paper_r > dom.max_weight() - 2) return out;
  const int qm1 = static_cast<int>(dom.q) - 1;
  const int rho = paper_r / qm1;
  const int s = paper_r % qm1;
  auto pw = [&](int e) {
    int64_t v = 1;
    for (int i = 0; i < e; ++i) v *= dom.q;
    return v;
  };
  auto inter = [&](const std::set<int>& hyp) {
    std::set<int> got;
    for (int k : I)
      if (hyp.count(k)) got.insert(k);
    return got;
  };
  auto degenerate = [&](const std::set<int>& hyp) {
    if (hyp.size() < 2) return true;
    for (int k : hyp)
      if (k > dom.max_imbalance()) return true;
    return false;
  };
  if (rho == dom.n - 1) {
    const std::set<int> hyp{static_cast<int>(dom.q) - 2 - s};
    if (inter(hyp).empty()) {
      out.covered = true;
      out.exact = true;
      out.value = dom.q - s;
      out.branch = "top";
      out.degenerate = false;
    }
    return out;
  }
  if (rho % 2 == 1) {
    const std::set<int> hyp{static_cast<int>(dom.q) - s - 2, static_cast<int>(dom.q) - s};
    const std::set<int> got = inter(hyp);
    if (got.empty()) {
      out.covered = true;
      out.exact = true;
      out.value = (dom.q - s) * pw(dom.n - rho - 1);
      out.branch = "equality";
    } else if (got == std::set<int>{static_cast<int>(dom.q) - s}) {
      out.covered = true;
      out.exact = false;
      out.value = (dom.q * dom.q - dom.q * s - 1) * pw(dom.n - rho - 2);
      out.branch = "lower";
    }
    out.degenerate = out.covered && degenerate(hyp);
    return out;
  }
  const std::set<int> hyp{std::abs(s - 1), s + 1};
  const std::set<int> got = inter(hyp);
  if (got.empty()) {
    out.covered = true;
    out.exact = true;
    out.value = (dom.q - s) * pw(dom.n - rho - 1);
    out.branch = "equality";
  } else if (s != 0 && got == std::set<int>{std::abs(s - 1)}) {
    out.covered = true;
    out.exact = false;
    out.value = (dom.q * dom.q - dom.q * s - 1) * pw(dom.n - rho - 2);
    out.branch = "lower";
  }
  out.degenerate = out.covered && degenerate(hyp);
  return out;
}

}  // namespace detail

inline DistanceBounds distance_bounds(const Code& c) {
  DistanceBounds out;
  const int64_t run = detail::longest_cyclic_run(c.zeros().exps, c.F().order());
  out.bch = run + 1;
  if (c.has_extension_constraint() && c.is_affine_invariant()) {
    out.bch += 1;
    out.extended_shift = true;
  }
  if (c.family() != CodeFamily::raw) {
    const ExponentDomain dom = c.domain();
    for (const auto& [r, I] : detail::parameter_forms(c)) {
      StructuralBound sb = detail::classify_form(dom, r, I);
      if (!sb.covered) continue;
      if (c.kind() == CodeKind::punctured) --sb.value;
      if (!out.structural.covered || (sb.exact && !out.structural.exact) ||
          (sb.exact == out.structural.exact && sb.value > out.structural.value))
        out.structural = sb;
    }
  }
  return out;
}

// ---- search engine -----------------------------------------------------------

struct SearchLimits {
  uint64_t budget = 4'000'000'000ull;  // enumeration leaves / kernel tests
};

struct DistanceReport {
  int64_t lower = 1;
  std::string lower_method = "trivial";
  std::optional<int64_t> upper;
  std::optional<Codeword> witness;
  std::optional<int64_t> exact;
  std::string strategy;
  bool budget_exhausted = false;
};

enum class DistanceStrategy { automatic, exhaustive, support, bz };

namespace detail {

// byte-vector addition over F_q; three kernels depending on the field shape
class RowOps {
 public:
  explicit RowOps(const Field& F)
      : q_(static_cast<int>(F.q())), characteristic_two_(F.p() == 2),
        prime_(F.l() == 1), table_(F.q_add_table()) {
    if (!table_) throw Unsupported("distance search needs q <= 256");
  }

  void add(uint8_t* dst, const uint8_t* src, int len) const {
    if (characteristic_two_) {
      for (int i = 0; i < len; ++i) dst[i] ^= src[i];
    } else if (prime_) {
      const uint8_t q = static_cast<uint8_t>(q_);
      for (int i = 0; i < len; ++i) {
        uint8_t v = static_cast<uint8_t>(dst[i] + src[i]);
        dst[i] = v >= q ? static_cast<uint8_t>(v - q) : v;
      }
    } else {
      for (int i = 0; i < len; ++i) dst[i] = table_[static_cast<size_t>(dst[i]) * q_ + src[i]];
    }
  }

  static int weight(const uint8_t* v, int len) {
    int w = 0;
    for (int i = 0; i < len; ++i) w += (v[i] != 0);
    return w;
  }

 private:
  int q_;
  bool characteristic_two_;
  bool prime_;
  const uint8_t* table_;
};

inline uint64_t level_leaves(int k, int t, int64_t q) {
  // C(k, t) * (q-1)^(t-1), saturating
  long double v = 1.0L;
  for (int i = 1; i <= t; ++i) v = v * (k - i + 1) / i;
  for (int i = 0; i < t - 1; ++i) v *= static_cast<long double>(q - 1);
  if (v > 1.0e18L) return UINT64_MAX;
  return static_cast<uint64_t>(v);
}

// Enumerates every nonzero codeword; fn(buf) is invoked with the word bytes.
template <typename Fn>
void for_each_codeword(const Code& c, Fn&& fn) {
  const Matrix& G = c.generator_matrix();
  const RowOps ops(c.F());
  const int L = G.cols;
  const int64_t q = c.F().q();
  std::vector<uint8_t> buf(static_cast<size_t>(L), 0);
  auto rec = [&](auto&& self, int d, int nz) -> void {
    if (d == G.rows) {
      if (nz) fn(static_cast<const uint8_t*>(buf.data()));
      return;
    }
    self(self, d + 1, nz);
    for (int64_t cval = 1; cval < q; ++cval) {
      ops.add(buf.data(), G.row(d), L);
      self(self, d + 1, nz + 1);
    }
    ops.add(buf.data(), G.row(d), L);  // completes the additive cycle
  };
  rec(rec, 0, 0);
}

// Kernel probe of the parity columns indexed by `support`; returns a
// full-support kernel vector when the columns are dependent.
inline bool support_kernel(const Field& F, const Matrix& parity, const std::vector<int>& support,
                           std::vector<uint8_t>* combo) {
  const int w = static_cast<int>(support.size());
  const int rows = parity.rows;
  // augmented columns: parity part + indicator part
  std::vector<std::vector<uint8_t>> basis;   // reduced, with pivot rows
  std::vector<int> pivot_row;
  for (int ci = 0; ci < w; ++ci) {
    std::vector<uint8_t> col(static_cast<size_t>(rows) + w, 0);
    for (int r = 0; r < rows; ++r) col[r] = parity.at(r, support[ci]);
    col[static_cast<size_t>(rows) + ci] = 1;
    // reduce against current basis
    for (size_t b = 0; b < basis.size(); ++b) {
      const int pr = pivot_row[b];
      if (!col[pr]) continue;
      const int f = F.q_neg(F.q_div(col[pr], basis[b][pr]));
      for (size_t i = 0; i < col.size(); ++i)
        col[i] = static_cast<uint8_t>(F.q_add(col[i], F.q_mul(f, basis[b][i])));
    }
    int pr = -1;
    for (int r = 0; r < rows; ++r)
      if (col[r]) { pr = r; break; }
    if (pr < 0) {
      // dependent: the indicator tail is a kernel combination
      combo->assign(col.begin() + rows, col.end());
      return true;
    }
    basis.push_back(std::move(col));
    pivot_row.push_back(pr);
  }
  return false;
}

}  // namespace detail

// Exact minimum distance (or sound two-sided bounds when the budget runs
// out).  The automatic strategy scans all codewords when q^K is small, routes
// affine-invariant extended codes through their punctured code, then tries a
// bounded ascending support scan and finishes with the information-set
// enumeration; cyclic codes use the one-window schedule whose accumulated
// bound rises by ceil(L(t+1)/k) per completed level.
inline DistanceReport min_distance(const Code& c,
                                   DistanceStrategy strategy = DistanceStrategy::automatic,
                                   SearchLimits limits = {});

namespace detail {

inline DistanceReport exhaustive_scan(const Code& c, SearchLimits limits) {
  DistanceReport rep;
  rep.strategy = "exhaustive";
  const int64_t K = c.dimension();
  long double count = 1.0L;
  for (int64_t i = 0; i < K; ++i) count *= static_cast<long double>(c.F().q());
  if (count > 1.0e18L || static_cast<uint64_t>(count) > limits.budget) {
    rep.budget_exhausted = true;
    rep.lower_method = "trivial";
    return rep;
  }
  const int L = static_cast<int>(c.length());
  int best = L + 1;
  std::vector<uint8_t> bw;
  for_each_codeword(c, [&](const uint8_t* v) {
    const int w = RowOps::weight(v, L);
    if (w < best) {
      best = w;
      bw.assign(v, v + L);
    }
  });
  if (best <= L) {
    rep.upper = best;
    rep.exact = best;
    rep.lower = best;
    rep.lower_method = "exhaustive";
    rep.witness = Codeword{c.kind(), std::move(bw)};
  }
  return rep;
}

// ascending support scan; exact when a dependency appears at weight w after
// all smaller weights were exhausted
inline DistanceReport support_scan(const Code& c, SearchLimits limits, int64_t start_lb) {
  DistanceReport rep;
  rep.strategy = "support";
  rep.lower = std::max<int64_t>(1, start_lb);
  rep.lower_method = rep.lower > 1 ? "bch" : "trivial";
  const Field& F = c.F();
  const Matrix& parity = c.parity_matrix();
  const int L = static_cast<int>(c.length());
  uint64_t spent = 0;
  for (int w = static_cast<int>(rep.lower);; ++w) {
    if (w > L) return rep;  // zero-dimensional codes never get here
    // cost model: combos * w^2 * parity rows
    long double cost = 1.0L;
    for (int i = 1; i <= w; ++i) cost = cost * (L - i + 1) / i;
    cost *= static_cast<long double>(w) * w * std::max(parity.rows, 1);
    if (cost > 1.0e18L || spent + static_cast<uint64_t>(cost) > limits.budget) {
      rep.budget_exhausted = true;
      return rep;
    }
    spent += static_cast<uint64_t>(cost);
    std::vector<int> support(w);
    for (int i = 0; i < w; ++i) support[i] = i;
    std::vector<uint8_t> combo;
    for (;;) {
      if (support_kernel(F, parity, support, &combo)) {
        Codeword x = zero_word(c);
        for (int i = 0; i < w; ++i) x.v[static_cast<size_t>(support[i])] = combo[i];
        // smaller weights were exhausted, so the hit must fill its support
        if (x.weight() != w) throw Error("support scan produced an underweight witness");
        rep.upper = w;
        rep.exact = w;
        rep.lower = w;
        rep.lower_method = "support";
        rep.witness = std::move(x);
        return rep;
      }
      int i = w - 1;
      while (i >= 0 && support[i] == L - w + i) --i;
      if (i < 0) break;
      ++support[i];
      for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
    }
    rep.lower = w + 1;
    rep.lower_method = "support";
  }
}

struct BzSchedule {
  std::vector<Matrix> mats;
  std::vector<int> deficits;
  bool cyclic_window = false;
};

inline BzSchedule bz_schedule(const Code& c) {
  BzSchedule sch;
  const Field& F = c.F();
  Matrix G = c.generator_matrix();  // already in reduced echelon form
  std::vector<int> pivots;
  Matrix G0 = G;
  rref(G0, F, &pivots);
  const int k = G0.rows;
  bool window = c.kind() == CodeKind::punctured && c.zeros().q_closed;
  for (int i = 0; window && i < k; ++i) window = (pivots[static_cast<size_t>(i)] == i);
  sch.mats.push_back(G0);
  sch.deficits.push_back(0);
  sch.cyclic_window = window;
  if (window) return sch;  // the cyclic-shift bound outgrows extra windows

  std::set<int> used(pivots.begin(), pivots.end());
  for (;;) {
    std::vector<int> order;
    for (int col = 0; col < G.cols; ++col)
      if (!used.count(col)) order.push_back(col);
    if (order.empty()) break;
    for (int col = 0; col < G.cols; ++col)
      if (used.count(col)) order.push_back(col);
    Matrix Gi = G;
    std::vector<int> piv;
    rref(Gi, F, &piv, &order);
    int fresh = 0;
    for (int p : piv)
      if (!used.count(p)) ++fresh;
    if (fresh == 0) break;
    for (int p : piv) used.insert(p);
    sch.mats.push_back(std::move(Gi));
    sch.deficits.push_back(k - fresh);
  }
  return sch;
}

inline DistanceReport bz_search(const Code& c, SearchLimits limits, int64_t start_lb,
                                const std::string& start_method) {
  DistanceReport rep;
  rep.strategy = "bz";
  rep.lower = std::max<int64_t>(1, start_lb);
  rep.lower_method = start_method;
  const Field& F = c.F();
  const RowOps ops(F);
  const int64_t q = F.q();
  const BzSchedule sch = bz_schedule(c);
  const int k = sch.mats.front().rows;
  const int L = sch.mats.front().cols;

  int best = L + 1;
  std::vector<uint8_t> bw;
  uint64_t budget_left = limits.budget;

  auto level_bound = [&](int t) -> int64_t {
    // weight forced on anything not enumerated once info weight <= t is done
    if (sch.cyclic_window) return (static_cast<int64_t>(L) * (t + 1) + k - 1) / k;
    int64_t lb = 0;
    for (int deficit : sch.deficits) lb += std::max<int64_t>(0, t + 1 - deficit);
    return lb;
  };

  std::vector<uint8_t> buf(static_cast<size_t>(L), 0);
  for (int t = 1; t <= k; ++t) {
    if (rep.lower >= best) break;  // settled by the previous level
    const uint64_t leaves = level_leaves(k, t, q) * sch.mats.size();
    if (leaves > budget_left) {
      rep.budget_exhausted = true;
      break;
    }
    budget_left -= leaves;
    bool settled = false;
    for (const Matrix& M : sch.mats) {
      // combos of t rows, first coefficient normalized to 1
      auto rec = [&](auto&& self, int depth, int startRow) -> bool {
        for (int i = startRow; i <= k - (t - depth); ++i) {
          const int reps = (depth == 0) ? 1 : static_cast<int>(q) - 1;
          for (int cval = 1; cval <= reps; ++cval) {
            ops.add(buf.data(), M.row(i), L);
            if (depth + 1 == t) {
              const int w = RowOps::weight(buf.data(), L);
              if (w && w < best) {
                best = w;
                bw.assign(buf.begin(), buf.end());
                if (best <= rep.lower) {
                  for (int u = cval; u < static_cast<int>(q); ++u) ops.add(buf.data(), M.row(i), L);
                  return true;
                }
              }
            } else if (self(self, depth + 1, i + 1)) {
              for (int u = cval; u < static_cast<int>(q); ++u) ops.add(buf.data(), M.row(i), L);
              return true;
            }
          }
          for (int cval = reps; cval < static_cast<int>(q); ++cval) ops.add(buf.data(), M.row(i), L);
        }
        return false;
      };
      if (rec(rec, 0, 0)) {
        settled = true;
        break;
      }
    }
    if (settled || best <= rep.lower) break;
    rep.lower = std::max<int64_t>(rep.lower, level_bound(t));
    rep.lower_method = sch.cyclic_window ? "bz-cyclic" : "bz";
    if (rep.lower >= best) break;
  }
  if (best <= L) {
    rep.upper = best;
    rep.witness = Codeword{c.kind(), std::move(bw)};
    if (rep.lower >= best) {
      rep.exact = best;
      rep.lower = best;
    } else {
      rep.lower_method = rep.budget_exhausted ? "bz-partial" : rep.lower_method;
    }
  }
  return rep;
}

}  // namespace detail

inline DistanceReport min_distance(const Code& c, DistanceStrategy strategy,
                                   SearchLimits limits) {
  DistanceReport rep;
  const int64_t K = c.dimension();
  const int64_t L = c.length();
  if (K == 0) {
    rep.strategy = "degenerate";
    rep.lower = L + 1;
    rep.lower_method = "void";
    return rep;
  }
  if (K == L) {
    rep.strategy = "full";
    rep.exact = rep.lower = 1;
    rep.upper = 1;
    rep.lower_method = "full-space";
    Codeword e = zero_word(c);
    e.v[0] = 1;
    rep.witness = std::move(e);
    return rep;
  }

  const DistanceBounds bounds = distance_bounds(c);

  if (strategy == DistanceStrategy::exhaustive) return detail::exhaustive_scan(c, limits);
  if (strategy == DistanceStrategy::support)
    return detail::support_scan(c, limits, bounds.bch);
  if (strategy == DistanceStrategy::bz) return detail::bz_search(c, limits, bounds.bch, "bch");

  // automatic
  long double words = 1.0L;
  for (int64_t i = 0; i < K; ++i) words *= static_cast<long double>(c.F().q());
  if (words <= static_cast<long double>(1 << 24) &&
      static_cast<uint64_t>(words) <= limits.budget)
    return detail::exhaustive_scan(c, limits);

  if (c.has_extension_constraint() && c.is_affine_invariant()) {
    // translation invariance: the extended distance is the punctured one + 1
    DistanceReport inner = min_distance(c.with_kind(CodeKind::punctured), strategy, limits);
    rep = inner;
    rep.strategy = "punctured+1:" + inner.strategy;
    rep.lower = inner.lower + 1;
    if (inner.upper) rep.upper = *inner.upper + 1;
    if (inner.exact) rep.exact = *inner.exact + 1;
    if (inner.witness) {
      Codeword w = extend(c.F(), *inner.witness);
      if (inner.upper && w.weight() != *inner.upper + 1)
        throw Error("extension of a minimum witness did not gain weight");
      rep.witness = std::move(w);
    }
    return rep;
  }

  // bounded ascending support scan first
  SearchLimits support_limits{std::min<uint64_t>(limits.budget / 16, 50'000'000ull)};
  DistanceReport sup = detail::support_scan(c, support_limits, bounds.bch);
  if (sup.exact) return sup;
  const int64_t lb = std::max<int64_t>(bounds.bch, sup.lower);
  return detail::bz_search(c, limits, lb, lb == sup.lower ? sup.lower_method : "bch");
}

// Exactly the nonzero codewords of weight w (deduplicated); the zero word is
// never included and w = 0 returns an empty list.
inline std::vector<Codeword> min_weight_codewords(const Code& c, int w,
                                                  SearchLimits limits = {}) {
  std::vector<Codeword> out;
  if (w <= 0 || c.dimension() == 0) return out;
  const int L = static_cast<int>(c.length());
  const int64_t K = c.dimension();
  long double words = 1.0L;
  for (int64_t i = 0; i < K; ++i) words *= static_cast<long double>(c.F().q());
  if (words <= static_cast<long double>(1 << 24) &&
      static_cast<uint64_t>(words) <= limits.budget) {
    detail::for_each_codeword(c, [&](const uint8_t* v) {
      if (detail::RowOps::weight(v, L) == w)
        out.push_back(Codeword{c.kind(), std::vector<uint8_t>(v, v + L)});
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  // support route: every w-subset of columns, all full-support kernel words
  long double cost = 1.0L;
  for (int i = 1; i <= w; ++i) cost = cost * (L - i + 1) / i;
  cost *= static_cast<long double>(w) * w * std::max(c.parity_matrix().rows, 1);
  if (cost > 1.0e18L || static_cast<uint64_t>(cost) > limits.budget)
    throw BudgetExceeded("weight enumeration exceeds the budget");
  const Field& F = c.F();
  const Matrix& parity = c.parity_matrix();
  std::vector<int> support(w);
  for (int i = 0; i < w; ++i) support[i] = i;
  for (;;) {
    // full kernel of the restricted columns
    Matrix R(parity.rows, w);
    for (int r = 0; r < parity.rows; ++r)
      for (int i = 0; i < w; ++i) R.at(r, i) = parity.at(r, support[i]);
    Matrix Kb = kernel_basis(R, F);
    if (Kb.rows > 0) {
      // enumerate the kernel space, keep full-support vectors
      std::vector<uint8_t> combo(static_cast<size_t>(w), 0);
      const detail::RowOps ops(F);
      auto rec = [&](auto&& self, int d, int nz) -> void {
        if (d == Kb.rows) {
          if (!nz) return;
          bool full = true;
          for (int i = 0; i < w && full; ++i) full = combo[i] != 0;
          if (full) {
            Codeword x = zero_word(c);
            for (int i = 0; i < w; ++i) x.v[static_cast<size_t>(support[i])] = combo[i];
            out.push_back(std::move(x));
          }
          return;
        }
        self(self, d + 1, nz);
        for (int64_t cval = 1; cval < F.q(); ++cval) {
          ops.add(combo.data(), Kb.row(d), w);
          self(self, d + 1, nz + 1);
        }
        ops.add(combo.data(), Kb.row(d), w);
      };
      rec(rec, 0, 0);
    }
    int i = w - 1;
    while (i >= 0 && support[i] == L - w + i) --i;
    if (i < 0) break;
    ++support[i];
    for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace srm
