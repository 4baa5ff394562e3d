#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "srm/errors.hpp"

namespace srm {

// Combinatorics on exponents u in [0, q^n - 1] for a fixed base q and even
// extension degree n = 2m: base-q digits, digit sums, the digitwise partial
// order, cyclotomic cosets mod N = q^n - 1, and the zero-set families that
// define the Reed-Muller and sandwiched codes.  Everything here is integer
// arithmetic, independent of any field modulus; q only needs to be >= 2
// (prime powers are fine, the digits never look inside F_q).
struct ExponentDomain {
  int64_t q = 0;
  int n = 0;
  int m = 0;
  int64_t qn = 0;  // q^n
  int64_t N = 0;   // q^n - 1

  static ExponentDomain make(int64_t q, int n) {
    if (q < 2) throw RangeError("q must be at least 2");
    if (n < 2 || n % 2 != 0) throw OddExtension("n must be even and positive");
    ExponentDomain d;
    d.q = q;
    d.n = n;
    d.m = n / 2;
    d.qn = 1;
    for (int i = 0; i < n; ++i) {
      d.qn *= q;
      if (d.qn > (int64_t(1) << 40)) throw RangeError("q^n too large");
    }
    d.N = d.qn - 1;
    return d;
  }

  int max_weight() const { return n * static_cast<int>(q - 1); }  // n(q-1)
  int max_imbalance() const { return m * static_cast<int>(q - 1); }  // m(q-1)

  void check_u(int64_t u) const {
    if (u < 0 || u > qn - 1) throw OutOfRange("exponent outside [0, q^n - 1]");
  }

  int digit(int64_t u, int i) const {
    for (int k = 0; k < i; ++k) u /= q;
    return static_cast<int>(u % q);
  }
  std::vector<int> digits(int64_t u) const {
    check_u(u);
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = static_cast<int>(u % q);
      u /= q;
    }
    return d;
  }

  // wt_q(u): sum of base-q digits.
  int q_weight(int64_t u) const {
    check_u(u);
    int w = 0;
    while (u) {
      w += static_cast<int>(u % q);
      u /= q;
    }
    return w;
  }
  // O(u), E(u): digit sums over odd / even positions.
  int odd_sum(int64_t u) const {
    check_u(u);
    int s = 0;
    for (int i = 0; u; ++i, u /= q)
      if (i & 1) s += static_cast<int>(u % q);
    return s;
  }
  int even_sum(int64_t u) const {
    check_u(u);
    int s = 0;
    for (int i = 0; u; ++i, u /= q)
      if (!(i & 1)) s += static_cast<int>(u % q);
    return s;
  }
  int imbalance(int64_t u) const { return std::abs(odd_sum(u) - even_sum(u)); }

  // s precedes t digitwise (s_i <= t_i for all i).
  bool digit_leq(int64_t s, int64_t t) const {
    check_u(s);
    check_u(t);
    while (s || t) {
      if (s % q > t % q) return false;
      s /= q;
      t /= q;
    }
    return true;
  }

  std::vector<int64_t> cyclotomic_coset(int64_t u) const {
    if (u < 0 || u > N - 1) throw OutOfRange("coset representative outside [0, N-1]");
    std::vector<int64_t> orbit;
    int64_t s = u;
    do {
      orbit.push_back(s);
      s = s * q % N;
    } while (s != u);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
  }
};

// A set of exponents mod N, always kept sorted and duplicate-free.
// `with_zero` tags the extension constraint (index 0 of an extended code's
// defining set) separately from any exponent-0 entry coming from a zero of
// the punctured code.
struct ExponentSet {
  std::vector<int64_t> exps;
  bool q_closed = false;
  bool with_zero = false;

  size_t size() const { return exps.size(); }
  bool contains(int64_t u) const {
    return std::binary_search(exps.begin(), exps.end(), u);
  }
  void normalize() {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  }

  // Representatives in [0, q^n - 1] for the Delta-closure test: zeros keep
  // their u in [1, N], the extension constraint contributes 0.
  std::vector<int64_t> u_representatives(const ExponentDomain& dom) const {
    std::vector<int64_t> reps;
    if (with_zero) reps.push_back(0);
    for (int64_t s : exps) reps.push_back(s == 0 ? dom.N : s);
    std::sort(reps.begin(), reps.end());
    return reps;
  }
};

namespace detail {

// Binomial coefficient with the usual zero conventions for out-of-range
// arguments; values stay well inside int64 at desk scale.
inline int64_t binom(int64_t a, int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 acc = 1;
  for (int64_t i = 1; i <= b; ++i) {
    acc = acc * static_cast<unsigned __int128>(a - b + i) / static_cast<unsigned __int128>(i);
  }
  return static_cast<int64_t>(acc);
}

// Number of ways to write `total` as an ordered sum of `slots` digits in
// [0, cap]; inclusion-exclusion over the digits that overflow.
inline int64_t bounded_compositions(int slots, int64_t total, int64_t cap) {
  if (total < 0) return 0;
  int64_t sum = 0;
  for (int i = 0; i <= slots; ++i) {
    const int64_t rest = total - i * (cap + 1);
    const int64_t term = binom(slots, i) * binom(rest + slots - 1, rest);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace detail

// M_r: the imbalance values that can occur alongside q-weight n(q-1)-r;
// even values when r is even, odd when r is odd.
inline std::vector<int> imbalance_values(const ExponentDomain& dom, int r) {
  if (r < 0 || r > dom.max_weight()) throw RangeError("r outside [0, n(q-1)]");
  std::vector<int> out;
  for (int k = (r % 2 == 0) ? 0 : 1; k <= dom.max_imbalance(); k += 2) out.push_back(k);
  return out;
}

// Z_r = exponents of { alpha^u : 0 < u <= q^n - 1, wt_q(u) <= n(q-1)-r-1 },
// reduced mod N.  Defined for -1 <= r < n(q-1).
inline ExponentSet rm_zero_exponents(const ExponentDomain& dom, int r) {
  if (r < -1 || r >= dom.max_weight()) throw RangeError("r outside [-1, n(q-1))");
  const int bound = dom.max_weight() - r - 1;
  ExponentSet out;
  out.q_closed = true;
  for (int64_t u = 1; u <= dom.qn - 1; ++u)
    if (dom.q_weight(u) <= bound) out.exps.push_back(u % dom.N);
  out.normalize();
  return out;
}

// Theta^{(r)}_k: exponents of { alpha^u : 0 <= u <= q^n - 1,
// wt_q(u) = n(q-1)-r, |O(u)-E(u)| = k }, reduced mod N.  Empty when the
// parity of k does not match r.
inline ExponentSet imbalance_shell(const ExponentDomain& dom, int r, int k) {
  if (r < 0 || r > dom.max_weight()) throw RangeError("r outside [0, n(q-1)]");
  const int w = dom.max_weight() - r;
  ExponentSet out;
  out.q_closed = true;
  if (k < 0 || k > dom.max_imbalance() || (k - w) % 2 != 0) return out;
  for (int64_t u = 0; u <= dom.qn - 1; ++u)
    if (dom.q_weight(u) == w && dom.imbalance(u) == k) out.exps.push_back(u % dom.N);
  out.normalize();
  return out;
}

// |Theta^{(r)}_k| by the closed-form product formula (the enumeration in
// imbalance_shell is the oracle this is tested against).
inline int64_t imbalance_shell_size(const ExponentDomain& dom, int r, int k) {
  if (r < 0 || r > dom.max_weight()) throw RangeError("r outside [0, n(q-1)]");
  const int w = dom.max_weight() - r;
  if (k < 0 || k > dom.max_imbalance() || (k - w) % 2 != 0) return 0;
  const int64_t lo = (static_cast<int64_t>(w) - k) / 2;
  const int64_t hi = (static_cast<int64_t>(w) + k) / 2;
  const int64_t ways =
      detail::bounded_compositions(dom.m, lo, dom.q - 1) *
      detail::bounded_compositions(dom.m, hi, dom.q - 1);
  return (k == 0) ? ways : 2 * ways;
}

// Z_{r,I}: zero-set exponents of the sandwiched code.  Both defining
// expressions are evaluated and must agree.
inline ExponentSet sandwich_zero_exponents(const ExponentDomain& dom, int r,
                                           const std::vector<int>& I) {
  if (r < 0 || r >= dom.max_weight()) throw RangeError("r outside [0, n(q-1))");
  const std::vector<int> mr = imbalance_values(dom, r);
  std::vector<int> Inorm(I);
  std::sort(Inorm.begin(), Inorm.end());
  Inorm.erase(std::unique(Inorm.begin(), Inorm.end()), Inorm.end());
  for (int k : Inorm)
    if (!std::binary_search(mr.begin(), mr.end(), k))
      throw InvalidI("I is not a subset of M_r");

  // route 1: Z_{r-1} minus the selected shells
  ExponentSet zr1 = rm_zero_exponents(dom, r - 1);
  std::vector<int64_t> removed;
  for (int k : Inorm) {
    const ExponentSet th = imbalance_shell(dom, r, k);
    removed.insert(removed.end(), th.exps.begin(), th.exps.end());
  }
  std::sort(removed.begin(), removed.end());
  std::vector<int64_t> route1;
  std::set_difference(zr1.exps.begin(), zr1.exps.end(), removed.begin(), removed.end(),
                      std::back_inserter(route1));

  // route 2: Z_r plus the complementary shells
  ExponentSet out = rm_zero_exponents(dom, r);
  for (int k : mr) {
    if (std::binary_search(Inorm.begin(), Inorm.end(), k)) continue;
    const ExponentSet th = imbalance_shell(dom, r, k);
    out.exps.insert(out.exps.end(), th.exps.begin(), th.exps.end());
  }
  out.normalize();
  if (out.exps != route1)
    throw Error("the two defining expressions for Z_{r,I} disagree");
  out.q_closed = true;
  return out;
}

// Delta(T): closure of T under taking digitwise-smaller exponents.
// T lives in [0, q^n - 1] (plain representatives, caller's convention).
inline std::vector<int64_t> downset_closure(const ExponentDomain& dom,
                                            const std::vector<int64_t>& T) {
  std::vector<int64_t> out;
  for (int64_t t : T) {
    dom.check_u(t);
    // enumerate all s with s_i <= t_i via an odometer over the digits
    const std::vector<int> td = dom.digits(t);
    std::vector<int> s(dom.n, 0);
    for (;;) {
      int64_t v = 0;
      for (int i = dom.n - 1; i >= 0; --i) v = v * dom.q + s[i];
      out.push_back(v);
      int i = 0;
      while (i < dom.n && s[i] == td[i]) s[i++] = 0;
      if (i == dom.n) break;
      ++s[i];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_downset_closed(const ExponentDomain& dom, const std::vector<int64_t>& T) {
  std::vector<int64_t> sorted(T);
  std::sort(sorted.begin(), sorted.end());
  for (int64_t t : sorted) {
    dom.check_u(t);
    const std::vector<int> td = dom.digits(t);
    std::vector<int> s(dom.n, 0);
    for (;;) {
      int64_t v = 0;
      for (int i = dom.n - 1; i >= 0; --i) v = v * dom.q + s[i];
      if (!std::binary_search(sorted.begin(), sorted.end(), v)) return false;
      int i = 0;
      while (i < dom.n && s[i] == td[i]) s[i++] = 0;
      if (i == dom.n) break;
      ++s[i];
    }
  }
  return true;
}

// dim R_q(r,n) by the alternating-sum formula; r = -1 gives the zero code
// and r = n(q-1) the full space.
inline int64_t rm_dimension(const ExponentDomain& dom, int r) {
  if (r < -1 || r > dom.max_weight()) throw RangeError("r outside [-1, n(q-1)]");
  if (r < 0) return 0;
  int64_t sum = 0;
  for (int i = 0; i <= dom.n; ++i) {
    const int64_t t = r - i * dom.q;
    const int64_t term = detail::binom(dom.n, i) * detail::binom(t + dom.n, t);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

// dim C_q(r,I,n), computed both ways (down from R_q(r,n), up from
// R_q(r-1,n)); the two must agree.
inline int64_t sandwich_dimension(const ExponentDomain& dom, int r, const std::vector<int>& I) {
  if (r < 0 || r >= dom.max_weight()) throw RangeError("r outside [0, n(q-1))");
  const std::vector<int> mr = imbalance_values(dom, r);
  std::vector<int> Inorm(I);
  std::sort(Inorm.begin(), Inorm.end());
  Inorm.erase(std::unique(Inorm.begin(), Inorm.end()), Inorm.end());
  for (int k : Inorm)
    if (!std::binary_search(mr.begin(), mr.end(), k))
      throw InvalidI("I is not a subset of M_r");
  int64_t down = rm_dimension(dom, r);
  int64_t up = rm_dimension(dom, r - 1);
  for (int k : mr) {
    if (std::binary_search(Inorm.begin(), Inorm.end(), k))
      up += imbalance_shell_size(dom, r, k);
    else
      down -= imbalance_shell_size(dom, r, k);
  }
  if (down != up) throw Error("sandwich dimension routes disagree");
  return down;
}

// Gaussian binomial coefficient [D choose d]_b: the number of d-dimensional
// subspaces of an D-dimensional space over a field with b elements.
inline int64_t gaussian_binomial(int D, int d, int64_t b) {
  if (d < 0 || d > D) return 0;
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    unsigned __int128 bp = 1;
    for (int t = 0; t < D - i; ++t) bp *= static_cast<unsigned __int128>(b);
    unsigned __int128 bq = 1;
    for (int t = 0; t < d - i; ++t) bq *= static_cast<unsigned __int128>(b);
    num *= bp - 1;
    den *= bq - 1;
  }
  return static_cast<int64_t>(num / den);
}

}  // namespace srm
