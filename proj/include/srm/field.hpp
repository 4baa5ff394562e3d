#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srm/errors.hpp"

namespace srm {

// An element of F_{q^n}: zero, or a power of the fixed primitive element
// alpha stored by its discrete log in [0, N-1] with N = q^n - 1.
struct Elt {
  int64_t log = -1;  // -1 encodes the zero element

  constexpr bool is_zero() const { return log < 0; }
  friend constexpr bool operator==(Elt a, Elt b) { return a.log == b.log; }
  friend constexpr bool operator!=(Elt a, Elt b) { return a.log != b.log; }
};

namespace detail {

// ---- polynomial arithmetic over F_p, little-endian coefficient vectors ----

inline std::vector<int> poly_trim(std::vector<int> a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                    const std::vector<int>& f, int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<int64_t> res(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) res[i + j] = (res[i + j] + int64_t(a[i]) * b[j]) % p;
  }
  for (int d = static_cast<int>(res.size()) - 1; d >= n; --d) {
    const int64_t c = res[d];
    if (!c) continue;
    for (int k = 0; k <= n; ++k) {
      int64_t& slot = res[d - n + k];
      slot = ((slot - c * f[k]) % p + p) % p;
    }
  }
  res.resize(std::max<size_t>(1, std::min<size_t>(res.size(), n)));
  std::vector<int> out(res.begin(), res.end());
  return poly_trim(std::move(out));
}

inline std::vector<int> poly_powmod(std::vector<int> base, int64_t e,
                                    const std::vector<int>& f, int64_t p) {
  std::vector<int> result{1};
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

inline std::vector<int64_t> prime_factors(int64_t v) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

inline bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool poly_irreducible(const std::vector<int>& f, int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  const std::vector<int> x = poly_mulmod({1}, {0, 1}, f, p);  // x reduced mod f
  std::vector<int> h = x;
  for (int i = 0; i < n; ++i) {
    std::vector<int> hp{1};
    // h <- h^p
    hp = poly_powmod(h, p, f, p);
    h = std::move(hp);
  }
  if (h != x) return false;
  for (int64_t ell : prime_factors(n)) {
    std::vector<int> g = x;
    for (int64_t i = 0; i < n / ell; ++i) g = poly_powmod(g, p, f, p);
    if (g == x) return false;
  }
  return true;
}

// x has multiplicative order p^deg(f) - 1 mod f?
inline bool poly_x_primitive(const std::vector<int>& f, int64_t p, int64_t group_order) {
  const std::vector<int> one{1};
  if (poly_powmod({0, 1}, group_order, f, p) != one) return false;
  for (int64_t ell : prime_factors(group_order)) {
    if (poly_powmod({0, 1}, group_order / ell, f, p) == one) return false;
  }
  return true;
}

// Conway polynomials, little-endian; computed offline from the definition
// (lex-least monic primitive polynomial compatible with every proper
// subfield, under the sign-adjusted word order).
inline const std::vector<int>* conway_polynomial(int64_t p, int deg) {
  struct Entry { int p; int deg; std::vector<int> coeffs; };
  static const std::vector<Entry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
      {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {7, 4, {3, 4, 5, 0, 1}},
  };
  for (const auto& e : table)
    if (e.p == p && e.deg == deg) return &e.coeffs;
  return nullptr;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Arithmetic context for the tower F_p <= F_q <= F_{q^2} <= F_{q^n}, q = p^l,
// n = 2m even.  Elements of the top field are handled through discrete-log /
// antilog tables relative to a primitive element alpha; elements of the base
// field F_q additionally get small integer labels 0..q-1 so that matrices and
// codewords can be stored as byte arrays.
//
// Immutable after construction; every operation is a pure function of
// (context, inputs), so instances can be shared freely across threads.
class Field {
 public:
  // Builds the context.  When no modulus is given, a canonical irreducible of
  // degree l*n over F_p is chosen: the Conway polynomial when tabulated,
  // otherwise the least monic primitive polynomial in base-p integer order
  // (most significant coefficient first), so that runs are reproducible.
  static FieldPtr build(int64_t p, int l, int n,
                        const std::optional<std::vector<int>>& modulus = std::nullopt) {
    return FieldPtr(new Field(p, l, n, modulus));
  }

  int64_t p() const { return p_; }
  int l() const { return l_; }
  int n() const { return n_; }
  int m() const { return n_ / 2; }
  int64_t q() const { return q_; }
  int64_t q_squared() const { return q_ * q_; }
  int64_t size() const { return qn_; }        // q^n
  int64_t order() const { return N_; }        // N = q^n - 1
  const std::vector<int>& modulus() const { return modulus_; }

  // "GF(p^l)^n/<modulus as base-p integer, hex>"
  std::string descriptor() const {
    uint64_t packed = 0;
    for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i)
      packed = packed * static_cast<uint64_t>(p_) + static_cast<uint64_t>(modulus_[i]);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "GF(%lld^%d)^%d/%llx", static_cast<long long>(p_), l_, n_,
                  static_cast<unsigned long long>(packed));
    return buf;
  }

  Elt zero() const { return Elt{-1}; }
  Elt one() const { return Elt{0}; }
  Elt alpha() const { return Elt{1 % N_}; }
  Elt alpha_pow(int64_t e) const { return Elt{mod_n(e)}; }
  Elt gamma() const { return gamma_; }  // canonical generator of F_q^*

  int64_t dlog(Elt a) const {
    if (a.is_zero()) throw DivisionByZero("dlog of zero");
    return a.log;
  }

  Elt mul(Elt a, Elt b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return Elt{(a.log + b.log) % N_};
  }
  Elt inv(Elt a) const {
    if (a.is_zero()) throw DivisionByZero("inverse of zero");
    return Elt{(N_ - a.log) % N_};
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt neg(Elt a) const {
    if (a.is_zero() || p_ == 2) return a;
    return Elt{(a.log + N_ / 2) % N_};  // -1 = alpha^(N/2) in odd characteristic
  }
  Elt add(Elt a, Elt b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    uint32_t va = antilog_[a.log], vb = antilog_[b.log];
    uint32_t out = 0, mult = 1;
    for (int i = 0; i < ln_; ++i) {
      const uint32_t da = va % p_, db = vb % p_;
      uint32_t s = da + db;
      if (s >= static_cast<uint32_t>(p_)) s -= static_cast<uint32_t>(p_);
      out += s * mult;
      mult *= static_cast<uint32_t>(p_);
      va /= static_cast<uint32_t>(p_);
      vb /= static_cast<uint32_t>(p_);
    }
    return Elt{log_[out]};
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  // a^k with field semantics; 0^0 = 1 by the power-sum convention.
  Elt pow(Elt a, int64_t k) const {
    if (a.is_zero()) {
      if (k == 0) return one();
      if (k < 0) throw DivisionByZero("negative power of zero");
      return zero();
    }
    int64_t e = k % N_;
    if (e < 0) e += N_;
    return Elt{mul_mod(a.log, e)};
  }

  // a -> a^(q^power); power may be negative (inverse automorphism).
  Elt frobenius(Elt a, int power) const {
    if (a.is_zero()) return a;
    int pw = power % n_;
    if (pw < 0) pw += n_;
    int64_t e = 1;
    for (int i = 0; i < pw; ++i) e = mul_mod(e, q_ % N_);
    return Elt{mul_mod(a.log, e)};
  }

  // a in F_{q^degree}?  (degree 1 or 2; zero belongs to every subfield)
  bool in_subfield(Elt a, int degree) const {
    if (degree != 1 && degree != 2) throw RangeError("subfield degree must be 1 or 2");
    if (a.is_zero()) return true;
    const int64_t sub_order = (degree == 1 ? q_ : q_ * q_) - 1;
    return mul_mod(a.log, sub_order % N_) == 0;
  }

  // ---- F_q labels: 0 is zero, label a = sum a_i gamma^i over base-p digits ----

  Elt embed(int label) const { return embed_.at(static_cast<size_t>(label)); }
  int label(Elt a) const {
    if (a.is_zero()) return 0;
    auto it = label_of_.find(a.log);
    if (it == label_of_.end()) throw Error("element does not lie in the base field F_q");
    return it->second;
  }
  bool has_small_tables() const { return small_tables_; }

  int q_add(int a, int b) const {
    if (small_tables_) return qadd_[static_cast<size_t>(a) * q_ + b];
    return label(add(embed(a), embed(b)));
  }
  int q_mul(int a, int b) const {
    if (small_tables_) return qmul_[static_cast<size_t>(a) * q_ + b];
    return label(mul(embed(a), embed(b)));
  }
  int q_neg(int a) const {
    if (small_tables_) return qneg_[static_cast<size_t>(a)];
    return label(neg(embed(a)));
  }
  int q_sub(int a, int b) const { return q_add(a, q_neg(b)); }
  int q_inv(int a) const {
    if (a == 0) throw DivisionByZero("inverse of zero label");
    if (small_tables_) return qinv_[static_cast<size_t>(a)];
    return label(inv(embed(a)));
  }
  int q_div(int a, int b) const { return q_mul(a, q_inv(b)); }

  // Coordinates of a over the F_q-basis {1, alpha, ..., alpha^(n-1)},
  // written as labels into out[0..n-1].
  void coords(Elt a, uint8_t* out) const {
    std::vector<int> v(ln_, 0);
    if (!a.is_zero()) {
      uint32_t va = antilog_[a.log];
      for (int i = 0; i < ln_; ++i) {
        v[i] = static_cast<int>(va % p_);
        va /= static_cast<uint32_t>(p_);
      }
    }
    for (int i = 0; i < n_; ++i) {
      int lab = 0, mult = 1;
      for (int j = 0; j < l_; ++j) {
        int64_t acc = 0;
        const uint8_t* row = &coords_mat_[(static_cast<size_t>(i) * l_ + j) * ln_];
        for (int t = 0; t < ln_; ++t) acc += int64_t(row[t]) * v[t];
        lab += static_cast<int>(acc % p_) * mult;
        mult *= static_cast<int>(p_);
      }
      out[i] = static_cast<uint8_t>(lab);
    }
  }
  std::vector<uint8_t> coords(Elt a) const {
    std::vector<uint8_t> out(n_);
    coords(a, out.data());
    return out;
  }
  Elt from_coords(const uint8_t* c) const {
    Elt acc = zero();
    for (int i = 0; i < n_; ++i)
      if (c[i]) acc = add(acc, mul(embed(c[i]), alpha_pow(i)));
    return acc;
  }

  // Raw label-addition table (q x q, row-major), or nullptr when q > 256.
  const uint8_t* q_add_table() const { return small_tables_ ? qadd_.data() : nullptr; }

  // Internal consistency handle used by the determinism test.
  const std::vector<uint32_t>& antilog_table() const { return antilog_; }

 private:
  Field(int64_t p, int l, int n, const std::optional<std::vector<int>>& modulus) {
    if (!detail::is_prime(p)) throw NonPrime("p must be prime");
    if (l < 1) throw RangeError("l must be positive");
    if (n < 2 || n % 2 != 0) throw OddExtension("extension degree n must be even and positive");
    p_ = p;
    l_ = l;
    n_ = n;
    ln_ = l * n;
    q_ = 1;
    for (int i = 0; i < l; ++i) {
      q_ *= p;
      if (q_ > (int64_t(1) << 26)) throw FieldTooLarge("q^n exceeds 2^26");
    }
    qn_ = 1;
    for (int i = 0; i < n; ++i) {
      qn_ *= q_;
      if (qn_ > (int64_t(1) << 26)) throw FieldTooLarge("q^n exceeds 2^26");
    }
    N_ = qn_ - 1;

    if (modulus) {
      modulus_ = normalize_modulus(*modulus);
      if (!detail::poly_irreducible(modulus_, p_))
        throw ReducibleModulus("supplied modulus is not irreducible over F_p");
    } else {
      modulus_ = canonical_modulus();
    }

    build_tables();   // also detects a non-primitive x for a user modulus
    build_labels();
    build_coords();
  }

  std::vector<int> normalize_modulus(std::vector<int> f) const {
    f = detail::poly_trim(std::move(f));
    if (static_cast<int>(f.size()) - 1 != ln_)
      throw ReducibleModulus("modulus degree must be l*n");
    for (int& c : f) c = static_cast<int>(((c % p_) + p_) % p_);
    if (f.back() == 0) throw ReducibleModulus("modulus degree must be l*n");
    if (f.back() != 1) {
      // make monic
      int64_t lead = f.back(), inv = 1;
      for (int64_t t = 1; t < p_; ++t)
        if (lead * t % p_ == 1) inv = t;
      for (int& c : f) c = static_cast<int>(c * inv % p_);
    }
    return f;
  }

  std::vector<int> canonical_modulus() const {
    if (const auto* cw = detail::conway_polynomial(p_, ln_)) return *cw;
    // least monic primitive polynomial in base-p integer order
    int64_t pd = 1;
    for (int i = 0; i < ln_; ++i) pd *= p_;
    for (int64_t v = pd; v < 2 * pd; ++v) {
      std::vector<int> f(ln_ + 1);
      int64_t t = v;
      for (int i = 0; i <= ln_; ++i) {
        f[i] = static_cast<int>(t % p_);
        t /= p_;
      }
      if (f[0] == 0) continue;
      if (!detail::poly_irreducible(f, p_)) continue;
      if (!detail::poly_x_primitive(f, p_, N_)) continue;
      return f;
    }
    throw Error("no primitive polynomial found");  // unreachable
  }

  void build_tables() {
    antilog_.assign(static_cast<size_t>(N_), 0);
    log_.assign(static_cast<size_t>(qn_), -1);
    std::vector<uint32_t> cur(ln_, 0);
    cur[0] = 1;
    for (int64_t k = 0; k < N_; ++k) {
      uint32_t packed = 0, mult = 1;
      for (int i = 0; i < ln_; ++i) {
        packed += cur[i] * mult;
        mult *= static_cast<uint32_t>(p_);
      }
      if (packed == 1 && k > 0)
        throw NonPrimitiveModulus("modulus root is not a primitive element");
      antilog_[k] = packed;
      log_[packed] = static_cast<int32_t>(k);
      // cur <- cur * x mod modulus
      const uint32_t spill = cur[ln_ - 1];
      for (int i = ln_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (spill) {
        for (int i = 0; i < ln_; ++i) {
          int64_t c = int64_t(cur[i]) - int64_t(spill) * modulus_[i];
          cur[i] = static_cast<uint32_t>(((c % p_) + p_) % p_);
        }
      }
    }
  }

  void build_labels() {
    gamma_ = (q_ == 2) ? one() : Elt{N_ / (q_ - 1)};
    embed_.assign(static_cast<size_t>(q_), zero());
    for (int64_t lab = 1; lab < q_; ++lab) {
      Elt acc = zero();
      int64_t t = lab;
      Elt gpow = one();
      for (int j = 0; j < l_; ++j) {
        const int dig = static_cast<int>(t % p_);
        t /= p_;
        if (dig) {
          Elt term = gpow;
          for (int c = 1; c < dig; ++c) term = add(term, gpow);
          acc = add(acc, term);
        }
        gpow = mul(gpow, gamma_);
      }
      embed_[lab] = acc;
      label_of_[acc.log] = static_cast<int>(lab);
    }
    small_tables_ = q_ <= 256;
    if (small_tables_) {
      const size_t q = static_cast<size_t>(q_);
      qadd_.assign(q * q, 0);
      qmul_.assign(q * q, 0);
      qneg_.assign(q, 0);
      qinv_.assign(q, 0);
      for (size_t a = 0; a < q; ++a) {
        qneg_[a] = static_cast<uint8_t>(raw_label(neg(embed_[a])));
        if (a) qinv_[a] = static_cast<uint8_t>(raw_label(inv(embed_[a])));
        for (size_t b = 0; b < q; ++b) {
          qadd_[a * q + b] = static_cast<uint8_t>(raw_label(add(embed_[a], embed_[b])));
          qmul_[a * q + b] = static_cast<uint8_t>(raw_label(mul(embed_[a], embed_[b])));
        }
      }
    }
  }

  int raw_label(Elt a) const {
    if (a.is_zero()) return 0;
    return label_of_.at(a.log);
  }

  void build_coords() {
    // basis-change from the polynomial basis to {alpha^i gamma^j}, inverted
    const int d = ln_;
    std::vector<int> mat(static_cast<size_t>(d) * 2 * d, 0);  // [A | I]
    auto at = [&](int r, int c) -> int& { return mat[static_cast<size_t>(r) * 2 * d + c]; };
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < l_; ++j) {
        Elt u = mul(alpha_pow(i), pow(gamma_, j));
        uint32_t v = u.is_zero() ? 0 : antilog_[u.log];
        for (int t = 0; t < d; ++t) {
          at(t, i * l_ + j) = static_cast<int>(v % p_);
          v /= static_cast<uint32_t>(p_);
        }
      }
    }
    for (int t = 0; t < d; ++t) at(t, d + t) = 1;
    // Gauss-Jordan over F_p
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
      int pivot = -1;
      for (int r = row; r < d; ++r)
        if (at(r, col)) { pivot = r; break; }
      if (pivot < 0) continue;
      if (pivot != row)
        for (int c = 0; c < 2 * d; ++c) std::swap(at(pivot, c), at(row, c));
      int64_t pv = at(row, col), pinv = 1;
      for (int64_t t = 1; t < p_; ++t)
        if (pv * t % p_ == 1) pinv = t;
      for (int c = 0; c < 2 * d; ++c) at(row, c) = static_cast<int>(at(row, c) * pinv % p_);
      for (int r = 0; r < d; ++r) {
        if (r == row || !at(r, col)) continue;
        const int64_t factor = at(r, col);
        for (int c = 0; c < 2 * d; ++c)
          at(r, c) = static_cast<int>((((at(r, c) - factor * at(row, c)) % p_) + p_) % p_);
      }
      ++row;
    }
    if (row != d) throw Error("basis change matrix is singular");
    coords_mat_.assign(static_cast<size_t>(d) * d, 0);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) coords_mat_[static_cast<size_t>(r) * d + c] =
          static_cast<uint8_t>(at(r, d + c));
  }

  int64_t mod_n(int64_t e) const {
    e %= N_;
    return e < 0 ? e + N_ : e;
  }
  int64_t mul_mod(int64_t a, int64_t b) const { return (a * b) % N_; }  // inputs < 2^26

  int64_t p_ = 0, q_ = 0, qn_ = 0, N_ = 0;
  int l_ = 0, n_ = 0, ln_ = 0;
  std::vector<int> modulus_;
  std::vector<uint32_t> antilog_;
  std::vector<int32_t> log_;
  Elt gamma_;
  std::vector<Elt> embed_;
  std::unordered_map<int64_t, int> label_of_;
  std::vector<uint8_t> qadd_, qmul_, qneg_, qinv_;
  std::vector<uint8_t> coords_mat_;
  bool small_tables_ = false;
};

}  // namespace srm
