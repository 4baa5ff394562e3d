#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "srm/errors.hpp"
#include "srm/exponents.hpp"
#include "srm/field.hpp"
#include "srm/linalg.hpp"

namespace srm {

enum class CodeKind { punctured, extended };
enum class CodeFamily { rm, sandwich, raw };

// A word over F_q.  Punctured words have length N with position j carrying
// the coefficient of (alpha^j); extended words append the position labelled
// "0" (the zero field element) as the last coordinate, so generator matrices
// keep it in the final column.
struct Codeword {
  CodeKind kind = CodeKind::punctured;
  std::vector<uint8_t> v;

  int length() const { return static_cast<int>(v.size()); }
  int weight() const {
    int w = 0;
    for (uint8_t c : v) w += (c != 0);
    return w;
  }
  bool is_zero() const { return weight() == 0; }
  bool operator==(const Codeword& o) const { return kind == o.kind && v == o.v; }
  bool operator<(const Codeword& o) const { return v < o.v; }
};

// rho_s applied to a word: sum of x_g g^s over the support.  For extended
// words the attached position contributes x_0 exactly when s = 0 (0^0 = 1).
inline Elt power_sum(const Field& F, const Codeword& x, int64_t s) {
  const int64_t N = F.order();
  const int np = (x.kind == CodeKind::extended) ? x.length() - 1 : x.length();
  if (np != N) throw LengthMismatch("word length does not match the field");
  const int64_t sm = ((s % N) + N) % N;
  Elt acc = F.zero();
  for (int j = 0; j < np; ++j) {
    if (!x.v[j]) continue;
    const Elt coef = F.embed(x.v[j]);
    acc = F.add(acc, Elt{(coef.log + int64_t(j) * sm) % N});
  }
  if (x.kind == CodeKind::extended && s == 0 && x.v[np])
    acc = F.add(acc, F.embed(x.v[np]));
  return acc;
}

// A (punctured or extended) cyclic code handle: parameters plus the zero-set
// exponents, with parity/generator matrices built on first use.  Immutable
// once constructed; matrix construction is internally synchronized.
class Code {
 public:
  // R_q(r, n): -1 <= r <= n(q-1).  The top value is the full space, which is
  // not an extended cyclic code and comes back with family raw.
  static Code rm(FieldPtr f, CodeKind kind, int r) {
    const ExponentDomain dom = domain_of(*f);
    if (r < -1 || r > dom.max_weight()) throw RangeError("r outside [-1, n(q-1)]");
    if (r == dom.max_weight()) return full_space(std::move(f), kind);
    Code c(std::move(f), kind, CodeFamily::rm, r, {});
    c.I_ = imbalance_values(dom, std::max(r, 0));
    if (r < 0) c.I_.clear();
    c.zeros_ = rm_zero_exponents(dom, r);
    return c;
  }

  // C_q(r, I, n): 0 <= r <= n(q-1); the boundary r = n(q-1) resolves to
  // R_q(n(q-1)-1, n) when 0 is not in I and to the full space otherwise.
  static Code sandwich(FieldPtr f, CodeKind kind, int r, std::vector<int> I) {
    const ExponentDomain dom = domain_of(*f);
    if (r < 0 || r > dom.max_weight()) throw RangeError("r outside [0, n(q-1)]");
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    if (r == dom.max_weight()) {
      const bool has_zero = std::binary_search(I.begin(), I.end(), 0);
      if (has_zero) return full_space(std::move(f), kind);
      return rm(std::move(f), kind, dom.max_weight() - 1);
    }
    Code c(f, kind, CodeFamily::sandwich, r, I);
    c.zeros_ = sandwich_zero_exponents(dom, r, I);
    return c;
  }

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  ExponentDomain domain() const { return domain_of(*field_); }
  CodeKind kind() const { return kind_; }
  CodeFamily family() const { return family_; }
  int r() const { return r_; }
  const std::vector<int>& I() const { return I_; }
  int64_t length() const { return F().order() + (kind_ == CodeKind::extended ? 1 : 0); }
  bool has_extension_constraint() const {
    return kind_ == CodeKind::extended && family_ != CodeFamily::raw;
  }
  int64_t dimension() const {
    return length() - static_cast<int64_t>(zeros_.size()) - (has_extension_constraint() ? 1 : 0);
  }

  const ExponentSet& zeros() const { return zeros_; }

  // Defining set as exponents, including 0 for extended codes.
  std::vector<int64_t> defining_set() const {
    std::vector<int64_t> out = zeros_.exps;
    if (has_extension_constraint() && !zeros_.contains(0)) out.insert(out.begin(), 0);
    return out;
  }

  // Representatives in [0, q^n - 1] used by the affine-invariance test.
  std::vector<int64_t> defining_u_representatives() const {
    ExponentSet t = zeros_;
    t.with_zero = has_extension_constraint();
    return t.u_representatives(domain());
  }

  bool is_affine_invariant() const {
    if (kind_ != CodeKind::extended) return false;
    return is_downset_closed(domain(), defining_u_representatives());
  }

  Code with_kind(CodeKind k) const {
    Code c = *this;
    if (c.kind_ != k) {
      c.kind_ = k;
      c.built_ = std::make_shared<Built>();
    }
    return c;
  }

  const Matrix& parity_matrix() const { return built().parity; }
  const Matrix& generator_matrix() const { return built().generator; }

  bool membership(const Codeword& x) const {
    if (x.kind != kind_ || x.length() != length()) throw LengthMismatch("wrong word length");
    for (int64_t s : zeros_.exps)
      if (!power_sum(F(), x, s).is_zero()) return false;
    if (has_extension_constraint() && !power_sum(F(), x, 0).is_zero()) return false;
    return true;
  }

  bool same_code(const Code& o) const {
    return F().descriptor() == o.F().descriptor() && kind_ == o.kind_ &&
           zeros_.exps == o.zeros_.exps;
  }

 private:
  Code(FieldPtr f, CodeKind kind, CodeFamily fam, int r, std::vector<int> I)
      : field_(std::move(f)), kind_(kind), family_(fam), r_(r), I_(std::move(I)),
        built_(std::make_shared<Built>()) {}

  static ExponentDomain domain_of(const Field& f) { return ExponentDomain::make(f.q(), f.n()); }

  static Code full_space(FieldPtr f, CodeKind kind) {
    const ExponentDomain dom = domain_of(*f);
    Code c(std::move(f), kind, CodeFamily::raw, dom.max_weight(), {0});
    c.zeros_ = ExponentSet{};  // no constraints at all
    c.zeros_.q_closed = true;
    return c;
  }

  struct Built {
    std::once_flag flag;
    Matrix parity;
    Matrix generator;
  };

  const Built& built() const {
    std::call_once(built_->flag, [this] { build_matrices(); });
    return *built_;
  }

  void build_matrices() const {
    const Field& f = F();
    const int64_t N = f.order();
    const int L = static_cast<int>(length());
    const int n = f.n();
    const bool ext = has_extension_constraint();
    const size_t nconstraints = zeros_.size() + (ext ? 1 : 0);
    Matrix P(static_cast<int>(nconstraints) * n, L);
    int row = 0;
    std::vector<uint8_t> c(n);
    for (int64_t s : zeros_.exps) {
      for (int64_t j = 0; j < N; ++j) {
        f.coords(Elt{(j * s) % N}, c.data());
        for (int t = 0; t < n; ++t) P.at(row + t, static_cast<int>(j)) = c[t];
      }
      row += n;
    }
    if (ext) {
      // the s = 0 constraint of the extension: every coordinate sums to zero
      for (int j = 0; j < L; ++j) P.at(row, j) = 1;
      row += n;  // remaining n-1 rows stay zero
    }
    const int prank = rref(P, f);
    const int64_t expect = length() - dimension();
    if (prank != expect)
      throw Error("parity rank disagrees with the defining-set count");
    P.rows = prank;
    P.a.resize(static_cast<size_t>(prank) * L);
    Matrix G = kernel_basis(P, f);
    if (G.rows != dimension()) throw Error("generator rank disagrees with the dimension");
    if (!all_zero(matmul(G, transpose(P), f)))
      throw Error("generator does not annihilate the parity matrix");
    built_->parity = std::move(P);
    built_->generator = std::move(G);
  }

  FieldPtr field_;
  CodeKind kind_;
  CodeFamily family_;
  int r_ = 0;
  std::vector<int> I_;
  ExponentSet zeros_;
  std::shared_ptr<Built> built_;
};

namespace detail {

// The sandwich-parameter descriptions (r, I) naming this same code; a code
// with everything kept at order r is also the order-(r+1) code keeping
// nothing.
inline std::vector<std::pair<int, std::vector<int>>> parameter_forms(const Code& c) {
  std::vector<std::pair<int, std::vector<int>>> forms;
  if (c.family() == CodeFamily::raw) return forms;
  const ExponentDomain dom = c.domain();
  if (c.r() >= 0 && c.r() < dom.max_weight()) forms.emplace_back(c.r(), c.I());
  if (c.r() >= 0 && c.r() + 1 <= dom.max_weight() &&
      c.I() == imbalance_values(dom, c.r()))
    forms.emplace_back(c.r() + 1, std::vector<int>{});
  return forms;
}

}  // namespace detail

// ---- word constructions -------------------------------------------------

inline Codeword zero_word(const Code& c) {
  return Codeword{c.kind(), std::vector<uint8_t>(static_cast<size_t>(c.length()), 0)};
}

// Word with coefficient `label` on each listed field element.  Zero elements
// are only representable in extended words.
inline Codeword indicator_word(const Field& F, CodeKind kind, const std::vector<Elt>& support,
                               int label = 1) {
  const int64_t N = F.order();
  Codeword x{kind, std::vector<uint8_t>(static_cast<size_t>(N) + (kind == CodeKind::extended), 0)};
  for (Elt g : support) {
    if (g.is_zero()) {
      if (kind != CodeKind::extended)
        throw LengthMismatch("zero element has no punctured position");
      x.v[static_cast<size_t>(N)] = static_cast<uint8_t>(label);
    } else {
      x.v[static_cast<size_t>(g.log)] = static_cast<uint8_t>(label);
    }
  }
  return x;
}

inline Codeword word_add(const Field& F, const Codeword& a, const Codeword& b) {
  if (a.kind != b.kind || a.v.size() != b.v.size()) throw LengthMismatch("word shape mismatch");
  Codeword out = a;
  for (size_t i = 0; i < out.v.size(); ++i)
    out.v[i] = static_cast<uint8_t>(F.q_add(out.v[i], b.v[i]));
  return out;
}

inline Codeword word_scale(const Field& F, const Codeword& a, int label) {
  Codeword out = a;
  for (auto& c : out.v) c = static_cast<uint8_t>(F.q_mul(c, label));
  return out;
}

inline Codeword row_word(const Code& c, int row) {
  const Matrix& G = c.generator_matrix();
  Codeword x{c.kind(), std::vector<uint8_t>(G.row(row), G.row(row) + G.cols)};
  return x;
}

// Extension: append -(sum of coefficients) at the position labelled 0.
inline Codeword extend(const Field& F, const Codeword& x) {
  if (x.kind != CodeKind::punctured) throw LengthMismatch("can only extend punctured words");
  int s = 0;
  for (uint8_t c : x.v) s = F.q_add(s, c);
  Codeword out{CodeKind::extended, x.v};
  out.v.push_back(static_cast<uint8_t>(F.q_neg(s)));
  return out;
}

inline Codeword puncture(const Codeword& x) {
  if (x.kind != CodeKind::extended) throw LengthMismatch("can only puncture extended words");
  Codeword out{CodeKind::punctured, x.v};
  out.v.pop_back();
  return out;
}

// sigma_{u,v}: g -> u g + v on the positions of an extended word; with v = 0
// it restricts to a cyclic shift on punctured words.
inline Codeword affine_permute(const Field& F, const Codeword& x, Elt u, Elt v) {
  if (u.is_zero()) throw ZeroScale("affine permutation needs u != 0");
  const int64_t N = F.order();
  if (x.kind == CodeKind::punctured) {
    if (!v.is_zero())
      throw Unsupported("translations act only on extended words");
    Codeword out{CodeKind::punctured, std::vector<uint8_t>(x.v.size(), 0)};
    for (int64_t j = 0; j < N; ++j)
      if (x.v[j]) out.v[(j + u.log) % N] = x.v[j];
    return out;
  }
  Codeword out{CodeKind::extended, std::vector<uint8_t>(x.v.size(), 0)};
  auto position = [&](Elt g) -> size_t {
    return g.is_zero() ? static_cast<size_t>(N) : static_cast<size_t>(g.log);
  };
  for (size_t j = 0; j < x.v.size(); ++j) {
    if (!x.v[j]) continue;
    const Elt g = (j == static_cast<size_t>(N)) ? F.zero() : Elt{static_cast<int64_t>(j)};
    out.v[position(F.add(F.mul(u, g), v))] = x.v[j];
  }
  return out;
}

inline Codeword cyclic_shift(const Codeword& x) {
  if (x.kind != CodeKind::punctured) throw LengthMismatch("cyclic shift acts on punctured words");
  Codeword out = x;
  std::rotate(out.v.rbegin(), out.v.rbegin() + 1, out.v.rend());
  return out;
}

// Multiplication in the group algebra the word lives in: the convolution
// over (F_{q^n}^*, *) for punctured words and over (F_{q^n}, +) for extended
// words.  Units are (alpha^0) and (0) respectively.
inline Codeword algebra_multiply(const Field& F, const Codeword& x, const Codeword& y) {
  if (x.kind != y.kind || x.v.size() != y.v.size())
    throw LengthMismatch("algebra product needs matching shapes");
  const int64_t N = F.order();
  Codeword out{x.kind, std::vector<uint8_t>(x.v.size(), 0)};
  if (x.kind == CodeKind::punctured) {
    for (int64_t i = 0; i < N; ++i) {
      if (!x.v[i]) continue;
      for (int64_t j = 0; j < N; ++j) {
        if (!y.v[j]) continue;
        auto& slot = out.v[(i + j) % N];
        slot = static_cast<uint8_t>(F.q_add(slot, F.q_mul(x.v[i], y.v[j])));
      }
    }
    return out;
  }
  const int64_t L = N + 1;
  auto element = [&](int64_t pos) { return pos == N ? F.zero() : Elt{pos}; };
  auto position = [&](Elt g) { return g.is_zero() ? N : g.log; };
  for (int64_t i = 0; i < L; ++i) {
    if (!x.v[i]) continue;
    for (int64_t j = 0; j < L; ++j) {
      if (!y.v[j]) continue;
      auto& slot = out.v[position(F.add(element(i), element(j)))];
      slot = static_cast<uint8_t>(F.q_add(slot, F.q_mul(x.v[i], y.v[j])));
    }
  }
  return out;
}

inline Codeword algebra_unit(const Field& F, CodeKind kind) {
  Codeword e{kind, std::vector<uint8_t>(static_cast<size_t>(F.order()) +
                                        (kind == CodeKind::extended ? 1 : 0), 0)};
  if (kind == CodeKind::punctured)
    e.v[0] = 1;
  else
    e.v[static_cast<size_t>(F.order())] = 1;
  return e;
}

// C_q(r,I,n)^perp = C_q(n(q-1)-r, M_r \ I, n); verified on the matrices.
inline Code dual(const Code& c) {
  if (c.kind() != CodeKind::extended || c.family() == CodeFamily::raw)
    throw Unsupported("dual is defined for extended rm/sandwich codes here");
  const ExponentDomain dom = c.domain();
  if (c.r() < 0 || c.r() >= dom.max_weight())
    throw RangeError("dual needs 0 <= r < n(q-1)");
  const std::vector<int> mr = imbalance_values(dom, c.r());
  std::vector<int> comp;
  for (int k : mr)
    if (!std::binary_search(c.I().begin(), c.I().end(), k)) comp.push_back(k);
  Code d = Code::sandwich(c.field(), CodeKind::extended, dom.max_weight() - c.r(), comp);
  if (c.dimension() + d.dimension() != static_cast<int64_t>(c.length()))
    throw Error("dual dimensions do not sum to the length");
  if (!all_zero(matmul(c.generator_matrix(), transpose(d.generator_matrix()), c.F())))
    throw Error("dual generators are not orthogonal");
  return d;
}

}  // namespace srm
