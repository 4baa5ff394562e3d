#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "srm/codes.hpp"
#include "srm/errors.hpp"
#include "srm/exponents.hpp"
#include "srm/field.hpp"

namespace srm {

// ---- Mattson-Solomon spectrum --------------------------------------------

// lam[s] = rho_s(x) for s = 0..N; lam[N] repeats lam[0].
struct MSSpectrum {
  std::vector<Elt> lam;

  Elt at(const Field& F, int64_t s) const {
    const int64_t N = F.order();
    int64_t t = s % N;
    if (t < 0) t += N;
    return lam[static_cast<size_t>(t)];
  }
};

inline MSSpectrum ms_spectrum(const Field& F, const Codeword& x) {
  if (x.kind != CodeKind::punctured) throw LengthMismatch("spectrum of a punctured word");
  const int64_t N = F.order();
  MSSpectrum out;
  out.lam.resize(static_cast<size_t>(N) + 1);
  for (int64_t s = 0; s <= N; ++s) out.lam[s] = power_sum(F, x, s);
  return out;
}

// The polynomial M_x(X) = sum_s rho_{N-s}(x) X^s recovers -x_j at alpha^j.
inline bool ms_eval_consistent(const Field& F, const Codeword& x, const MSSpectrum& ms) {
  const int64_t N = F.order();
  for (int64_t j = 0; j < N; ++j) {
    Elt acc = F.zero();
    // Horner over s = N-1 .. 0 at the point alpha^j
    for (int64_t s = N - 1; s >= 0; --s) {
      acc = F.mul(acc, F.alpha_pow(j));
      acc = F.add(acc, ms.at(F, N - s));
    }
    if (acc != F.neg(F.embed(x.v[static_cast<size_t>(j)]))) return false;
  }
  return true;
}

// ---- locator polynomial ---------------------------------------------------

// sigma_x(X) = prod over the support (1 - g X); c[0] = 1, degree = weight.
struct LocatorPoly {
  std::vector<Elt> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Elt coeff(int u) const {
    return (u >= 0 && u < static_cast<int>(c.size())) ? c[static_cast<size_t>(u)] : Elt{-1};
  }
};

inline LocatorPoly locator_polynomial(const Field& F, const Codeword& x) {
  if (x.kind != CodeKind::punctured) throw LengthMismatch("locator of a punctured word");
  if (x.is_zero()) throw ZeroCodeword("the zero word has no locator polynomial");
  LocatorPoly out;
  out.c = {F.one()};
  for (int64_t j = 0; j < F.order(); ++j) {
    if (!x.v[static_cast<size_t>(j)]) continue;
    const Elt g = F.alpha_pow(j);
    out.c.push_back(F.zero());
    for (int i = static_cast<int>(out.c.size()) - 1; i >= 1; --i)
      out.c[i] = F.sub(out.c[i], F.mul(g, out.c[i - 1]));
  }
  return out;
}

inline Elt eval_poly(const Field& F, const LocatorPoly& p, Elt x) {
  Elt acc = F.zero();
  for (int i = p.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), p.c[static_cast<size_t>(i)]);
  return acc;
}

// ---- Newton identities ------------------------------------------------------

struct NewtonReport {
  int64_t checked = 0;
  int64_t violations = 0;
  bool clean() const { return violations == 0; }
};

// Checks lam_{j+w} + sigma_1 lam_{j+w-1} + ... + sigma_w lam_j = 0 for all j.
inline NewtonReport newton_residuals(const Field& F, const Codeword& x) {
  if (x.is_zero()) throw ZeroCodeword("the zero word has no Newton system");
  const MSSpectrum ms = ms_spectrum(F, x);
  const LocatorPoly sig = locator_polynomial(F, x);
  const int w = sig.degree();
  const int64_t N = F.order();
  NewtonReport rep;
  for (int64_t j = 0; j < N; ++j) {
    Elt acc = F.zero();
    for (int i = 0; i <= w; ++i)
      acc = F.add(acc, F.mul(sig.c[static_cast<size_t>(i)], ms.at(F, j + w - i)));
    ++rep.checked;
    if (!acc.is_zero()) ++rep.violations;
  }
  return rep;
}

// Full check of the weight-w algebraic system attached to a cyclic code:
// the N shifted Newton identities, the Frobenius chain, periodicity, and the
// vanishing of lam on the defining set.  A solver for the system is out of
// scope; this verifies a candidate solution.
inline bool sc_system_holds(const Code& code, int w, const MSSpectrum& ms,
                            const LocatorPoly& sigma) {
  if (code.kind() != CodeKind::punctured)
    throw Unsupported("the algebraic system is attached to the punctured code");
  const Field& F = code.F();
  const int64_t N = F.order();
  if (sigma.degree() != w) throw DegreeMismatch("locator degree does not equal w");
  if (ms.lam.size() != static_cast<size_t>(N) + 1) throw DegreeMismatch("spectrum length");
  if (sigma.c[0] != F.one()) return false;
  // periodicity
  if (ms.lam[static_cast<size_t>(N)] != ms.lam[0]) return false;
  // Newton identities, shifts t = 1..N
  for (int64_t t = 1; t <= N; ++t) {
    Elt acc = F.zero();
    for (int i = 0; i <= w; ++i)
      acc = F.add(acc, F.mul(sigma.c[static_cast<size_t>(i)], ms.at(F, w + t - i)));
    if (!acc.is_zero()) return false;
  }
  // Frobenius closure
  for (int64_t i = 0; i < N; ++i)
    if (ms.at(F, i * F.q() % N) != F.pow(ms.at(F, i), F.q())) return false;
  // vanishing on the defining set
  for (int64_t t : code.zeros().exps)
    if (!ms.at(F, t).is_zero()) return false;
  return true;
}

// ---- subspaces --------------------------------------------------------------

// All elements of the subfield F_{q^degree}: zero first, then by log.
inline std::vector<Elt> subfield_elements(const Field& F, int degree) {
  std::vector<Elt> out{F.zero()};
  const int64_t sub = (degree == 1 ? F.q() : F.q_squared()) - 1;
  const int64_t step = F.order() / sub;
  for (int64_t i = 0; i < sub; ++i) out.push_back(F.alpha_pow(i * step));
  std::sort(out.begin() + 1, out.end(), [](Elt a, Elt b) { return a.log < b.log; });
  return out;
}

// A subspace of F_{q^n}, linear over F_q (base_degree 1) or over F_{q^2}
// (base_degree 2), given by a basis.
struct Subspace {
  int base_degree = 1;
  int dim = 0;
  std::vector<Elt> basis;

  int64_t size(const Field& F) const {
    int64_t b = base_degree == 1 ? F.q() : F.q_squared();
    int64_t s = 1;
    for (int i = 0; i < dim; ++i) s *= b;
    return s;
  }

  std::vector<Elt> elements(const Field& F) const {
    std::vector<Elt> out{F.zero()};
    const std::vector<Elt> scalars = subfield_elements(F, base_degree);
    for (Elt b : basis) {
      std::vector<Elt> next;
      next.reserve(out.size() * scalars.size());
      for (Elt s : scalars)
        for (Elt e : out) next.push_back(F.add(e, F.mul(s, b)));
      out = std::move(next);
    }
    return out;
  }

  bool contains_elements(const Field& F, const std::vector<Elt>& elems) const {
    std::set<int64_t> have;
    for (Elt e : elements(F)) have.insert(e.log);
    for (Elt e : elems)
      if (!have.count(e.log)) return false;
    return true;
  }
};

// Canonical enumeration of every subspace of the stated dimension: one
// reduced-echelon basis matrix per subspace over the chosen base field, the
// rows mapped onto field elements through the power basis.
inline std::vector<Subspace> enumerate_subspaces(const Field& F, int base_degree, int dim,
                                                 int64_t cap = 2'000'000) {
  if (base_degree != 1 && base_degree != 2) throw RangeError("base degree must be 1 or 2");
  const int D = F.n() / base_degree;  // ambient dimension over the base
  if (dim < 0 || dim > D) throw RangeError("subspace dimension out of range");
  const int64_t b = base_degree == 1 ? F.q() : F.q_squared();
  if (gaussian_binomial(D, dim, b) > cap) throw TooMany("too many subspaces to enumerate");

  const std::vector<Elt> scalars = subfield_elements(F, base_degree);
  std::vector<Subspace> out;
  if (dim == 0) {
    out.push_back(Subspace{base_degree, 0, {}});
    return out;
  }

  // choose pivot columns c_0 < ... < c_{dim-1}
  std::vector<int> piv(dim);
  for (int i = 0; i < dim; ++i) piv[i] = i;
  for (;;) {
    // free positions: (row i, col j) with j > piv[i], j not a later pivot
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < dim; ++i)
      for (int j = piv[i] + 1; j < D; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.emplace_back(i, j);

    std::vector<size_t> assign(free_pos.size(), 0);
    for (;;) {
      // build the basis for this assignment
      Subspace s{base_degree, dim, {}};
      std::vector<std::vector<Elt>> rows(dim, std::vector<Elt>(D, F.zero()));
      for (int i = 0; i < dim; ++i) rows[i][piv[i]] = F.one();
      for (size_t t = 0; t < free_pos.size(); ++t)
        rows[free_pos[t].first][free_pos[t].second] = scalars[assign[t]];
      // {1, alpha, ..., alpha^(D-1)} is a basis over either base field: the
      // minimal polynomial of alpha over F_{q^base} has degree D = n/base.
      for (int i = 0; i < dim; ++i) {
        Elt v = F.zero();
        for (int j = 0; j < D; ++j)
          if (!rows[i][j].is_zero()) v = F.add(v, F.mul(rows[i][j], F.alpha_pow(j)));
        s.basis.push_back(v);
      }
      out.push_back(std::move(s));
      // odometer over the free entries
      size_t t = 0;
      while (t < assign.size() && assign[t] + 1 == scalars.size()) assign[t++] = 0;
      if (t == assign.size()) break;
      ++assign[t];
      if (free_pos.empty()) break;
    }

    // next pivot combination
    int i = dim - 1;
    while (i >= 0 && piv[i] == D - dim + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

// ---- affine split recognition ----------------------------------------------

struct SplitCheck {
  bool splits = false;
  std::optional<Subspace> space;
};

// For a polynomial shaped like a subspace locator (support inside
// {0} union {q^k - q^j}), decide whether it splits over F_{q^n} with simple
// roots; when it does, the inverse roots together with 0 form an
// F_q-subspace of dimension k, which is returned.
inline SplitCheck affine_split_check(const Field& F, const LocatorPoly& sigma) {
  const int64_t q = F.q();
  const int64_t delta = sigma.degree();
  int k = 0;
  int64_t v = 1;
  while (v - 1 < delta) {
    v *= q;
    ++k;
    if (v - 1 == delta) break;
  }
  if (v - 1 != delta || delta < 1) throw BadShape("degree is not q^k - 1");
  if (sigma.c[0] != F.one()) throw BadShape("constant term must be 1");
  if (sigma.c[static_cast<size_t>(delta)].is_zero()) throw BadShape("top coefficient vanishes");
  std::set<int64_t> allowed;
  int64_t qj = 1;
  for (int j = 0; j < k; ++j) {
    allowed.insert(v - 1 - (qj - 1));  // q^k - q^j
    qj *= q;
  }
  for (int64_t u = 1; u <= delta; ++u)
    if (!sigma.coeff(static_cast<int>(u)).is_zero() && !allowed.count(u))
      throw BadShape("support leaves the subspace-locator pattern");

  std::vector<Elt> inv_roots;
  for (int64_t e = 0; e < F.order(); ++e) {
    const Elt beta = F.alpha_pow(e);
    if (eval_poly(F, sigma, beta).is_zero()) inv_roots.push_back(F.inv(beta));
  }
  if (static_cast<int64_t>(inv_roots.size()) != delta) return {false, std::nullopt};

  // roots^{-1} plus zero must form an F_q-subspace of dimension k
  std::set<int64_t> members{-1};
  for (Elt g : inv_roots) members.insert(g.log);
  std::vector<Elt> basis;
  std::set<int64_t> span{-1};
  for (Elt g : inv_roots) {
    if (span.count(g.log)) continue;
    basis.push_back(g);
    std::vector<int64_t> cur(span.begin(), span.end());
    for (int64_t s : cur)
      for (int lab = 1; lab < q; ++lab) {
        Elt e = F.add(Elt{s}, F.mul(F.embed(lab), g));
        span.insert(e.log);
      }
  }
  if (span != members || static_cast<int>(basis.size()) != k)
    return {false, std::nullopt};
  return {true, Subspace{1, k, basis}};
}

// ---- predicted minimum vectors ----------------------------------------------

enum class MinVectorCase { none, subspace_over_q, subspace_over_q2 };

struct PredictedMinVectors {
  MinVectorCase kind = MinVectorCase::none;
  int rho = -1;               // r = rho(q-1)+1 (case i) or rho = 2 rho' (case ii)
  int64_t punctured_weight = 0;
  int64_t extended_weight = 0;
  std::vector<Codeword> punctured;
  std::vector<Codeword> extended;
};

namespace detail {

inline bool case_i_applies(const ExponentDomain& dom, int r, const std::vector<int>& I,
                           int* rho_out) {
  const int qm1 = static_cast<int>(dom.q) - 1;
  if (r < 1 || (r - 1) % qm1 != 0) return false;
  const int rho = (r - 1) / qm1;
  if (rho < 0 || rho > dom.n - 1) return false;
  std::set<int> hyp;
  if (rho % 2 == 1) {
    hyp = {static_cast<int>(dom.q), static_cast<int>(dom.q) - 2,
           std::abs(static_cast<int>(dom.q) - 4)};
  } else {
    hyp = {1, 3};
  }
  for (int k : I)
    if (hyp.count(k)) return false;
  *rho_out = rho;
  return true;
}

inline bool case_ii_applies(const ExponentDomain& dom, int r, const std::vector<int>& I,
                            int* rho_out) {
  const int qm1 = static_cast<int>(dom.q) - 1;
  if (r % qm1 != 0) return false;
  const int rho = r / qm1;
  if (rho % 2 != 0 || rho < 0 || rho > dom.n - 1) return false;
  const bool has0 = std::find(I.begin(), I.end(), 0) != I.end();
  const bool has2 = std::find(I.begin(), I.end(), 2) != I.end();
  if (!has0 || has2) return false;
  *rho_out = rho;
  return true;
}

}  // namespace detail

// The minimum-vector families for the two structured cases: scalar multiples
// of subspace indicators (punctured) and of affine-subspace indicators
// (extended).  Every emitted word is membership-checked against the code and
// weight-checked before it is returned.
inline PredictedMinVectors predicted_min_vectors(const Code& c) {
  PredictedMinVectors out;
  const ExponentDomain dom = c.domain();
  const Field& F = c.F();

  int rho = -1;
  int base_degree = 0;
  for (const auto& [r, I] : detail::parameter_forms(c)) {
    if (detail::case_i_applies(dom, r, I, &rho)) {
      out.kind = MinVectorCase::subspace_over_q;
      base_degree = 1;
      break;
    }
    if (detail::case_ii_applies(dom, r, I, &rho)) {
      out.kind = MinVectorCase::subspace_over_q2;
      base_degree = 2;
      break;
    }
  }
  if (out.kind == MinVectorCase::none) return out;

  out.rho = rho;
  const int subspace_dim = (dom.n - rho) / base_degree;
  int64_t vsize = 1;
  for (int i = 0; i < dom.n - rho; ++i) vsize *= dom.q;
  out.punctured_weight = vsize - 1;
  out.extended_weight = vsize;

  const Code punct = c.with_kind(CodeKind::punctured);
  const Code ext = c.with_kind(CodeKind::extended);
  const std::vector<Subspace> spaces = enumerate_subspaces(F, base_degree, subspace_dim);

  for (const Subspace& V : spaces) {
    std::vector<Elt> elems = V.elements(F);
    std::vector<Elt> units;
    for (Elt g : elems)
      if (!g.is_zero()) units.push_back(g);
    for (int lab = 1; lab < F.q(); ++lab) {
      Codeword w = indicator_word(F, CodeKind::punctured, units, lab);
      if (w.weight() != out.punctured_weight || !punct.membership(w))
        throw Error("a predicted punctured minimum vector failed its checks");
      out.punctured.push_back(std::move(w));
    }
    // one representative per coset of V
    std::vector<char> visited(static_cast<size_t>(F.size()), 0);
    auto index = [&](Elt g) { return static_cast<size_t>(g.log + 1); };
    std::vector<Elt> all_h{F.zero()};
    for (int64_t e = 0; e < F.order(); ++e) all_h.push_back(F.alpha_pow(e));
    for (Elt h : all_h) {
      if (visited[index(h)]) continue;
      std::vector<Elt> coset;
      coset.reserve(elems.size());
      for (Elt g : elems) {
        const Elt t = F.add(g, h);
        visited[index(t)] = 1;
        coset.push_back(t);
      }
      for (int lab = 1; lab < F.q(); ++lab) {
        Codeword w = indicator_word(F, CodeKind::extended, coset, lab);
        if (w.weight() != out.extended_weight || !ext.membership(w))
          throw Error("a predicted extended minimum vector failed its checks");
        out.extended.push_back(std::move(w));
      }
    }
  }
  std::sort(out.punctured.begin(), out.punctured.end());
  std::sort(out.extended.begin(), out.extended.end());
  return out;
}

// ---- spectral constraints on minimum vectors (structured case i) -----------

struct SpectrumCheck {
  bool prefix_zero = false;   // lam_1 .. lam_{delta-1} all vanish
  bool coefficients = false;  // sigma supported on the locator index set, with
                              // sigma_u = -lam_{delta+u}/lam_delta there
  bool closed_form = false;   // sigma equals its reconstruction from lam
  bool all() const { return prefix_zero && coefficients && closed_form; }
};

inline SpectrumCheck min_weight_spectrum_check(const Code& code, const Codeword& x) {
  if (code.kind() != CodeKind::punctured || x.kind != CodeKind::punctured)
    throw IneligibleCode("the spectral constraints apply to the punctured code");
  const ExponentDomain dom = code.domain();
  int rho = -1;
  bool ok = false;
  for (const auto& [r, I] : detail::parameter_forms(code))
    if (detail::case_i_applies(dom, r, I, &rho)) {
      ok = true;
      break;
    }
  if (!ok) throw IneligibleCode("code parameters are outside the structured case");
  int64_t delta = 1;
  for (int i = 0; i < dom.n - rho; ++i) delta *= dom.q;
  delta -= 1;
  if (x.weight() != delta) throw IneligibleCode("word weight is not q^(n-rho) - 1");

  const Field& F = code.F();
  const MSSpectrum ms = ms_spectrum(F, x);
  const LocatorPoly sig = locator_polynomial(F, x);
  std::set<int64_t> locator_support;  // {q^(n-rho) - q^j}
  int64_t qj = 1;
  for (int j = 0; j < dom.n - rho; ++j) {
    locator_support.insert(delta + 1 - qj);
    qj *= dom.q;
  }

  SpectrumCheck rep;
  rep.prefix_zero = true;
  for (int64_t u = 1; u < delta; ++u)
    if (!ms.at(F, u).is_zero()) rep.prefix_zero = false;

  const Elt lam_delta = ms.at(F, delta);
  if (!lam_delta.is_zero()) {
    rep.coefficients = true;
    for (int64_t u = 1; u < delta; ++u) {
      if (locator_support.count(u)) {
        if (sig.coeff(static_cast<int>(u)) != F.neg(F.div(ms.at(F, delta + u), lam_delta)))
          rep.coefficients = false;
      } else {
        if (!sig.coeff(static_cast<int>(u)).is_zero()) rep.coefficients = false;
        if (!ms.at(F, delta + u).is_zero()) rep.coefficients = false;
      }
    }
    rep.closed_form = true;
    LocatorPoly rebuilt;
    rebuilt.c.assign(static_cast<size_t>(delta) + 1, F.zero());
    rebuilt.c[0] = F.one();
    for (int64_t u : locator_support)
      rebuilt.c[static_cast<size_t>(u)] = F.neg(F.div(ms.at(F, delta + u), lam_delta));
    for (size_t i = 0; i < rebuilt.c.size(); ++i)
      if (rebuilt.c[i] != sig.c[i]) rep.closed_form = false;
  }
  return rep;
}

}  // namespace srm
