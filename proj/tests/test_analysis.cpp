#include "srm/analysis.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace srm;

namespace {

FieldPtr gf81() {
  static FieldPtr f = Field::build(3, 1, 4);
  return f;
}
FieldPtr gf16() {
  static FieldPtr f = Field::build(2, 1, 4);
  return f;
}

Codeword random_codeword(const Code& c, std::mt19937_64& rng) {
  const Matrix& G = c.generator_matrix();
  std::uniform_int_distribution<int> coef(0, static_cast<int>(c.F().q()) - 1);
  Codeword x = zero_word(c);
  for (int r = 0; r < G.rows; ++r) {
    const int v = coef(rng);
    if (!v) continue;
    for (int j = 0; j < G.cols; ++j)
      x.v[j] = static_cast<uint8_t>(c.F().q_add(x.v[j], c.F().q_mul(v, G.at(r, j))));
  }
  return x;
}

Codeword subfield_indicator(const Field& F, int degree) {
  std::vector<Elt> units;
  for (int64_t e = 0; e < F.order(); ++e)
    if (F.in_subfield(F.alpha_pow(e), degree)) units.push_back(F.alpha_pow(e));
  return indicator_word(F, CodeKind::punctured, units);
}

}  // namespace

TEST_CASE("spectrum basics") {
  const Field& F = *gf81();
  Codeword e0 = indicator_word(F, CodeKind::punctured, {F.one()});
  MSSpectrum ms = ms_spectrum(F, e0);
  for (int64_t s = 0; s <= 80; ++s) CHECK(ms.lam[s] == F.one());
  CHECK(ms.lam[80] == ms.lam[0]);
}

TEST_CASE("spectrum vanishes on the defining set") {
  std::mt19937_64 rng(23);
  Code c = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  for (int t = 0; t < 5; ++t) {
    Codeword x = random_codeword(c, rng);
    MSSpectrum ms = ms_spectrum(c.F(), x);
    for (int64_t s : c.zeros().exps) CHECK(ms.at(c.F(), s).is_zero());
    // Frobenius chain
    for (int64_t i = 0; i < 80; ++i)
      CHECK(ms.at(c.F(), i * 3 % 80) == c.F().pow(ms.at(c.F(), i), 3));
  }
}

TEST_CASE("subspace indicators kill low-weight exponents") {
  const Field& F = *gf81();
  const ExponentDomain dom = ExponentDomain::make(3, 4);
  // F_9 is a 2-dimensional F_3-space: threshold k(q-1) = 4
  Codeword ind = subfield_indicator(F, 2);
  MSSpectrum ms = ms_spectrum(F, ind);
  for (int64_t i = 1; i <= 80; ++i)
    if (dom.q_weight(i) < 4) CHECK(ms.at(F, i).is_zero());
}

TEST_CASE("spectrum evaluation recovers the word") {
  const Field& F = *gf81();
  std::mt19937_64 rng(29);
  Code c = Code::sandwich(gf81(), CodeKind::punctured, 3, {3});
  Codeword x = random_codeword(c, rng);
  CHECK(ms_eval_consistent(F, x, ms_spectrum(F, x)));
}

TEST_CASE("locator polynomials") {
  const Field& F = *gf81();
  // single support point alpha^0: 1 - X
  Codeword e0 = indicator_word(F, CodeKind::punctured, {F.one()});
  LocatorPoly s0 = locator_polynomial(F, e0);
  REQUIRE(s0.degree() == 1);
  CHECK(s0.c[0] == F.one());
  CHECK(s0.c[1] == F.neg(F.one()));

  // support {1, -1}: the product collapses to 1 - X^2
  Codeword pm = indicator_word(F, CodeKind::punctured, {F.one(), F.alpha_pow(40)});
  LocatorPoly s1 = locator_polynomial(F, pm);
  REQUIRE(s1.degree() == 2);
  CHECK(s1.c[1].is_zero());
  CHECK(s1.c[2] == F.neg(F.one()));

  // roots are exactly the inverses of the support, with multiplicity one
  std::mt19937_64 rng(31);
  Code c = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  Codeword x = random_codeword(c, rng);
  LocatorPoly sig = locator_polynomial(F, x);
  CHECK(sig.degree() == x.weight());
  int roots = 0;
  for (int64_t e = 0; e < 80; ++e)
    if (eval_poly(F, sig, F.alpha_pow(e)).is_zero()) {
      ++roots;
      CHECK(x.v[static_cast<size_t>((80 - e) % 80)] != 0);
    }
  CHECK(roots == x.weight());

  CHECK_THROWS_AS(locator_polynomial(F, zero_word(c)), ZeroCodeword);
}

TEST_CASE("subspace indicator locator lives on the structured support") {
  const Field& F = *gf81();
  Codeword ind = subfield_indicator(F, 2);  // V = F_9, n - rho = 2
  LocatorPoly sig = locator_polynomial(F, ind);
  const std::set<int64_t> allowed{0, 9 - 1, 9 - 3};  // {0} u {q^2 - q^j}
  for (int u = 0; u <= sig.degree(); ++u)
    if (!sig.coeff(u).is_zero()) CHECK(allowed.count(u) == 1);
}

TEST_CASE("newton identities hold for generator rows") {
  std::mt19937_64 rng(37);
  Code c = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  for (int r = 0; r < c.generator_matrix().rows; r += 7) {
    NewtonReport rep = newton_residuals(c.F(), row_word(c, r));
    CHECK(rep.clean());
    CHECK(rep.checked == 80);
  }
  for (int t = 0; t < 5; ++t) {
    Codeword x = random_codeword(c, rng);
    if (!x.is_zero()) CHECK(newton_residuals(c.F(), x).clean());
  }
}

TEST_CASE("algebraic system checker") {
  std::mt19937_64 rng(41);
  Code c = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  const Field& F = c.F();
  Codeword x = random_codeword(c, rng);
  while (x.is_zero()) x = random_codeword(c, rng);
  MSSpectrum ms = ms_spectrum(F, x);
  LocatorPoly sig = locator_polynomial(F, x);
  CHECK(sc_system_holds(c, x.weight(), ms, sig));

  // flipping one spectrum value on the defining set breaks the system
  MSSpectrum bad = ms;
  bad.lam[c.zeros().exps.front()] = F.one();
  CHECK_FALSE(sc_system_holds(c, x.weight(), bad, sig));

  // and so does a generic single-coordinate perturbation
  MSSpectrum bad2 = ms;
  const int64_t free_idx = 79;  // wt_3(79) = 7, never in the defining set here
  bad2.lam[free_idx] = F.add(bad2.lam[free_idx], F.one());
  CHECK_FALSE(sc_system_holds(c, x.weight(), bad2, sig));

  LocatorPoly wrong = sig;
  wrong.c.push_back(F.one());
  CHECK_THROWS_AS(sc_system_holds(c, x.weight(), ms, wrong), DegreeMismatch);
}

TEST_CASE("subfield element lists") {
  const Field& F = *gf81();
  CHECK(subfield_elements(F, 1).size() == 3);
  CHECK(subfield_elements(F, 2).size() == 9);
}

TEST_CASE("subspace enumeration counts") {
  const Field& F81 = *gf81();
  CHECK(enumerate_subspaces(F81, 2, 1).size() == 10);   // (81-1)/(9-1)
  CHECK(enumerate_subspaces(F81, 1, 2).size() == 130);  // gaussian (4 2)_3
  CHECK(enumerate_subspaces(F81, 1, 0).size() == 1);
  const Field& F16 = *gf16();
  CHECK(enumerate_subspaces(F16, 2, 1).size() == 5);
  CHECK(enumerate_subspaces(F16, 1, 3).size() == 15);
  CHECK_THROWS_AS(enumerate_subspaces(F81, 1, 2, 10), TooMany);
}

TEST_CASE("subspaces enumerate distinct element sets of the right size") {
  const Field& F = *gf81();
  std::set<std::vector<int64_t>> seen;
  for (const Subspace& V : enumerate_subspaces(F, 1, 2)) {
    std::vector<Elt> el = V.elements(F);
    CHECK(el.size() == 9);
    std::vector<int64_t> key;
    for (Elt e : el) key.push_back(e.log);
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    CHECK(key.size() == 9);  // closure: no duplicates
    seen.insert(key);
  }
  CHECK(seen.size() == 130);
}

TEST_CASE("power sums over subspaces vanish below the threshold") {
  const Field& F = *gf81();
  const ExponentDomain dom = ExponentDomain::make(3, 4);
  for (int dim = 1; dim <= 2; ++dim) {
    for (const Subspace& V : enumerate_subspaces(F, 1, dim)) {
      const std::vector<Elt> el = V.elements(F);
      for (int64_t i = 1; i <= 80; ++i) {
        if (dom.q_weight(i) >= dim * 2) continue;
        Elt acc = F.zero();
        for (Elt v : el) acc = F.add(acc, F.pow(v, i));
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("affine split recognition") {
  const Field& F = *gf81();
  // build from a subspace indicator, then re-recognize the subspace
  Codeword ind = subfield_indicator(F, 2);
  LocatorPoly sig = locator_polynomial(F, ind);
  SplitCheck sc = affine_split_check(F, sig);
  REQUIRE(sc.splits);
  CHECK(sc.space->dim == 2);
  std::set<int64_t> got;
  for (Elt e : sc.space->elements(F)) got.insert(e.log);
  std::set<int64_t> expect{-1};
  for (int64_t e = 0; e < 80; e += 10) expect.insert(e);
  CHECK(got == expect);

  // k = 1: sigma(X) = 1 - g^(q-1) X^(q-1) splits with inverse roots F_q g
  const Elt g = F.alpha_pow(7);
  LocatorPoly s1;
  s1.c = {F.one(), F.zero(), F.neg(F.pow(g, 2))};
  SplitCheck sc1 = affine_split_check(F, s1);
  REQUIRE(sc1.splits);
  CHECK(sc1.space->dim == 1);
  CHECK(sc1.space->contains_elements(F, {g}));

  // a pattern on the right support that fails to split exists
  bool found_nonsplit = false;
  for (int64_t a = 0; a < 80 && !found_nonsplit; ++a) {
    LocatorPoly cand;
    cand.c.assign(9, F.zero());
    cand.c[0] = F.one();
    cand.c[6] = F.alpha_pow(a);  // q^2 - q = 6
    cand.c[8] = F.one();         // q^2 - 1 = 8
    if (!affine_split_check(F, cand).splits) found_nonsplit = true;
  }
  CHECK(found_nonsplit);

  LocatorPoly bad;
  bad.c.assign(9, F.zero());
  bad.c[0] = F.one();
  bad.c[5] = F.one();  // 5 is off the structured support
  bad.c[8] = F.one();
  CHECK_THROWS_AS(affine_split_check(F, bad), BadShape);
}

TEST_CASE("predicted minimum vectors, binary structured case") {
  Code c = Code::sandwich(gf16(), CodeKind::extended, 2, {0});
  PredictedMinVectors pm = predicted_min_vectors(c);
  CHECK(pm.kind == MinVectorCase::subspace_over_q2);
  CHECK(pm.rho == 2);
  CHECK(pm.punctured_weight == 3);
  CHECK(pm.extended_weight == 4);
  CHECK(pm.punctured.size() == 5);  // 5 lines over F_4, one scalar
  CHECK(pm.extended.size() == 20);  // 5 lines x 4 cosets
}

TEST_CASE("predicted minimum vectors, ternary structured case") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 4, {0});
  PredictedMinVectors pm = predicted_min_vectors(c);
  CHECK(pm.kind == MinVectorCase::subspace_over_q2);
  CHECK(pm.punctured_weight == 8);
  CHECK(pm.extended_weight == 9);
  CHECK(pm.punctured.size() == 10 * 2);     // 10 lines x 2 scalars
  CHECK(pm.extended.size() == 10 * 9 * 2);  // x 9 cosets
}

TEST_CASE("hypothesis failure reports no structured case") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  CHECK(predicted_min_vectors(c).kind == MinVectorCase::none);
  // for GF(81) every nonempty I fails the structured-case hypotheses
  const ExponentDomain dom = ExponentDomain::make(3, 4);
  for (int r : {1, 3, 5}) {
    for (int k : imbalance_values(dom, r)) {
      Code s = Code::sandwich(gf81(), CodeKind::extended, r, {k});
      CHECK(predicted_min_vectors(s).kind == MinVectorCase::none);
    }
  }
}

TEST_CASE("rm instances fall under the structured case") {
  Code c = Code::sandwich(gf16(), CodeKind::extended, 2, {});  // R_2(1,4)
  PredictedMinVectors pm = predicted_min_vectors(c);
  CHECK(pm.kind == MinVectorCase::subspace_over_q);
  CHECK(pm.rho == 1);
  CHECK(pm.punctured_weight == 7);
  CHECK(pm.punctured.size() == 15);     // all dim-3 subspaces of F_16
  CHECK(pm.extended.size() == 15 * 2);  // two cosets each
}

TEST_CASE("spectral constraints on structured-case minimum vectors") {
  Code c = Code::sandwich(gf16(), CodeKind::punctured, 2, {});  // R_2(1,4)*
  PredictedMinVectors pm = predicted_min_vectors(c);
  REQUIRE(pm.punctured.size() == 15);
  for (const Codeword& x : pm.punctured) {
    SpectrumCheck sc = min_weight_spectrum_check(c, x);
    CHECK(sc.prefix_zero);
    CHECK(sc.coefficients);
    CHECK(sc.closed_form);
  }

  // perturbing the spectrum is caught through the full system checker
  const Field& F = c.F();
  const Codeword& x = pm.punctured.front();
  MSSpectrum ms = ms_spectrum(F, x);
  MSSpectrum bad = ms;
  bad.lam[1] = F.one();
  CHECK_FALSE(sc_system_holds(c, x.weight(), bad, locator_polynomial(F, x)));

  // ineligible: nonzero I breaks the hypothesis at GF(81)
  Code in = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  CHECK_THROWS_AS(min_weight_spectrum_check(in, row_word(in, 0)), IneligibleCode);
}

TEST_CASE("weight-one edge of the spectral constraints") {
  // R_2(3,4)*: rho = n-1 = 3, delta = 1; the prefix clause is vacuous and
  // the locator is 1 - g X
  Code c = Code::sandwich(gf16(), CodeKind::punctured, 4, {});
  const Field& F = c.F();
  Codeword x = indicator_word(F, CodeKind::punctured, {F.alpha_pow(11)});
  REQUIRE(c.membership(x));
  SpectrumCheck sc = min_weight_spectrum_check(c, x);
  CHECK(sc.all());
}
