#include "srm/codes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

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

std::vector<Elt> subfield_units(const Field& F, int degree) {
  std::vector<Elt> out;
  for (int64_t e = 0; e < F.order(); ++e)
    if (F.in_subfield(F.alpha_pow(e), degree)) out.push_back(F.alpha_pow(e));
  return out;
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

}  // namespace

TEST_CASE("sandwich code parameters") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  CHECK(c.length() == 81);
  CHECK(c.dimension() == 62);
  CHECK(c.generator_matrix().rows == 62);
  CHECK(c.parity_matrix().rows == 19);
  CHECK(c.defining_set().size() == 19);
  CHECK(c.defining_set().front() == 0);
}

TEST_CASE("rm code parameters") {
  Code c = Code::rm(gf81(), CodeKind::extended, 1);
  CHECK(c.dimension() == 5);  // 1 + n, the affine functions
  CHECK(c.generator_matrix().rows == 5);
  CHECK(c.dimension() == rm_dimension(ExponentDomain::make(3, 4), 1));
  Code b = Code::rm(gf16(), CodeKind::extended, 1);
  CHECK(b.length() == 16);
  CHECK(b.dimension() == 5);
}

TEST_CASE("boundary orders") {
  const ExponentDomain dom = ExponentDomain::make(3, 4);
  Code full = Code::sandwich(gf81(), CodeKind::extended, dom.max_weight(), {0});
  CHECK(full.family() == CodeFamily::raw);
  CHECK(full.dimension() == 81);
  Code top = Code::sandwich(gf81(), CodeKind::extended, dom.max_weight(), {2});
  CHECK(top.family() == CodeFamily::rm);
  CHECK(top.r() == dom.max_weight() - 1);
  CHECK(top.dimension() == 80);
  Code zero = Code::rm(gf81(), CodeKind::extended, -1);
  CHECK(zero.dimension() == 0);
  CHECK(zero.generator_matrix().rows == 0);
}

TEST_CASE("power sums") {
  const Field& F = *gf81();
  // a single symbol at alpha^0 has every power sum equal to 1
  Codeword e0 = indicator_word(F, CodeKind::punctured, {F.one()});
  for (int64_t s = 0; s <= 80; ++s) CHECK(power_sum(F, e0, s) == F.one());

  // extension forces the s = 0 sum to vanish
  std::mt19937_64 rng(7);
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Code cp = c.with_kind(CodeKind::punctured);
  for (int t = 0; t < 10; ++t) {
    Codeword x = random_codeword(cp, rng);
    CHECK(power_sum(F, extend(F, x), 0).is_zero());
  }

  // indicator of the 8 units of F_9 inside F_81: direct-sum oracle
  const std::vector<Elt> f9 = subfield_units(F, 2);
  REQUIRE(f9.size() == 8);
  Codeword ind = indicator_word(F, CodeKind::punctured, f9);
  for (int64_t s = 1; s <= 80; ++s) {
    Elt direct = F.zero();
    for (Elt g : f9) direct = F.add(direct, F.pow(g, s));
    CHECK(power_sum(F, ind, s) == direct);
  }
  CHECK(power_sum(F, ind, 5).is_zero());
}

TEST_CASE("membership") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  CHECK(c.membership(zero_word(c)));
  for (int r = 0; r < c.generator_matrix().rows; ++r)
    CHECK(c.membership(row_word(c, r)));

  // the F_9^* indicator lies in C_3(4,{0},4)^*
  Code c40 = Code::sandwich(gf81(), CodeKind::punctured, 4, {0});
  Codeword ind = indicator_word(*gf81(), CodeKind::punctured, subfield_units(*gf81(), 2));
  CHECK(ind.weight() == 8);
  CHECK(c40.membership(ind));

  Codeword bad{CodeKind::extended, std::vector<uint8_t>(80, 0)};
  CHECK_THROWS_AS(c.membership(bad), LengthMismatch);
}

TEST_CASE("extension and puncturing") {
  const Field& F = *gf81();
  Codeword ones{CodeKind::punctured, std::vector<uint8_t>(80, 1)};
  Codeword ext = extend(F, ones);
  CHECK(ext.v.back() == 1);  // -80 = 1 mod 3
  CHECK(ext.weight() == 81);
  CHECK(puncture(ext) == ones);

  Codeword ind = indicator_word(F, CodeKind::punctured, subfield_units(F, 2));
  CHECK(extend(F, ind).weight() == 9);

  Codeword z{CodeKind::punctured, std::vector<uint8_t>(80, 0)};
  CHECK(extend(F, z).weight() == 0);
}

TEST_CASE("duality") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Code d = dual(c);
  CHECK(d.r() == 3);
  CHECK(d.I() == std::vector<int>{3});
  CHECK(d.dimension() == 19);
  CHECK(c.dimension() + d.dimension() == 81);
  CHECK(dual(d).same_code(c));
  CHECK(d.same_code(Code::sandwich(gf81(), CodeKind::extended, 3, {3})));

  // R_q(r,n)^perp = R_q(n(q-1)-r-1, n), via the sandwich complement chain
  for (int r = 0; r < 8; ++r) {
    Code rm = Code::rm(gf81(), CodeKind::extended, r);
    Code rd = dual(rm);
    Code expect = Code::rm(gf81(), CodeKind::extended, 8 - r - 1);
    CHECK(rd.same_code(expect));
  }
}

TEST_CASE("dual defining set is the inverse complement") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Code d = dual(c);
  std::vector<int64_t> inv_complement;
  for (int64_t u = 1; u <= 79; ++u)
    if (!c.zeros().contains(u)) inv_complement.push_back((80 - u) % 80);
  std::sort(inv_complement.begin(), inv_complement.end());
  CHECK(d.zeros().exps == inv_complement);
}

TEST_CASE("affine permutations") {
  const Field& F = *gf81();
  std::mt19937_64 rng(11);
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Codeword x = random_codeword(c, rng);

  CHECK(affine_permute(F, x, F.one(), F.zero()) == x);

  // sigma_{alpha,0} restricted to the punctured part is the cyclic shift
  Codeword xp = puncture(x);
  CHECK(affine_permute(F, xp, F.alpha(), F.zero()) == cyclic_shift(xp));

  std::uniform_int_distribution<int64_t> expo(0, 79);
  for (int t = 0; t < 25; ++t) {
    const Elt u = F.alpha_pow(expo(rng));
    const Elt v = (t % 5 == 0) ? F.zero() : F.alpha_pow(expo(rng));
    Codeword y = affine_permute(F, x, u, v);
    CHECK(y.weight() == x.weight());
    CHECK(c.membership(y));
  }
  CHECK_THROWS_AS(affine_permute(F, x, F.zero(), F.zero()), ZeroScale);
}

TEST_CASE("cyclic closure of punctured codes") {
  std::mt19937_64 rng(13);
  Code c = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  for (int t = 0; t < 10; ++t) {
    Codeword x = random_codeword(c, rng);
    CHECK(c.membership(cyclic_shift(x)));
  }
}

TEST_CASE("group algebra products") {
  const Field& F = *gf81();
  std::mt19937_64 rng(17);
  Code cp = Code::sandwich(gf81(), CodeKind::punctured, 5, {1});
  Codeword x = random_codeword(cp, rng);

  // units
  CHECK(algebra_multiply(F, x, algebra_unit(F, CodeKind::punctured)) == x);
  Code ce = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Codeword xe = random_codeword(ce, rng);
  CHECK(algebra_multiply(F, xe, algebra_unit(F, CodeKind::extended)) == xe);

  // single symbols multiply by adding exponents
  Codeword a3 = indicator_word(F, CodeKind::punctured, {F.alpha_pow(3)});
  Codeword a7 = indicator_word(F, CodeKind::punctured, {F.alpha_pow(7)});
  CHECK(algebra_multiply(F, a3, a7) ==
        indicator_word(F, CodeKind::punctured, {F.alpha_pow(10)}));

  // a cyclic code is an ideal: multiplying by (alpha) keeps membership
  Codeword shift = indicator_word(F, CodeKind::punctured, {F.alpha()});
  CHECK(cp.membership(algebra_multiply(F, x, shift)));

  // commutativity
  Codeword y = random_codeword(cp, rng);
  CHECK(algebra_multiply(F, x, y) == algebra_multiply(F, y, x));
  Codeword ye = random_codeword(ce, rng);
  CHECK(algebra_multiply(F, xe, ye) == algebra_multiply(F, ye, xe));
}

TEST_CASE("nesting of sandwiched codes") {
  Code lower = Code::sandwich(gf81(), CodeKind::extended, 5, {});      // R_3(4,4)
  Code mid = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Code upper = Code::sandwich(gf81(), CodeKind::extended, 5, {1, 3});  // R_3(5,4)
  for (int r = 0; r < lower.generator_matrix().rows; ++r)
    CHECK(mid.membership(row_word(lower, r)));
  for (int r = 0; r < mid.generator_matrix().rows; ++r)
    CHECK(upper.membership(row_word(mid, r)));
  CHECK(lower.dimension() < mid.dimension());
  CHECK(mid.dimension() < upper.dimension());
}

TEST_CASE("affine invariance flag") {
  CHECK(Code::sandwich(gf81(), CodeKind::extended, 5, {1}).is_affine_invariant());
  CHECK(Code::rm(gf81(), CodeKind::extended, 3).is_affine_invariant());
  CHECK_FALSE(Code::sandwich(gf81(), CodeKind::punctured, 5, {1}).is_affine_invariant());
}

TEST_CASE("dimension agrees between formula and rank for the example family") {
  const ExponentDomain dom = ExponentDomain::make(3, 4);
  for (int r : {1, 3, 5}) {
    for (int k : imbalance_values(dom, r)) {
      Code c = Code::sandwich(gf81(), CodeKind::extended, r, {k});
      CHECK(c.dimension() == sandwich_dimension(dom, r, {k}));
      CHECK(c.generator_matrix().rows == c.dimension());
    }
  }
}
