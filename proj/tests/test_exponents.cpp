#include "srm/exponents.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace srm;

namespace {
const ExponentDomain d34 = ExponentDomain::make(3, 4);
const ExponentDomain d24 = ExponentDomain::make(2, 4);

// The 14 low-weight zero exponents and the shell listed for GF(81).
const std::vector<int64_t> kZ5 = {1, 2, 3, 4, 6, 9, 10, 12, 18, 27, 28, 30, 36, 54};
const std::vector<int64_t> kTheta53 = {11, 19, 33, 57};
const std::vector<int64_t> kZ4 = {1, 2,  3,  4,  5,  6,  7,  9,  10, 11, 12, 13, 15, 18, 19,
                                  21, 27, 28, 29, 30, 31, 33, 36, 37, 39, 45, 54, 55, 57, 63};
}  // namespace

TEST_CASE("digit views") {
  CHECK(d34.digits(11) == std::vector<int>{2, 0, 1, 0});
  CHECK(d34.q_weight(11) == 3);
  CHECK(d34.even_sum(11) == 3);
  CHECK(d34.odd_sum(11) == 0);
  CHECK(d34.imbalance(11) == 3);
  CHECK(d34.q_weight(0) == 0);
  CHECK(d34.odd_sum(0) == 0);
  CHECK(d34.even_sum(0) == 0);
  // the complement 80 - 11 = 69 reflects weight and imbalance
  CHECK(d34.q_weight(69) == d34.max_weight() - d34.q_weight(11));
  CHECK(d34.odd_sum(69) - d34.even_sum(69) == -(d34.odd_sum(11) - d34.even_sum(11)));
  CHECK_THROWS_AS(d34.q_weight(81), OutOfRange);
  CHECK_THROWS_AS(d34.q_weight(-1), OutOfRange);
}

TEST_CASE("complement identities hold exhaustively") {
  for (auto dom : {d34, d24, ExponentDomain::make(2, 6), ExponentDomain::make(4, 4)}) {
    for (int64_t u = 0; u <= dom.N; ++u) {
      const int64_t v = dom.qn - 1 - u;
      CHECK(dom.q_weight(v) == dom.max_weight() - dom.q_weight(u));
      CHECK(dom.odd_sum(v) - dom.even_sum(v) == dom.even_sum(u) - dom.odd_sum(u));
    }
  }
}

TEST_CASE("digitwise partial order") {
  CHECK(d34.digit_leq(1, 4));
  CHECK(d34.digit_leq(7, 7));
  CHECK_FALSE(d34.digit_leq(2, 4));
  CHECK(d34.digit_leq(0, 80));
  CHECK(d34.digit_leq(11, 80));
}

TEST_CASE("cyclotomic cosets") {
  CHECK(d34.cyclotomic_coset(11) == kTheta53);
  CHECK(d34.cyclotomic_coset(0) == std::vector<int64_t>{0});
  const ExponentDomain d = ExponentDomain::make(2, 4);
  CHECK(d.cyclotomic_coset(5) == std::vector<int64_t>{5, 10});
}

TEST_CASE("frobenius invariance of weight and imbalance") {
  for (auto dom : {d34, d24}) {
    for (int64_t u = 0; u < dom.N; ++u) {
      const int64_t v = u * dom.q % dom.N;
      CHECK(dom.q_weight(v) == dom.q_weight(u));
      CHECK(dom.imbalance(v) == dom.imbalance(u));
    }
  }
}

TEST_CASE("rm zero sets match the GF(81) listing") {
  CHECK(rm_zero_exponents(d34, 5).exps == kZ5);
  CHECK(rm_zero_exponents(d34, 4).exps == kZ4);
  CHECK(rm_zero_exponents(d34, 4).size() == 30);
  CHECK(rm_zero_exponents(d34, d34.max_weight() - 1).size() == 0);
  CHECK(rm_zero_exponents(d34, -1).size() == 80);  // every exponent mod N
  CHECK_THROWS_AS(rm_zero_exponents(d34, 8), RangeError);
  CHECK_THROWS_AS(rm_zero_exponents(d34, -2), RangeError);
}

TEST_CASE("imbalance shells") {
  CHECK(imbalance_shell(d34, 5, 3).exps == kTheta53);
  CHECK(imbalance_shell(d24, 2, 2).exps == std::vector<int64_t>{5, 10});
  CHECK(imbalance_shell(d34, 5, 2).size() == 0);  // parity mismatch
  CHECK(imbalance_shell(d34, 0, 0).exps == std::vector<int64_t>{0});
  CHECK(imbalance_shell(d34, d34.max_weight(), 0).exps == std::vector<int64_t>{0});
}

TEST_CASE("imbalance value menu") {
  CHECK(imbalance_values(d34, 5) == std::vector<int>{1, 3});
  CHECK(imbalance_values(d34, 4) == std::vector<int>{0, 2, 4});
  const ExponentDomain d44 = ExponentDomain::make(4, 4);
  CHECK(imbalance_values(d44, 4) == std::vector<int>{0, 2, 4, 6});
}

TEST_CASE("sandwich zero sets") {
  const ExponentSet z = sandwich_zero_exponents(d34, 5, {1});
  CHECK(z.size() == 18);
  std::vector<int64_t> expect = kZ5;
  expect.insert(expect.end(), kTheta53.begin(), kTheta53.end());
  std::sort(expect.begin(), expect.end());
  CHECK(z.exps == expect);
  CHECK(sandwich_zero_exponents(d34, 5, {1, 3}).exps == kZ5);
  CHECK(sandwich_zero_exponents(d34, 5, {}).exps == kZ4);
  CHECK_THROWS_AS(sandwich_zero_exponents(d34, 5, {2}), InvalidI);
}

TEST_CASE("zero sets are q-closed") {
  for (int r : {0, 2, 4, 5, 7}) {
    const ExponentSet z = rm_zero_exponents(d34, r);
    for (int64_t s : z.exps) CHECK(z.contains(s * 3 % 80));
  }
  const ExponentSet z = sandwich_zero_exponents(d34, 5, {1});
  for (int64_t s : z.exps) CHECK(z.contains(s * 3 % 80));
}

TEST_CASE("downset closure") {
  // {0} with Z_{5,{1}} is closed
  ExponentSet z = sandwich_zero_exponents(d34, 5, {1});
  z.with_zero = true;
  CHECK(is_downset_closed(d34, z.u_representatives(d34)));
  // a bare coset of 4 plus the zero constraint is not: 1 precedes 4
  CHECK_FALSE(is_downset_closed(d34, {0, 4, 12, 36, 28}));
  CHECK(is_downset_closed(d34, {0}));
  const auto closure = downset_closure(d34, {4});
  CHECK(closure == std::vector<int64_t>{0, 1, 3, 4});
}

TEST_CASE("shell sizes match enumeration everywhere") {
  for (auto dom : {d34, d24, ExponentDomain::make(2, 6), ExponentDomain::make(4, 4)}) {
    for (int r = 0; r <= dom.max_weight(); ++r) {
      int64_t total = 0;
      for (int k = 0; k <= dom.max_imbalance(); ++k) {
        const int64_t formula = imbalance_shell_size(dom, r, k);
        CHECK(formula == static_cast<int64_t>(imbalance_shell(dom, r, k).size()));
        total += formula;
      }
      // partition of the whole weight shell
      int64_t shell = 0;
      for (int64_t u = 0; u <= dom.N; ++u)
        shell += (dom.q_weight(u) == dom.max_weight() - r);
      CHECK(total == shell);
    }
  }
}

TEST_CASE("specific shell counts") {
  CHECK(imbalance_shell_size(d34, 5, 3) == 4);
  CHECK(imbalance_shell_size(d24, 2, 2) == 2);
  CHECK(imbalance_shell_size(d34, d34.max_weight(), 0) == 1);
}

TEST_CASE("rm dimensions") {
  CHECK(rm_dimension(d34, 4) == 50);
  CHECK(rm_dimension(d34, 5) == 66);
  CHECK(rm_dimension(d34, -1) == 0);
  CHECK(rm_dimension(d34, 0) == 1);
  CHECK(rm_dimension(d34, d34.max_weight()) == 81);
  CHECK(rm_dimension(d24, 1) == 5);
  // dimension equals length minus zero count, for every r
  for (int r = -1; r < d34.max_weight(); ++r)
    CHECK(rm_dimension(d34, r) == 80 - static_cast<int64_t>(rm_zero_exponents(d34, r).size()));
}

TEST_CASE("sandwich dimensions") {
  CHECK(sandwich_dimension(d34, 5, {1}) == 62);
  CHECK(sandwich_dimension(d34, 5, {1, 3}) == rm_dimension(d34, 5));
  CHECK(sandwich_dimension(d34, 5, {}) == rm_dimension(d34, 4));
  CHECK_THROWS_AS(sandwich_dimension(d34, 5, {0}), InvalidI);
  for (int r = 0; r < d34.max_weight(); ++r) {
    const auto mr = imbalance_values(d34, r);
    CHECK(sandwich_dimension(d34, r, mr) == rm_dimension(d34, r));
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(2, 1, 9) == 10);
  CHECK(gaussian_binomial(4, 3, 2) == 15);
  CHECK(gaussian_binomial(2, 1, 4) == 5);
  CHECK(gaussian_binomial(4, 0, 3) == 1);
}
