#include "srm/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace srm;

namespace {
FieldPtr gf81() {
  static FieldPtr f = Field::build(3, 1, 4);
  return f;
}
}  // namespace

TEST_CASE("code descriptor") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  json j = code_descriptor(c);
  CHECK(j["q"] == 3);
  CHECK(j["n"] == 4);
  CHECK(j["r"] == 5);
  CHECK(j["I"] == json::array({1}));
  CHECK(j["kind"] == "extended");
}

TEST_CASE("defining set serializes with the extension index first") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  json j(c.defining_set());
  REQUIRE(j.size() == 19);
  CHECK(j[0] == 0);
  CHECK(j[1] == 1);
}

TEST_CASE("word strings") {
  const Field& F = *gf81();
  Codeword x = indicator_word(F, CodeKind::punctured, {F.one()}, 2);
  std::string s = word_string(x);
  REQUIRE(s.size() == 80);
  CHECK(s[0] == '2');
  CHECK(s.find_first_not_of("02") == std::string::npos);
}

TEST_CASE("matrix csv") {
  Matrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(1, 2) = 2;
  CHECK(matrix_csv(m) == "1,0,0\n0,0,2\n");
}

TEST_CASE("distance report json") {
  Code c = Code::sandwich(gf81(), CodeKind::extended, 1, {1});
  DistanceReport dr = min_distance(c);
  json j = to_json(dr);
  CHECK(j["exact"] == 54);
  CHECK(j["strategy"] == "exhaustive");
  CHECK(j["witness"].get<std::string>().size() == 81);
}

TEST_CASE("field info json") {
  json j = field_info(*gf81());
  CHECK(j["q"] == 3);
  CHECK(j["order"] == 80);
  CHECK(j["modulus"] == json::array({2, 0, 0, 2, 1}));
  CHECK(j["descriptor"].get<std::string>().rfind("GF(3^1)^4/", 0) == 0);
}

TEST_CASE("exports are byte-identical across independent builds") {
  Code a = Code::sandwich(gf81(), CodeKind::extended, 5, {1});
  Code b = Code::sandwich(Field::build(3, 1, 4), CodeKind::extended, 5, {1});
  CHECK(matrix_csv(a.generator_matrix()) == matrix_csv(b.generator_matrix()));
  CHECK(matrix_csv(a.parity_matrix()) == matrix_csv(b.parity_matrix()));
  CHECK(json(a.defining_set()).dump() == json(b.defining_set()).dump());
  DistanceReport da = min_distance(a);
  DistanceReport db = min_distance(b);
  CHECK(to_json(da).dump() == to_json(db).dump());
}
