#pragma once

#include <string>

#include <json.hpp>

#include "srm/analysis.hpp"
#include "srm/codes.hpp"
#include "srm/distance.hpp"

namespace srm {

using json = nlohmann::ordered_json;

inline json to_json(const ExponentSet& s) { return json(s.exps); }

inline const char* kind_name(CodeKind k) {
  return k == CodeKind::extended ? "extended" : "punctured";
}
inline const char* family_name(CodeFamily f) {
  switch (f) {
    case CodeFamily::rm: return "rm";
    case CodeFamily::sandwich: return "sandwich";
    default: return "raw";
  }
}

inline json code_descriptor(const Code& c) {
  return json{{"q", c.F().q()},
              {"n", c.F().n()},
              {"r", c.r()},
              {"I", c.I()},
              {"kind", kind_name(c.kind())}};
}

// Length-L digit string; labels above 9 use letters (q <= 36 in practice).
inline std::string word_string(const Codeword& x) {
  static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s;
  s.reserve(x.v.size());
  for (uint8_t c : x.v) s.push_back(c < 36 ? digits[c] : '?');
  return s;
}

inline std::string matrix_csv(const Matrix& m) {
  std::string out;
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (c) out.push_back(',');
      out += std::to_string(static_cast<int>(m.at(r, c)));
    }
    out.push_back('\n');
  }
  return out;
}

inline json to_json(const StructuralBound& b) {
  json j{{"covered", b.covered}};
  if (b.covered) {
    j["exact"] = b.exact;
    j["value"] = b.value;
    j["branch"] = b.branch;
    j["degenerate"] = b.degenerate;
  }
  return j;
}

inline json to_json(const DistanceBounds& b) {
  return json{{"bch", b.bch},
              {"extended_shift", b.extended_shift},
              {"structural", to_json(b.structural)}};
}

inline json to_json(const DistanceReport& r) {
  json j{{"lower", r.lower},
         {"lower_method", r.lower_method},
         {"strategy", r.strategy},
         {"budget_exhausted", r.budget_exhausted}};
  if (r.upper) j["upper"] = *r.upper;
  if (r.exact) j["exact"] = *r.exact;
  if (r.witness) j["witness"] = word_string(*r.witness);
  return j;
}

inline json field_info(const Field& F) {
  return json{{"p", F.p()},          {"l", F.l()},
              {"n", F.n()},          {"q", F.q()},
              {"size", F.size()},    {"order", F.order()},
              {"modulus", F.modulus()},
              {"descriptor", F.descriptor()}};
}

}  // namespace srm
