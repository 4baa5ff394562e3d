// Command-line front end: build the code families over GF(q), print their
// parameters, run the verification suites, and export matrices/defining
// sets/minimum vectors as reproducible artifacts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srm/serialize.hpp"
#include "srm/verify.hpp"

namespace {

using srm::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  int64_t q = 3;
  int n = 4;
  std::vector<int> modulus;
  int r = 0;
  std::vector<int> I;
  std::string family = "sandwich";
  std::string kind = "extended";
  std::string strategy = "auto";
  int w = -1;
  std::string what;
  std::string out;
  std::string format = "text";
  uint64_t budget = 4000000000ull;
  int threads = 2;
  std::string suite;
  std::string config;
};

// q = p^l with p prime; rejects non-prime-powers
std::pair<int64_t, int> factor_prime_power(int64_t q) {
  if (q < 2) throw srm::NonPrime("q must be a prime power >= 2");
  int64_t p = q;
  for (int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int l = 0;
  int64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++l;
  }
  if (v != 1) throw srm::NonPrime("q is not a prime power");
  return {p, l};
}

void apply_config(Options& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw srm::Error("cannot open config file: " + o.config);
  json j = json::parse(in);
  for (const auto& [key, value] : j.items()) {
    if (key == "q") o.q = value.get<int64_t>();
    else if (key == "n") o.n = value.get<int>();
    else if (key == "modulus") o.modulus = value.get<std::vector<int>>();
    else if (key == "r") o.r = value.get<int>();
    else if (key == "I") o.I = value.get<std::vector<int>>();
    else if (key == "family") o.family = value.get<std::string>();
    else if (key == "kind") o.kind = value.get<std::string>();
    else if (key == "strategy") o.strategy = value.get<std::string>();
    else if (key == "w") o.w = value.get<int>();
    else if (key == "what") o.what = value.get<std::string>();
    else if (key == "out") o.out = value.get<std::string>();
    else if (key == "format") o.format = value.get<std::string>();
    else if (key == "budget") o.budget = value.get<uint64_t>();
    else if (key == "threads") o.threads = value.get<int>();
    else if (key == "suite") o.suite = value.get<std::string>();
    else throw srm::Error("unknown config key: " + key);
  }
}

srm::FieldPtr build_field(const Options& o) {
  auto [p, l] = factor_prime_power(o.q);
  std::optional<std::vector<int>> mod;
  if (!o.modulus.empty()) mod = o.modulus;
  return srm::Field::build(p, l, o.n, mod);
}

srm::Code build_code(const Options& o) {
  srm::FieldPtr F = build_field(o);
  if (o.kind != "punctured" && o.kind != "extended")
    throw srm::RangeError("kind must be punctured or extended");
  const srm::CodeKind kind =
      o.kind == "punctured" ? srm::CodeKind::punctured : srm::CodeKind::extended;
  if (o.family == "rm") return srm::Code::rm(F, kind, o.r);
  if (o.family == "sandwich") return srm::Code::sandwich(F, kind, o.r, o.I);
  throw srm::RangeError("family must be rm or sandwich");
}

srm::DistanceStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return srm::DistanceStrategy::automatic;
  if (s == "exhaustive") return srm::DistanceStrategy::exhaustive;
  if (s == "support") return srm::DistanceStrategy::support;
  if (s == "bz") return srm::DistanceStrategy::bz;
  throw srm::RangeError("strategy must be auto, exhaustive, support or bz");
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_field_info(const Options& o) {
  srm::FieldPtr F = build_field(o);
  json j = srm::field_info(*F);
  std::string text = F->descriptor() + "\n";
  text += "  p=" + std::to_string(F->p()) + " l=" + std::to_string(F->l()) +
          " n=" + std::to_string(F->n()) + " q=" + std::to_string(F->q()) +
          " |F|=" + std::to_string(F->size()) + " N=" + std::to_string(F->order()) + "\n";
  text += "  modulus (little-endian):";
  for (int c : F->modulus()) text += " " + std::to_string(c);
  text += "\n";
  emit(o, j, text);
  return kExitOk;
}

int cmd_code_params(const Options& o) {
  srm::Code c = build_code(o);
  const srm::ExponentDomain dom = c.domain();
  int64_t k_formula = c.dimension();
  if (c.family() == srm::CodeFamily::sandwich)
    k_formula = srm::sandwich_dimension(dom, c.r(), c.I());
  else if (c.family() == srm::CodeFamily::rm)
    k_formula = srm::rm_dimension(dom, c.r());
  const int64_t k_rank = c.generator_matrix().rows;
  if (k_formula != k_rank) throw srm::Error("dimension formula and rank disagree");
  srm::DistanceReport dr =
      srm::min_distance(c, parse_strategy(o.strategy), srm::SearchLimits{o.budget});
  json j{{"code", srm::code_descriptor(c)},
         {"length", c.length()},
         {"dimension", k_rank},
         {"distance", srm::to_json(dr)},
         {"bounds", srm::to_json(srm::distance_bounds(c))}};
  std::string text = "[" + std::to_string(c.length()) + "," + std::to_string(k_rank) + "," +
                     (dr.exact ? std::to_string(*dr.exact) : "?") + "]";
  if (!dr.exact)
    text += "  D in [" + std::to_string(dr.lower) + "," +
            (dr.upper ? std::to_string(*dr.upper) : "?") + "]";
  text += "  strategy=" + dr.strategy + "\n";
  emit(o, j, text);
  return dr.exact ? kExitOk : kExitBudget;
}

int cmd_code_dual(const Options& o) {
  srm::Code c = build_code(o);
  srm::Code d = srm::dual(c);
  json j{{"code", srm::code_descriptor(c)},
         {"dimension", c.dimension()},
         {"dual", srm::code_descriptor(d)},
         {"dual_dimension", d.dimension()}};
  std::string text = "dual of r=" + std::to_string(c.r()) + " is r=" + std::to_string(d.r()) +
                     ", I={";
  for (size_t i = 0; i < d.I().size(); ++i)
    text += (i ? "," : "") + std::to_string(d.I()[i]);
  text += "}; dims " + std::to_string(c.dimension()) + "+" + std::to_string(d.dimension()) +
          "=" + std::to_string(c.length()) + "\n";
  emit(o, j, text);
  return kExitOk;
}

int cmd_code_mindist(const Options& o) {
  srm::Code c = build_code(o);
  srm::DistanceReport dr =
      srm::min_distance(c, parse_strategy(o.strategy), srm::SearchLimits{o.budget});
  json j{{"code", srm::code_descriptor(c)},
         {"distance", srm::to_json(dr)},
         {"bounds", srm::to_json(srm::distance_bounds(c))}};
  std::string text;
  if (dr.exact)
    text = "exact " + std::to_string(*dr.exact);
  else
    text = "bounds [" + std::to_string(dr.lower) + "," +
           (dr.upper ? std::to_string(*dr.upper) : "?") + "]";
  text += "  strategy=" + dr.strategy + " method=" + dr.lower_method + "\n";
  emit(o, j, text);
  return dr.exact ? kExitOk : kExitBudget;
}

int cmd_code_minvecs(const Options& o) {
  srm::Code c = build_code(o);
  int w = o.w;
  if (w < 0) {
    srm::DistanceReport dr =
        srm::min_distance(c, parse_strategy(o.strategy), srm::SearchLimits{o.budget});
    if (!dr.exact) return kExitBudget;
    w = static_cast<int>(*dr.exact);
  }
  std::vector<srm::Codeword> words =
      srm::min_weight_codewords(c, w, srm::SearchLimits{o.budget});
  json list = json::array();
  for (const auto& x : words) list.push_back(srm::word_string(x));
  json j{{"code", srm::code_descriptor(c)},
         {"weight", w},
         {"count", words.size()},
         {"words", list}};
  std::string text =
      std::to_string(words.size()) + " words of weight " + std::to_string(w) + "\n";
  for (const auto& x : words) text += srm::word_string(x) + "\n";
  emit(o, j, text);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  srm::VerifyOptions vo;
  vo.threads = o.threads;
  vo.limits = srm::SearchLimits{o.budget};
  srm::SuiteReport rep = srm::run_suite(o.suite, vo);
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"name", c.name},
                            {"pass", c.pass},
                            {"expected", c.expected},
                            {"computed", c.computed}});
    json j{{"suite", rep.suite},
           {"pass", rep.pass()},
           {"millis", rep.millis},
           {"checks", checks}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.pass) std::cout << "  expected " << c.expected << ", computed " << c.computed;
      std::cout << "\n";
    }
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "  suite " << rep.suite << " ("
              << rep.millis << " ms)\n";
  }
  return rep.pass() ? kExitOk : kExitMismatch;
}

int cmd_export(const Options& o) {
  srm::Code c = build_code(o);
  std::string payload;
  if (o.what == "generator") {
    payload = srm::matrix_csv(c.generator_matrix());
  } else if (o.what == "parity") {
    payload = srm::matrix_csv(c.parity_matrix());
  } else if (o.what == "defset") {
    payload = json(c.defining_set()).dump() + "\n";
  } else if (o.what == "minvectors") {
    int w = o.w;
    if (w < 0) {
      srm::DistanceReport dr =
          srm::min_distance(c, parse_strategy(o.strategy), srm::SearchLimits{o.budget});
      if (!dr.exact) return kExitBudget;
      w = static_cast<int>(*dr.exact);
    }
    for (const auto& x : srm::min_weight_codewords(c, w, srm::SearchLimits{o.budget}))
      payload += srm::word_string(x) + "\n";
  } else {
    throw srm::RangeError("what must be generator, parity, defset or minvectors");
  }
  if (o.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw srm::Error("cannot open output file: " + o.out);
    out << payload;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"sandwiched generalized Reed-Muller code toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow a subcommand
  app.add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", o.budget);
  app.add_option("--threads", o.threads);
  app.add_option("--config", o.config);

  auto add_field_flags = [&](CLI::App* cmd) {
    cmd->add_option("--q", o.q);
    cmd->add_option("--n", o.n);
    cmd->add_option("--modulus", o.modulus)->delimiter(',');
  };
  auto add_code_flags = [&](CLI::App* cmd) {
    add_field_flags(cmd);
    cmd->add_option("--r", o.r);
    cmd->add_option("--I", o.I)->delimiter(',');
    cmd->add_option("--family", o.family)->check(CLI::IsMember({"rm", "sandwich"}));
    cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"punctured", "extended"}));
    cmd->add_option("--strategy", o.strategy)
        ->check(CLI::IsMember({"auto", "exhaustive", "support", "bz"}));
    cmd->add_option("--w", o.w);
  };

  CLI::App* field = app.add_subcommand("field", "field tower inspection");
  CLI::App* field_info = field->add_subcommand("info", "print the field parameters");
  add_field_flags(field_info);

  CLI::App* code = app.add_subcommand("code", "code construction and search");
  CLI::App* code_params = code->add_subcommand("params", "length, dimension, distance");
  CLI::App* code_dual = code->add_subcommand("dual", "dual code parameters");
  CLI::App* code_mindist = code->add_subcommand("mindist", "minimum distance report");
  CLI::App* code_minvecs = code->add_subcommand("minvecs", "minimum-weight codewords");
  for (CLI::App* cmd : {code_params, code_dual, code_mindist, code_minvecs})
    add_code_flags(cmd);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(srm::suite_names()));

  CLI::App* exp = app.add_subcommand("export", "write matrices, defining sets or words");
  add_code_flags(exp);
  exp->add_option("--what", o.what)->required();
  exp->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    apply_config(o);
    if (field_info->parsed()) return cmd_field_info(o);
    if (code_params->parsed()) return cmd_code_params(o);
    if (code_dual->parsed()) return cmd_code_dual(o);
    if (code_mindist->parsed()) return cmd_code_mindist(o);
    if (code_minvecs->parsed()) return cmd_code_minvecs(o);
    if (verify->parsed()) return cmd_verify(o);
    if (exp->parsed()) return cmd_export(o);
    std::cerr << "no command given\n";
    return kExitUsage;
  } catch (const srm::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
