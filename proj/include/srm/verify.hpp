#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "srm/analysis.hpp"
#include "srm/codes.hpp"
#include "srm/distance.hpp"

namespace srm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  int64_t millis = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int threads = 2;
  SearchLimits limits;
};

namespace verify_detail {

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline void check_eq(SuiteReport& rep, const std::string& name, int64_t expected,
                     int64_t computed) {
  rep.checks.push_back({name, expected == computed, str(expected), str(computed)});
}

inline void check_true(SuiteReport& rep, const std::string& name, bool ok,
                       const std::string& note = "") {
  rep.checks.push_back({name, ok, "true", ok ? "true" : (note.empty() ? "false" : note)});
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

inline Codeword sampled_codeword(const Code& c, std::mt19937_64& rng) {
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

struct TableEntry {
  int r;
  std::vector<int> I;
  int64_t K;
  int64_t D;
};

// reference parameters of the two builtin GF(81) tables
inline const std::vector<TableEntry>& table_one() {
  static const std::vector<TableEntry> t = {
      {1, {1}, 5, 54},   {3, {1}, 27, 18},   {5, {1}, 62, 6},  {7, {1}, 80, 2},
      {1, {3}, 1, 81},   {3, {3}, 19, 27},   {5, {3}, 54, 9},  {7, {3}, 76, 3},
      {1, {1, 3}, 5, 54}, {3, {1, 3}, 31, 18}, {5, {1, 3}, 66, 6}, {7, {1, 3}, 80, 2},
  };
  return t;
}
inline const std::vector<TableEntry>& table_two() {
  static const std::vector<TableEntry> t = {
      {2, {0}, 9, 45},        {4, {0}, 40, 9},        {6, {0}, 70, 5},
      {2, {2}, 11, 36},       {4, {2}, 39, 16},       {6, {2}, 72, 4},
      {2, {4}, 5, 54},        {4, {4}, 33, 18},       {6, {4}, 66, 6},
      {2, {0, 2}, 15, 27},    {4, {0, 2}, 48, 9},     {6, {0, 2}, 76, 3},
      {2, {0, 4}, 9, 45},     {4, {0, 4}, 42, 9},     {6, {0, 4}, 70, 5},
      {2, {2, 4}, 11, 36},    {4, {2, 4}, 41, 16},    {6, {2, 4}, 72, 4},
      {2, {0, 2, 4}, 15, 27}, {4, {0, 2, 4}, 50, 9},  {6, {0, 2, 4}, 76, 3},
  };
  return t;
}
inline std::vector<TableEntry> all_table_entries() {
  std::vector<TableEntry> all = table_one();
  const auto& two = table_two();
  all.insert(all.end(), two.begin(), two.end());
  return all;
}

inline std::string entry_name(const TableEntry& e) {
  std::string s = "C_3(" + std::to_string(e.r) + ",{";
  for (size_t i = 0; i < e.I.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(e.I[i]);
  }
  s += "},4)";
  return s;
}

inline void run_table(SuiteReport& rep, const std::vector<TableEntry>& entries,
                      const VerifyOptions& opt) {
  FieldPtr F = Field::build(3, 1, 4);
  const ExponentDomain dom = ExponentDomain::make(3, 4);
  std::vector<std::vector<CheckResult>> slots(entries.size());
  parallel_for(static_cast<int>(entries.size()), opt.threads, [&](int i) {
    const TableEntry& e = entries[static_cast<size_t>(i)];
    std::vector<CheckResult>& out = slots[static_cast<size_t>(i)];
    const std::string name = entry_name(e);
    try {
    Code c = Code::sandwich(F, CodeKind::extended, e.r, e.I);
    const int64_t k_formula = sandwich_dimension(dom, e.r, e.I);
    const int64_t k_rank = c.generator_matrix().rows;
    out.push_back({name + " K (formula)", k_formula == e.K, str(e.K), str(k_formula)});
    out.push_back({name + " K (rank)", k_rank == e.K, str(e.K), str(k_rank)});
    DistanceReport dr = min_distance(c, DistanceStrategy::automatic, opt.limits);
    const bool dok = dr.exact && *dr.exact == e.D && c.membership(*dr.witness);
    out.push_back({name + " D (engine)", dok, str(e.D),
                   dr.exact ? str(*dr.exact) : "bounds [" + str(dr.lower) + "," +
                                                   (dr.upper ? str(*dr.upper) : "?") + "]"});
    // the structural branch, when it speaks, must agree with the engine
    const StructuralBound sb = distance_bounds(c).structural;
    if (sb.covered) {
      const bool sok = sb.exact ? (sb.value == e.D) : (sb.value <= e.D);
      out.push_back({name + " structural bound", sok,
                     sb.exact ? "= " + str(e.D) : "<= " + str(e.D), str(sb.value)});
    }
    } catch (const std::exception& ex) {
      out.push_back({name + " threw", false, "no exception", ex.what()});
    }
  });
  for (auto& s : slots)
    for (auto& c : s) rep.checks.push_back(std::move(c));
}

}  // namespace verify_detail

inline std::vector<std::string> suite_names() {
  return {"example", "table1", "table2", "duality",  "affine",
          "newton",  "minvectors", "powersums", "counting", "distances"};
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;

  if (name == "example") {
    FieldPtr F = Field::build(3, 1, 4);
    const ExponentDomain dom = ExponentDomain::make(3, 4);
    check_eq(rep, "dim R_3(4,4) (formula)", 50, rm_dimension(dom, 4));
    check_eq(rep, "dim R_3(5,4) (formula)", 66, rm_dimension(dom, 5));
    Code r4 = Code::rm(F, CodeKind::extended, 4);
    Code r5 = Code::rm(F, CodeKind::extended, 5);
    check_eq(rep, "dim R_3(4,4) (rank)", 50, r4.generator_matrix().rows);
    check_eq(rep, "dim R_3(5,4) (rank)", 66, r5.generator_matrix().rows);
    const ExponentSet th = imbalance_shell(dom, 5, 3);
    check_true(rep, "shell (5,3) is {11,19,33,57}",
               th.exps == std::vector<int64_t>{11, 19, 33, 57});
    check_eq(rep, "shell (5,3) size by formula", 4, imbalance_shell_size(dom, 5, 3));
    Code c = Code::sandwich(F, CodeKind::extended, 5, {1});
    check_eq(rep, "dim C_3(5,{1},4) (formula)", 62, sandwich_dimension(dom, 5, {1}));
    check_eq(rep, "dim C_3(5,{1},4) (rank)", 62, c.generator_matrix().rows);
    // nesting on the punctured codes, by generator-row membership
    Code lo = Code::rm(F, CodeKind::punctured, 4);
    Code mid = c.with_kind(CodeKind::punctured);
    Code hi = Code::rm(F, CodeKind::punctured, 5);
    bool nest = true;
    for (int r = 0; r < lo.generator_matrix().rows; ++r)
      nest = nest && mid.membership(row_word(lo, r));
    for (int r = 0; r < mid.generator_matrix().rows; ++r)
      nest = nest && hi.membership(row_word(mid, r));
    nest = nest && lo.dimension() < mid.dimension() && mid.dimension() < hi.dimension();
    check_true(rep, "R_3(4,4)* < C_3(5,{1},4)* < R_3(5,4)*", nest);
  } else if (name == "table1") {
    run_table(rep, table_one(), opt);
  } else if (name == "table2") {
    run_table(rep, table_two(), opt);
  } else if (name == "duality") {
    FieldPtr F = Field::build(3, 1, 4);
    const ExponentDomain dom = ExponentDomain::make(3, 4);
    const auto entries = all_table_entries();
    std::vector<std::vector<CheckResult>> slots(entries.size());
    parallel_for(static_cast<int>(entries.size()), opt.threads, [&](int i) {
      const TableEntry& e = entries[static_cast<size_t>(i)];
      auto& out = slots[static_cast<size_t>(i)];
      const std::string name = entry_name(e);
      try {
      Code c = Code::sandwich(F, CodeKind::extended, e.r, e.I);
      Code d = dual(c);  // verifies orthogonality and the dimension sum
      out.push_back({name + " dim + dual dim", c.dimension() + d.dimension() == 81, "81",
                     str(c.dimension() + d.dimension())});
      std::vector<int> comp;
      for (int k : imbalance_values(dom, e.r))
        if (std::find(e.I.begin(), e.I.end(), k) == e.I.end()) comp.push_back(k);
      const bool params = d.r() == dom.max_weight() - e.r && d.I() == comp;
      out.push_back({name + " dual params", params, "(8-r, complement)", "checked"});
      // zero set of the dual = inverses of the complement of the zero set
      std::vector<int64_t> inv;
      for (int64_t u = 1; u < 80; ++u)
        if (!c.zeros().contains(u)) inv.push_back((80 - u) % 80);
      std::sort(inv.begin(), inv.end());
      out.push_back({name + " dual defining set", d.zeros().exps == inv,
                     "inverse complement", d.zeros().exps == inv ? "match" : "mismatch"});
      const bool gg = all_zero(matmul(c.generator_matrix(),
                                      transpose(d.generator_matrix()), *F));
      out.push_back({name + " G dual-G orthogonal", gg, "0", gg ? "0" : "nonzero"});
      } catch (const std::exception& ex) {
        out.push_back({name + " threw", false, "no exception", ex.what()});
      }
    });
    for (auto& s : slots)
      for (auto& cr : s) rep.checks.push_back(std::move(cr));
    Code spot = Code::sandwich(F, CodeKind::extended, 5, {1});
    Code spot_dual = dual(spot);
    check_true(rep, "dual C_3(5,{1},4) = C_3(3,{3},4)",
               spot_dual.same_code(Code::sandwich(F, CodeKind::extended, 3, {3})));
    check_eq(rep, "spot dims 62/19", 19, spot_dual.dimension());
  } else if (name == "affine") {
    FieldPtr F = Field::build(3, 1, 4);
    const ExponentDomain dom = ExponentDomain::make(3, 4);
    const auto entries = all_table_entries();
    std::vector<std::vector<CheckResult>> slots(entries.size());
    parallel_for(static_cast<int>(entries.size()), opt.threads, [&](int i) {
      const TableEntry& e = entries[static_cast<size_t>(i)];
      auto& out = slots[static_cast<size_t>(i)];
      const std::string name = entry_name(e);
      try {
      Code c = Code::sandwich(F, CodeKind::extended, e.r, e.I);
      out.push_back({name + " defining set downset-closed", c.is_affine_invariant(), "true",
                     c.is_affine_invariant() ? "true" : "false"});
      std::mt19937_64 rng(0x5eed0 + static_cast<uint64_t>(i));
      std::uniform_int_distribution<int64_t> expo(0, 79);
      bool kept = true;
      for (int t = 0; t < 100 && kept; ++t) {
        Codeword x = sampled_codeword(c, rng);
        const Elt u = F->alpha_pow(expo(rng));
        const Elt v = (t % 4 == 0) ? F->zero() : F->alpha_pow(expo(rng));
        Codeword y = affine_permute(*F, x, u, v);
        kept = y.weight() == x.weight() && c.membership(y);
      }
      out.push_back({name + " 100 affine permutations keep membership", kept, "true",
                     kept ? "true" : "false"});
      } catch (const std::exception& ex) {
        out.push_back({name + " threw", false, "no exception", ex.what()});
      }
    });
    for (auto& s : slots)
      for (auto& cr : s) rep.checks.push_back(std::move(cr));
    check_true(rep, "counterexample {0,4,12,36,28} is not downset-closed",
               !is_downset_closed(dom, {0, 4, 12, 36, 28}));
  } else if (name == "newton") {
    FieldPtr F3 = Field::build(3, 1, 4);
    const auto entries = all_table_entries();
    std::atomic<int64_t> words{0}, clean{0};
    std::vector<char> sc_ok(entries.size(), 1);
    parallel_for(static_cast<int>(entries.size()), opt.threads, [&](int i) {
      const TableEntry& e = entries[static_cast<size_t>(i)];
      Code c = Code::sandwich(F3, CodeKind::punctured, e.r, e.I);
      if (c.dimension() == 0) return;
      std::mt19937_64 rng(0xab1e + static_cast<uint64_t>(i));
      for (int t = 0; t < 31; ++t) {
        Codeword x = sampled_codeword(c, rng);
        if (x.is_zero()) continue;
        ++words;
        if (newton_residuals(*F3, x).clean()) ++clean;
      }
      // system check on one extracted pair per code, plus a perturbed copy
      Codeword x = sampled_codeword(c, rng);
      while (x.is_zero()) x = sampled_codeword(c, rng);
      MSSpectrum ms = ms_spectrum(*F3, x);
      LocatorPoly sig = locator_polynomial(*F3, x);
      bool good = sc_system_holds(c, x.weight(), ms, sig);
      MSSpectrum bad = ms;
      const int64_t t0i = c.zeros().exps.empty() ? 79 : c.zeros().exps.front();
      bad.lam[static_cast<size_t>(t0i)] = F3->add(bad.lam[static_cast<size_t>(t0i)], F3->one());
      good = good && !sc_system_holds(c, x.weight(), bad, sig);
      sc_ok[static_cast<size_t>(i)] = good ? 1 : 0;
    });
    check_true(rep, "sampled words >= 1000", words.load() >= 1000,
               "only " + str(words.load()));
    check_eq(rep, "clean Newton systems", words.load(), clean.load());
    bool all_sc = true;
    for (char v : sc_ok) all_sc = all_sc && v;
    check_true(rep, "system checker accepts extractions, rejects perturbations", all_sc);

    // the binary structured case contributes its minimum vectors
    FieldPtr F2 = Field::build(2, 1, 4);
    Code bin = Code::sandwich(F2, CodeKind::extended, 2, {0});
    PredictedMinVectors pm = predicted_min_vectors(bin);
    int64_t extra = 0, extra_clean = 0;
    for (const Codeword& w : pm.punctured) {
      ++extra;
      if (newton_residuals(*F2, w).clean()) ++extra_clean;
    }
    for (const Codeword& w : pm.extended) {
      ++extra;
      if (newton_residuals(*F2, puncture(w)).clean()) ++extra_clean;
    }
    check_eq(rep, "binary minimum vectors clean", extra, extra_clean);

    // spectral clauses on every minimum vector of R_2(1,4)*
    Code rm1 = Code::sandwich(F2, CodeKind::punctured, 2, {});
    PredictedMinVectors rmv = predicted_min_vectors(rm1);
    std::vector<Codeword> mv = min_weight_codewords(rm1, 7, opt.limits);
    check_true(rep, "R_2(1,4)* minimum vectors are the 15 predicted",
               mv == rmv.punctured && mv.size() == 15);
    bool clauses = true;
    for (const Codeword& w : mv) clauses = clauses && min_weight_spectrum_check(rm1, w).all();
    check_true(rep, "spectral clauses on all 15 minimum vectors", clauses);

    // GF(256) instance: predicted vectors are members (85 subspaces)
    FieldPtr F4 = Field::build(2, 2, 4);
    Code quart = Code::sandwich(F4, CodeKind::extended, 4, {6});
    PredictedMinVectors qm = predicted_min_vectors(quart);
    check_true(rep, "C_4(4,{6},4) lands in the subspace case",
               qm.kind == MinVectorCase::subspace_over_q);
    check_eq(rep, "C_4(4,{6},4) predicted punctured vectors", 85 * 3,
             static_cast<int64_t>(qm.punctured.size()));
    check_eq(rep, "C_4(4,{6},4) predicted extended vectors", 85 * 4 * 3,
             static_cast<int64_t>(qm.extended.size()));
    check_eq(rep, "C_4(4,{6},4) predicted weight", 63, qm.punctured_weight);
  } else if (name == "minvectors") {
    FieldPtr F2 = Field::build(2, 1, 4);
    Code c = Code::sandwich(F2, CodeKind::extended, 2, {0});
    int64_t count = 0;
    detail::for_each_codeword(c, [&](const uint8_t*) { ++count; });
    check_eq(rep, "C_2(2,{0},4) has 512 codewords", 512, count + 1);
    DistanceReport dr = min_distance(c, DistanceStrategy::automatic, opt.limits);
    check_true(rep, "distance 4", dr.exact && *dr.exact == 4);
    PredictedMinVectors pm = predicted_min_vectors(c);
    std::vector<Codeword> w4 = min_weight_codewords(c, 4, opt.limits);
    check_eq(rep, "weight-4 words", 20, static_cast<int64_t>(w4.size()));
    check_true(rep, "weight-4 words are exactly the affine-line indicators",
               w4 == pm.extended);
    Code cp = c.with_kind(CodeKind::punctured);
    DistanceReport dp = min_distance(cp, DistanceStrategy::automatic, opt.limits);
    check_true(rep, "punctured distance 3", dp.exact && *dp.exact == 3);
    std::vector<Codeword> w3 = min_weight_codewords(cp, 3, opt.limits);
    check_true(rep, "punctured minimum vectors are the 5 line indicators",
               w3 == pm.punctured && w3.size() == 5);

    // ternary relative: inclusion + count + exact distance
    FieldPtr F3 = Field::build(3, 1, 4);
    Code t = Code::sandwich(F3, CodeKind::extended, 4, {0});
    PredictedMinVectors tm = predicted_min_vectors(t);  // membership-checked inside
    check_eq(rep, "C_3(4,{0},4) predicted extended vectors", 180,
             static_cast<int64_t>(tm.extended.size()));
    std::vector<Codeword> dedup = tm.extended;
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    check_eq(rep, "C_3(4,{0},4) predicted vectors distinct", 180,
             static_cast<int64_t>(dedup.size()));
    DistanceReport td = min_distance(t, DistanceStrategy::automatic, opt.limits);
    check_true(rep, "C_3(4,{0},4) distance 9", td.exact && *td.exact == 9);
    check_eq(rep, "C_3(4,{0},4) predicted weight", 9, tm.extended_weight);
  } else if (name == "powersums") {
    FieldPtr F = Field::build(3, 1, 4);
    const ExponentDomain dom = ExponentDomain::make(3, 4);
    bool vanish = true;
    bool above_nonzero = false;
    for (int dim = 1; dim <= 3 && vanish; ++dim) {
      for (const Subspace& V : enumerate_subspaces(*F, 1, dim)) {
        const std::vector<Elt> el = V.elements(*F);
        for (int64_t i = 1; i <= 80; ++i) {
          Elt acc = F->zero();
          for (Elt v : el) acc = F->add(acc, F->pow(v, i));
          if (dom.q_weight(i) < dim * 2) {
            if (!acc.is_zero()) vanish = false;
          } else if (!acc.is_zero()) {
            above_nonzero = true;
          }
        }
      }
    }
    check_true(rep, "power sums vanish below the weight threshold (dims 1-3)", vanish);
    check_true(rep, "some sum above the threshold is nonzero", above_nonzero);
  } else if (name == "counting") {
    struct Dom { int64_t q; int n; };
    for (Dom d : {Dom{2, 4}, Dom{2, 6}, Dom{3, 4}, Dom{4, 4}}) {
      const ExponentDomain dom = ExponentDomain::make(d.q, d.n);
      bool match = true;
      bool partition = true;
      for (int r = 0; r <= dom.max_weight() && match; ++r) {
        int64_t total = 0;
        for (int k = 0; k <= dom.max_imbalance(); ++k) {
          const int64_t formula = imbalance_shell_size(dom, r, k);
          if (formula != static_cast<int64_t>(imbalance_shell(dom, r, k).size()))
            match = false;
          total += formula;
        }
        int64_t shell = 0;
        for (int64_t u = 0; u <= dom.N; ++u)
          shell += (dom.q_weight(u) == dom.max_weight() - r);
        if (total != shell) partition = false;
      }
      const std::string tag = "q=" + str(d.q) + ", n=" + str(d.n);
      check_true(rep, "shell formula matches enumeration, " + tag, match);
      check_true(rep, "shells partition each weight class, " + tag, partition);
    }
  } else if (name == "distances") {
    FieldPtr F = Field::build(3, 1, 4);
    Code eq = Code::sandwich(F, CodeKind::extended, 5, {3});
    const StructuralBound seq = distance_bounds(eq).structural;
    DistanceReport deq = min_distance(eq, DistanceStrategy::automatic, opt.limits);
    check_true(rep, "C_3(5,{3},4) equality branch", seq.covered && seq.exact);
    check_eq(rep, "C_3(5,{3},4) branch value", 9, seq.covered ? seq.value : -1);
    check_true(rep, "C_3(5,{3},4) engine agrees", deq.exact && *deq.exact == 9);

    Code ge = Code::sandwich(F, CodeKind::extended, 6, {0});
    const StructuralBound sge = distance_bounds(ge).structural;
    DistanceReport dge = min_distance(ge, DistanceStrategy::automatic, opt.limits);
    check_true(rep, "C_3(6,{0},4) lower branch", sge.covered && !sge.exact);
    check_eq(rep, "C_3(6,{0},4) branch value", 5, sge.covered ? sge.value : -1);
    check_true(rep, "C_3(6,{0},4) attains the bound", dge.exact && *dge.exact == 5);

    // classical distances of R_3(r,4), r = 0..7
    const int64_t expect[8] = {81, 54, 27, 18, 9, 6, 3, 2};
    std::vector<CheckResult> slots(8);
    parallel_for(8, opt.threads, [&](int r) {
      Code rm = Code::rm(F, CodeKind::extended, r);
      DistanceReport dr = min_distance(rm, DistanceStrategy::automatic, opt.limits);
      slots[static_cast<size_t>(r)] = {"dist R_3(" + str(r) + ",4)",
                                       dr.exact && *dr.exact == expect[r], str(expect[r]),
                                       dr.exact ? str(*dr.exact) : "none"};
    });
    for (auto& cr : slots) rep.checks.push_back(std::move(cr));
  } else {
    throw RangeError("unknown verification suite: " + name);
  }

  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

}  // namespace srm
