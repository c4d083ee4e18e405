// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypersdf/analysis.hpp"
#include "hypersdf/cli.hpp"
#include "hypersdf/constructors.hpp"
#include "hypersdf/fixtures.hpp"
#include "hypersdf/harness.hpp"
#include "hypersdf/ring_format.hpp"
#include "hypersdf/sdf.hpp"
#include "oracle.hpp"

using namespace hypersdf;

namespace {

constexpr char const* standard_corpus =
    "fixtures+zomega:nMax=6,omegaMax=3+product:orderCap=4+quotients";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, std::string const& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(std::string const& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int cli(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  std::ostringstream o;
  std::ostringstream e;
  int const code = run_command(args, o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

std::string write_temp(std::string const& name, std::string const& text) {
  auto const path = std::filesystem::temp_directory_path() / ("hypersdf_acceptance_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool tables_match_mod4(HyperRing const& r, std::vector<long long> const& omega) {
  if (r.order() != 4) return false;
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      if (r.add(x, y) != (x + y) % 4) return false;
      if (oracle::cell(r, x, y) != oracle::zomega_cell(4, omega, x, y)) return false;
    }
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  auto const start = Clock::now();
  RingDocument const doc = parse_ring(r1_document());
  o.require(doc.ok(), "R1 document parses");
  if (!doc.ok()) return o;
  AxiomReport const axioms = validate_hyperring(*doc.ring);
  o.require(axioms.ok(), "five axioms on R1");
  SdfResult const s = is_sdf_absorbing(*doc.ring, doc.ring->subset({0, 2}));
  o.require(s.holds, "is_sdf_absorbing(R1, {0,2})");
  double const t = seconds_since(start);
  o.require(t < 1.0, "runtime < 1 s");
  o.note("axioms ok, sdf=true, " + std::to_string(t) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto const start = Clock::now();
  HyperRing const r2 = fixture_r2();
  SdfResult const w = is_weakly_sdf_absorbing(r2, r2.singleton(0), ScanMode::exhaustive);
  SdfResult const s = is_sdf_absorbing(r2, r2.singleton(0), ScanMode::exhaustive);
  o.require(w.holds, "weakly sdf on R2 {0}");
  o.require(w.firing_pairs == 0, "weak check has zero firing pairs");
  o.require(s.holds, "sdf on R2 {0}");
  o.require(s.firing == std::vector<std::pair<Element, Element>>{{2, 2}},
            "sdf fires exactly at (2,2)");
  std::string const path = write_temp("r2.hr", std::string(r2_document()));
  std::string out;
  int const code = cli({"sdf", path, "--ideal", "0", "--weak", "--format", "json"}, &out);
  o.require(code == 0, "CLI exit 0");
  if (code == 0) {
    auto const report = nlohmann::json::parse(out)["result"];
    o.require(report["weaklySdf"]["vacuous"] == true, "report marks the weak check vacuous");
    o.require(report["sdf"]["holds"] == true && report["sdf"]["firingPairs"] == 1,
              "report records sdf with one firing pair");
  }
  double const t = seconds_since(start);
  o.require(t < 1.0, "runtime < 1 s");
  o.note("weak firing 0, sdf firing (2,2), " + std::to_string(t) + " s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<long long> const all{0, 1, 2, 3};
  std::vector<long long> const odd{1, 3};
  HyperRing const a = zomega(4, all);
  HyperRing const b = zomega(4, odd);
  o.require(tables_match_mod4(a, all), "zomega(4,{0,1,2,3}) vs mod-4 evaluation");
  o.require(tables_match_mod4(b, odd), "zomega(4,{1,3}) vs mod-4 evaluation");
  o.require(tables_match_mod4(fixture_r1(), all), "R1 document vs mod-4 evaluation");
  o.require(tables_match_mod4(fixture_r2(), odd), "R2 document vs mod-4 evaluation");
  o.require(a.same_tables(fixture_r1()) && b.same_tables(fixture_r2()), "cell-for-cell equality");
  o.note("32 cells compared");
  return o;
}

Outcome criterion4(CorpusAnalysis& analysis) {
  Outcome o;
  auto const start = Clock::now();
  std::vector<TheoremVerdict> const verdicts = run_all(analysis);
  double const t = seconds_since(start);
  std::size_t cex = 0;
  for (TheoremVerdict const& v : verdicts) {
    if (v.gating && v.has_counterexample()) {
      o.require(false, v.id + " has " + std::to_string(v.counterexamples.size())
                           + " counterexamples");
    }
    cex += v.gating ? v.counterexamples.size() : 0;
  }
  std::string floor;
  for (char const* id : {"P0", "T1", "T3", "T12", "T15", "T16", "T17"}) {
    for (TheoremVerdict const& v : verdicts) {
      if (v.id == id) {
        floor += std::string(floor.empty() ? "" : " ") + id + "=" + std::to_string(v.premises_satisfied);
        o.require(v.premises_satisfied > 0, std::string(id) + " premisesSatisfied > 0");
      }
    }
  }
  o.require(t <= 600.0, "runtime <= 10 min");
  o.note(std::to_string(analysis.size()) + " rings, gating counterexamples " + std::to_string(cex)
         + ", premises " + floor + ", " + std::to_string(t) + " s");
  return o;
}

Outcome criterion5(CorpusAnalysis& analysis) {
  Outcome o;
  std::size_t pairs = 0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < analysis.size(); ++i) {
    RingAnalysis const& ra = analysis.at(i);
    for (ClassificationReport const& r : ra.ideals()) {
      if (!r.is_proper) continue;
      ++pairs;
      oracle::Set const p = oracle::to_set(r.members);
      bool const sdf = oracle::sdf(ra.ring(), p, false).holds;
      bool const weak = oracle::sdf(ra.ring(), p, true).holds;
      if (sdf == r.is_sdf && weak == r.is_weakly_sdf) {
        ++agree;
      } else {
        o.require(false, analysis.label(i) + " P=" + std::to_string(r.members.count()) + " elements");
      }
    }
  }
  o.require(pairs > 0, "corpus has proper hyperideals");
  o.note(std::to_string(agree) + "/" + std::to_string(pairs) + " (ring, P) pairs agree");
  return o;
}

Outcome criterion6(CorpusAnalysis& analysis) {
  Outcome o;
  std::size_t ideals = 0;
  std::size_t c_ideals = 0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < analysis.size(); ++i) {
    for (ClassificationReport const& r : analysis.at(i).ideals()) {
      ++ideals;
      if (!r.d_set.is_subset_of(r.radical)) ++violations;
      if (r.is_c_hyperideal) {
        ++c_ideals;
        if (r.d_set != r.radical) ++violations;
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " radical-law violations");
  o.note(std::to_string(ideals) + " hyperideals, " + std::to_string(c_ideals) + " C-hyperideals");
  return o;
}

Outcome criterion7(CorpusAnalysis& analysis) {
  Outcome o;
  std::size_t instances = 0;
  std::size_t full_sdf = 0;
  std::size_t corner_sdf = 0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < analysis.size(); ++i) {
    RingAnalysis const& ra = analysis.at(i);
    if (ra.ring().order() > 4) continue;
    MatrixRing const m(ra.ring(), 2, 256);
    for (ClassificationReport const& r : ra.ideals()) {
      if (!r.is_proper) continue;
      ++instances;
      bool const full = scan_matrix_sdf(m, r.members, SdfVariant::sdf).holds;
      bool const corner = scan_corner_sdf(m, r.members, SdfVariant::sdf).holds;
      bool const base = r.is_sdf;
      full_sdf += full ? 1 : 0;
      corner_sdf += corner ? 1 : 0;
      o.require(!full || base, analysis.label(i) + ": M2(P) sdf but P not sdf");
      // both routes decide the implication the same way
      if ((!full || base) == (!corner || base)) {
        ++agree;
      } else {
        o.require(false, analysis.label(i) + ": routes disagree");
      }
    }
  }
  TheoremVerdict const t14 = check_theorem("T14", analysis);
  o.require(!t14.has_counterexample(), "T14 verdict has no counterexample");
  o.require(instances > 0, "instances exist");
  o.note(std::to_string(instances) + " instances, routes agree on " + std::to_string(agree)
         + ", M2(P) sdf on " + std::to_string(full_sdf) + ", corner sdf on "
         + std::to_string(corner_sdf));
  return o;
}

Outcome criterion8() {
  Outcome o;
  HyperRing const z8 = zomega(8, std::vector<long long>{1, 9});
  SdfResult const s = is_sdf_absorbing(z8, z8.singleton(0));
  o.require(!s.holds && s.violations.front().x == 1 && s.violations.front().y == 3,
            "{0} not sdf with witness (1,3)");
  SdfResult const w = is_weakly_sdf_absorbing(z8, z8.subset({0, 4}));
  o.require(!w.holds && w.violations.front().x == 2 && w.violations.front().y == 4,
            "{0,4} not weakly sdf with witness (2,4)");
  oracle::SdfVerdict const os = oracle::sdf(z8, {0}, false);
  oracle::SdfVerdict const ow = oracle::sdf(z8, {0, 4}, true);
  o.require(!os.holds && os.witness == std::make_pair(Element{1}, Element{3}), "oracle agrees on (1,3)");
  o.require(!ow.holds && ow.witness == std::make_pair(Element{2}, Element{4}), "oracle agrees on (2,4)");
  // replay the witnesses on the raw tables
  oracle::Set const d13 = oracle::diff_of_squares(z8, 1, 3);
  oracle::Set const d24 = oracle::diff_of_squares(z8, 2, 4);
  o.require(d13 == oracle::Set{0} && oracle::minus(z8, 1, 3) == 6 && z8.add(1, 3) == 4,
            "replay (1,3)");
  o.require(d24 == oracle::Set{4} && oracle::minus(z8, 2, 4) == 6 && z8.add(2, 4) == 6,
            "replay (2,4)");
  std::string const path = write_temp("z8.hr", serialize_ring(z8));
  o.require(cli({"sdf", path, "--ideal", "0"}) == 1, "CLI exit 1 for {0}");
  o.require(cli({"sdf", path, "--ideal", "0,4", "--weak"}) == 1, "CLI exit 1 for {0,4}");
  o.note("witnesses (1,3) and (2,4) confirmed by the oracle");
  return o;
}

std::string replace_line(std::string_view doc, std::size_t line, std::string const& with) {
  std::istringstream in{std::string(doc)};
  std::string out;
  std::string text;
  for (std::size_t n = 1; std::getline(in, text); ++n) {
    if (n != line) {
      out += text + "\n";
    } else if (!with.empty()) {
      out += with + "\n";
    }
  }
  return out;
}

Outcome criterion9() {
  Outcome o;
  for (std::string_view doc : {r1_document(), r2_document()}) {
    RingDocument const parsed = parse_ring(doc);
    o.require(parsed.ok() && serialize_ring(*parsed.ring) == doc, "round trip");
  }
  struct Case {
    std::string name;
    std::string text;
    std::size_t line;
  };
  std::vector<Case> const cases{
      {"missing_mul_row", replace_line(r1_document(), 14, ""), 14},
      {"missing_add_row", replace_line(r1_document(), 9, ""), 9},
      {"short_add_row", replace_line(r1_document(), 7, "1 2 3"), 7},
      {"long_mul_row", replace_line(r1_document(), 11, "{0} {0} {0} {0} {0}"), 11},
      {"empty_cell", replace_line(r1_document(), 12, "{0} {} {0,2} {0,1,2,3}"), 12},
      {"bad_add_token", replace_line(r1_document(), 8, "2 3 ? 1"), 8},
      {"bad_cell_token", replace_line(r1_document(), 13, "{0} {0,two} {0} {0,2}"), 13},
      {"bad_order", replace_line(r1_document(), 2, "order -4"), 2},
  };
  for (Case const& c : cases) {
    std::string const path = write_temp(c.name + ".hr", c.text);
    std::string err;
    int const code = cli({"validate", path}, nullptr, &err);
    bool const numbered = err.find(path + ":" + std::to_string(c.line) + ":") != std::string::npos;
    o.require(code == 2 && numbered, c.name);
  }
  o.note("2 round trips, " + std::to_string(cases.size()) + " malformed documents exit 2 with line numbers");
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, std::string const& name, Outcome const& o) {
    all = all && o.pass;
    std::cout << "criterion " << n << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  };
  report(1, "R1 fixture", criterion1());
  report(2, "R2 fixture", criterion2());
  report(3, "zomega cross-check", criterion3());
  CorpusAnalysis analysis(generate_corpus(standard_corpus));
  report(4, "theorem sweep", criterion4(analysis));
  report(5, "oracle equivalence", criterion5(analysis));
  report(6, "radical laws", criterion6(analysis));
  report(7, "matrix theorem", criterion7(analysis));
  report(8, "negative controls", criterion8());
  report(9, "parser robustness", criterion9());
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
