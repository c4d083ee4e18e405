#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hypersdf/constructors.hpp"
#include "hypersdf/harness.hpp"
#include "hypersdf/ring_format.hpp"
#include "oracle.hpp"

using namespace hypersdf;

namespace {

char const* medium = "fixtures+zomega:nMax=5,omegaMax=3+product:orderCap=3+quotients";

void check_arithmetic(TheoremVerdict const& v) {
  CAPTURE(v.id);
  CHECK(v.conclusions_held + v.counterexamples.size() == v.premises_satisfied);
  CHECK(v.premises_satisfied + v.inapplicable <= v.instances_scanned);
  for (PartTally const& p : v.parts) {
    CHECK(p.held <= p.premises);
    CHECK(p.premises <= v.premises_satisfied);
  }
}

}  // namespace

TEST_CASE("registry order and lookup") {
  std::vector<std::string> ids;
  for (TheoremCase const& t : theorem_registry()) {
    ids.push_back(t.id);
    CHECK_FALSE(t.parts.empty());
    CHECK_FALSE(t.statement.empty());
  }
  std::vector<std::string> const expect{"P0",  "T1",  "T2",  "T3",  "T4",  "L5",  "C6",  "T7",
                                        "T8",  "T9",  "T10", "T11", "T12", "T13", "T14", "T15",
                                        "T16", "T17", "T18", "W1",  "W2",  "W3",  "W4",  "W2-conj"};
  CHECK(ids == expect);
  CHECK_FALSE(find_theorem("W2-conj").gating);
  CHECK(find_theorem("T15").gating);
  CHECK_THROWS_AS(find_theorem("T99"), UnknownTheorem);
  CorpusAnalysis a(generate_corpus("fixtures"));
  CHECK_THROWS_AS(check_theorem("T99", a), UnknownTheorem);
}

TEST_CASE("biconditionals carry a part per direction") {
  for (char const* id : {"T4", "T10", "T13", "T16", "T17", "T18"}) {
    CAPTURE(id);
    CHECK(find_theorem(id).parts.size() >= 2);
  }
  CHECK(find_theorem("W3").parts.size() == 3);
  CHECK(find_theorem("W4").parts.size() == 4);
}

TEST_CASE("fixtures-only corpus") {
  CorpusAnalysis a(generate_corpus("fixtures"));
  std::vector<TheoremVerdict> const all = run_all(a);
  CHECK(all.size() == 24);
  for (TheoremVerdict const& v : all) {
    CHECK_FALSE(v.has_counterexample());
    check_arithmetic(v);
  }
  TheoremVerdict const t1 = check_theorem("T1", a);
  CHECK(t1.premises_satisfied == 1);
}

TEST_CASE("empty corpus is vacuous everywhere") {
  CorpusAnalysis a(generate_corpus(""));
  for (TheoremVerdict const& v : run_all(a)) {
    CAPTURE(v.id);
    CHECK(v.instances_scanned == 0);
    CHECK(v.vacuous());
  }
}

TEST_CASE("medium corpus: arithmetic, determinism, W2 mirrors T15") {
  CorpusAnalysis a(generate_corpus(medium));
  std::vector<TheoremVerdict> const first = run_all(a);
  CorpusAnalysis b(generate_corpus(medium));
  std::vector<TheoremVerdict> const second = run_all(b);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    TheoremVerdict const& v = first[i];
    check_arithmetic(v);
    CHECK_FALSE(v.has_counterexample());
    CHECK(v.instances_scanned == second[i].instances_scanned);
    CHECK(v.premises_satisfied == second[i].premises_satisfied);
    CHECK(v.inapplicable == second[i].inapplicable);
    CHECK(v.extras == second[i].extras);
  }
  TheoremVerdict const t15 = check_theorem("T15", a);
  TheoremVerdict const w2 = check_theorem("W2", a);
  CHECK(t15.instances_scanned == w2.instances_scanned);
  CHECK(t15.premises_satisfied == w2.premises_satisfied);
  CHECK(t15.inapplicable == w2.inapplicable);

  TheoremVerdict const t14 = check_theorem("T14", a);
  CHECK(t14.extra("matrixInstances") > 0);
  CHECK(t14.extra("routesAgree") == t14.extra("matrixInstances"));
  CHECK(t14.extra("fullImpliesCorner") == t14.extra("matrixInstances"));

  TheoremVerdict const quick = check_theorem("T12", a, CheckOptions{true});
  check_arithmetic(quick);
}

TEST_CASE("the ordinary Z8 adds substantive sdf instances") {
  std::string const path = "test_harness_z8.hr";
  {
    std::ofstream out(path);
    out << serialize_ring(zomega(8, std::vector<long long>{1, 9}));
  }
  CorpusAnalysis a(generate_corpus("file:" + path));
  std::remove(path.c_str());
  REQUIRE(a.size() == 1);
  Subset const zero = a.ring(0).singleton(0);
  ClassificationReport const* r = a.at(0).find(zero);
  REQUIRE(r != nullptr);
  CHECK_FALSE(r->is_sdf);
  CHECK(r->witnesses.at("sdf") == std::vector<Element>{1, 3});
  for (TheoremVerdict const& v : run_all(a)) {
    check_arithmetic(v);
    CHECK_FALSE(v.has_counterexample());
  }
  // {0} is weakly sdf there but not sdf
  CHECK(check_theorem("W1", a).premises_satisfied > 0);
}

TEST_CASE("search") {
  SearchResult const r = search_counterexample("T1", parse_corpus_spec("fixtures+zomega:nMax=4"));
  CHECK_FALSE(r.found);
  CHECK(r.verdict.id == "T1");
  CHECK_THROWS_AS(search_counterexample("T1", parse_corpus_spec("nonsense")), SpecError);
  CHECK_THROWS_AS(search_counterexample("X", parse_corpus_spec("fixtures")), UnknownTheorem);
}

TEST_CASE("T13 reverse direction fails on ordinary products and is reported") {
  CorpusAnalysis a(generate_corpus("zomega:nMax=4,omegaMax=2+product:orderCap=4"));
  TheoremVerdict const v = check_theorem("T13", a);
  check_arithmetic(v);
  REQUIRE(v.has_counterexample());
  for (Counterexample const& c : v.counterexamples) {
    CHECK(c.failed_parts == std::vector<std::string>{"<="});
    REQUIRE(c.rings.size() == 1);
    RingDocument const doc = parse_ring(c.rings[0].document);
    REQUIRE(doc.ok());
    HyperRing const& h = *doc.ring;
    oracle::Set meet = oracle::everything(h);
    std::vector<oracle::Set> family;
    for (Counterexample::Set const& s : c.sets) {
      if (s.role == "P") continue;
      oracle::Set const p(s.elements.begin(), s.elements.end());
      CHECK(oracle::is_hyperideal(h, p));
      family.push_back(p);
      oracle::Set keep;
      for (Element e : meet) {
        if (p.count(e)) keep.insert(e);
      }
      meet = keep;
    }
    CHECK(family.size() >= 2);
    // a nonzero pair with one zero coordinate escapes both factors
    CHECK_FALSE(oracle::sdf(h, meet, false).holds);
  }
}
