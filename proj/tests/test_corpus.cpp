#include <doctest.h>

#include <set>

#include "hypersdf/corpus.hpp"
#include "hypersdf/fixtures.hpp"
#include "oracle.hpp"

using namespace hypersdf;

TEST_CASE("fixtures only") {
  Corpus const c = generate_corpus("fixtures");
  REQUIRE(c.rings.size() == 2);
  CHECK(c.rings[0].label == "R1");
  CHECK(c.rings[1].label == "R2");
  CHECK(c.rings[0].origin == Origin::fixture);
  CHECK(c.rings[0].ring.same_tables(fixture_r1()));
}

TEST_CASE("empty spec") {
  Corpus const c = generate_corpus("");
  CHECK(c.rings.empty());
  CHECK(c.products.empty());
  CHECK(c.quotients.empty());
}

TEST_CASE("zomega count equals the table-distinct (n, Omega) pairs") {
  // integers in 0..2n-1, so pairs that collide mod n are covered
  Corpus const c = generate_corpus("zomega:nMin=2,nMax=4,omegaMin=2,omegaMax=2");
  std::set<std::pair<std::size_t, std::vector<oracle::Set>>> distinct;
  for (std::size_t n = 2; n <= 4; ++n) {
    long long const top = 2 * static_cast<long long>(n);
    for (long long a = 0; a < top; ++a) {
      for (long long b = a + 1; b < top; ++b) {
        std::vector<oracle::Set> table;
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            table.push_back(oracle::zomega_cell(n, {a, b}, x, y));
          }
        }
        distinct.emplace(n, table);
      }
    }
  }
  CHECK(c.rings.size() == distinct.size());
  for (CorpusRing const& r : c.rings) {
    CHECK(r.origin == Origin::zomega);
  }
}

TEST_CASE("products, quotients and files") {
  Corpus const c = generate_corpus("fixtures+product:orderCap=4+quotients");
  CHECK(c.products.size() == 4);
  for (ProductRecord const& p : c.products) {
    CHECK(c.rings[p.ring].ring.order()
          == c.rings[p.left].ring.order() * c.rings[p.right].ring.order());
  }
  CHECK_FALSE(c.quotients.empty());
  for (QuotientRecord const& q : c.quotients) {
    CHECK(c.rings[q.ring].ring.order() * q.ideal.count() == c.rings[q.parent].ring.order());
  }

  Corpus const f = generate_corpus("file:" HYPERSDF_DATA_DIR "/r2.hr");
  REQUIRE(f.rings.size() == 1);
  CHECK(f.rings[0].origin == Origin::file);
  CHECK(f.rings[0].ring.same_tables(fixture_r2()));
  // identical tables are kept once
  CHECK(generate_corpus("fixtures+file:" HYPERSDF_DATA_DIR "/r1.hr").rings.size() == 2);
}

TEST_CASE("oversized products are skipped and recorded") {
  Corpus const c = generate_corpus("zomega:nMin=5,nMax=5,omegaMax=2+product:orderCap=5");
  CHECK(c.products.empty());
  CHECK_FALSE(c.skipped.empty());
}

TEST_CASE("generation is deterministic") {
  char const* spec = "fixtures+zomega:nMax=5,omegaMax=3+product:orderCap=3+quotients";
  Corpus const a = generate_corpus(spec);
  Corpus const b = generate_corpus(spec);
  REQUIRE(a.rings.size() == b.rings.size());
  for (std::size_t i = 0; i < a.rings.size(); ++i) {
    CHECK(a.rings[i].label == b.rings[i].label);
    CHECK(a.rings[i].ring.same_tables(b.rings[i].ring));
  }
  for (std::size_t i = 0; i < a.rings.size(); ++i) {
    for (std::size_t j = i + 1; j < a.rings.size(); ++j) {
      CHECK_FALSE(a.rings[i].ring.same_tables(a.rings[j].ring));
    }
  }
}

TEST_CASE("spec parsing") {
  CorpusSpec const s = parse_corpus_spec(" fixtures + zomega:nMax=5 + matrix:m=2,cap=256 ");
  CHECK(s.fixtures);
  REQUIRE(s.zomega);
  CHECK(s.zomega->n_max == 5);
  CHECK(s.zomega->omega_max == 3);
  REQUIRE(s.matrix);
  CHECK(s.matrix->cap == 256);
  CHECK_FALSE(s.quotients);

  for (char const* bad : {"fixture", "zomega:nMax=17", "zomega:nMax=x", "zomega:k=2",
                          "zomega:nMax=4,nMax=5", "product:orderCap=9", "fixtures:x=1",
                          "matrix:cap=5000", "file:", "zomega:omegaMin=1", "zomega:nMax"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_corpus_spec(bad), SpecError);
  }
  CHECK_THROWS_AS(generate_corpus("file:/nonexistent.hr"), SpecError);
}
