#include <doctest.h>

#include <stdexcept>

#include "hypersdf/constructors.hpp"
#include "hypersdf/corpus.hpp"
#include "hypersdf/fixtures.hpp"
#include "hypersdf/hyperring.hpp"
#include "oracle.hpp"

using namespace hypersdf;

namespace {

HyperRing trivial_ring() { return HyperRing("trivial", 1, 0, 0, {0}, {{0}}); }

HyperRing r1_with(std::size_t x, std::size_t y, std::vector<Element> cell) {
  HyperRing const r1 = fixture_r1();
  std::vector<std::vector<Element>> mul;
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      mul.push_back(r1.mul(a, b).elements());
    }
  }
  mul[x * 4 + y] = std::move(cell);
  return HyperRing("R1'", 4, 0, 1, r1.add_table(), mul);
}

std::vector<Element> els(Subset const& s) { return s.elements(); }
using V = std::vector<Element>;

}  // namespace

TEST_CASE("subset basics") {
  RingId const id = new_ring_id();
  Subset a(id, 70, {0, 3, 69});
  Subset b(id, 70, {3, 4});
  CHECK(a.count() == 3);
  CHECK(a.contains(69));
  CHECK_FALSE(a.contains(4));
  CHECK(els(a | b) == V{0, 3, 4, 69});
  CHECK(els(a & b) == V{3});
  CHECK(a.intersects(b));
  CHECK((a & b).is_subset_of(a));
  CHECK(Subset::full(id, 70).is_full());
  Subset c = a;
  c.remove_all(b);
  CHECK(els(c) == V{0, 69});
  CHECK(a.min() == 0);
  CHECK(Subset(id, 70, {1}) < Subset(id, 70, {2}));
  CHECK_THROWS_AS((void)(a | Subset(new_ring_id(), 70)), std::invalid_argument);
}

TEST_CASE("R1 passes the axioms with identity witnesses {1,3}") {
  AxiomReport const r = validate_hyperring(fixture_r1());
  CHECK(r.ok());
  CHECK(r.violations.empty());
  CHECK(els(r.identity_witnesses) == V{1, 3});
}

TEST_CASE("order-1 ring") {
  HyperRing const t = trivial_ring();
  AxiomReport const r = validate_hyperring(t);
  CHECK(r.ok());
  CHECK(els(r.identity_witnesses) == V{0});
  CHECK(els(identity_witnesses(t)) == V{0});
}

TEST_CASE("a damaged R1 cell is reported with a witness") {
  AxiomReport const r = validate_hyperring(r1_with(1, 2, {1}));
  CHECK_FALSE(r.ok());
  CHECK((!r.commutative || !r.distributive_inclusion));
  REQUIRE_FALSE(r.violations.empty());
  CHECK_FALSE(r.violations.front().witness.empty());
}

TEST_CASE("axiom flags and violations agree") {
  for (auto const& damaged : {r1_with(1, 2, {1}), r1_with(2, 2, {2}), r1_with(0, 1, {1}),
                              fixture_r1(), fixture_r2()}) {
    AxiomReport const r = validate_hyperring(damaged);
    CHECK(r.violations.empty() == r.ok());
    if (r.strongly_distributive) {
      CHECK(r.distributive_inclusion);
    }
  }
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(HyperRing("x", 2, 0, std::nullopt, {0, 1, 1}, {{0}, {0}, {0}, {0}}),
                  StructuralError);
  CHECK_THROWS_AS(HyperRing("x", 2, 0, std::nullopt, {0, 1, 1, 0}, {{0}, {0}, {}, {0}}),
                  StructuralError);
  CHECK_THROWS_AS(HyperRing("x", 2, 0, std::nullopt, {0, 1, 1, 5}, {{0}, {0}, {0}, {0}}),
                  StructuralError);
}

TEST_CASE("set operations on the fixtures") {
  HyperRing const r1 = fixture_r1();
  HyperRing const r2 = fixture_r2();
  CHECK(els(r1.product(r1.singleton(1), r1.singleton(2))) == V{0, 2});
  CHECK(els(r1.product(r1.subset({1, 3}), r1.singleton(0))) == V{0});
  CHECK(els(r2.product(r2.subset({1, 3}), r2.singleton(2))) == V{2});
  CHECK(els(r1.sum(r1.singleton(1), r1.singleton(3))) == V{0});
  CHECK(els(r2.difference(r2.subset({1, 3}), r2.subset({1, 3}))) == V{0, 2});
  CHECK(els(r1.power(2, 2)) == V{0});
  CHECK(els(r2.power(3, 3)) == V{1, 3});
  CHECK_THROWS_AS((void)r1.power(1, 0), PreconditionError);
  for (Element x = 0; x < 4; ++x) {
    CHECK(els(r1.power(x, 1)) == V{x});
    CHECK(r2.sum(r2.subset({1, 2}), r2.singleton(0)) == r2.subset({1, 2}));
  }
}

TEST_CASE("ring-level facts on the fixtures") {
  HyperRing const r1 = fixture_r1();
  HyperRing const r2 = fixture_r2();
  CHECK(els(units(r1)) == V{1, 3});
  CHECK(els(units(r2)) == V{1, 3});
  CHECK(els(units(trivial_ring())) == V{0});
  CHECK(els(nilpotents(r1)) == V{0, 1, 2, 3});
  CHECK(els(nilpotents(r2)) == V{0, 2});
  CHECK(characteristic(r1) == 4);
  CHECK(characteristic(r2) == 4);
  HyperRing const z2 = zomega(2, std::vector<long long>{0, 1});
  CHECK(characteristic(product_ring(z2, z2)) == 2);
  CHECK(characteristic_modulo(r1, r1.subset({0, 2})) == 2);
}

TEST_CASE("properties over a small corpus") {
  Corpus const corpus = generate_corpus("fixtures+zomega:nMax=6,omegaMax=3+product:orderCap=3");
  for (CorpusRing const& cr : corpus.rings) {
    HyperRing const& r = cr.ring;
    CAPTURE(cr.label);
    AxiomReport const report = validate_hyperring(r);
    REQUIRE(report.ok());
    auto const n = static_cast<Element>(r.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        // the subset extension is the naive union of cells
        CHECK(oracle::to_set(r.product(r.singleton(x), r.singleton(y))) == oracle::cell(r, x, y));
        CHECK(r.mul(x, y) == r.mul(y, x));
        for (Element z = 0; z < n; ++z) {
          Subset const a = r.subset({x, y});
          CHECK(r.product(a, r.singleton(z))
                == (r.product(r.singleton(x), r.singleton(z))
                    | r.product(r.singleton(y), r.singleton(z))));
          CHECK(r.product(r.mul(x, y), r.singleton(z)) == r.product(r.singleton(x), r.mul(y, z)));
          if (report.strongly_distributive) {
            CHECK(r.product(r.singleton(x), r.singleton(r.add(y, z)))
                  == r.sum(r.mul(x, y), r.mul(x, z)));
          }
        }
      }
    }
    // nilpotents are exactly the x whose power sequence reaches 0
    oracle::Set nil;
    for (Element x = 0; x < n; ++x) {
      std::set<oracle::Set> seen;
      oracle::Set p{x};
      while (seen.insert(p).second) {
        if (p.count(r.zero())) {
          nil.insert(x);
          break;
        }
        p = oracle::product(r, p, {x});
      }
    }
    CHECK(oracle::to_set(nilpotents(r)) == nil);
    CHECK(nilpotents(r) == nilpotents(r));
    // units re-checked from the definition
    if (r.one()) {
      Subset const u = units(r);
      for (Element x = 0; x < n; ++x) {
        bool unit = false;
        for (Element y = 0; y < n; ++y) {
          unit = unit || r.mul(x, y).contains(*r.one());
        }
        CHECK(u.contains(x) == unit);
      }
    }
    // characteristic is the exponent of the additive group
    std::size_t c = 1;
    while (true) {
      bool all = true;
      for (Element x = 0; x < n; ++x) {
        all = all && r.multiple(static_cast<unsigned>(c), x) == r.zero();
      }
      if (all) break;
      ++c;
    }
    CHECK(characteristic(r) == c);
  }
}
