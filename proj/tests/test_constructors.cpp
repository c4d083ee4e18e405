#include <doctest.h>

#include "hypersdf/constructors.hpp"
#include "hypersdf/corpus.hpp"
#include "hypersdf/fixtures.hpp"
#include "hypersdf/ideals.hpp"
#include "oracle.hpp"

using namespace hypersdf;
using V = std::vector<Element>;

namespace {

HyperRing z(std::size_t n, std::vector<long long> omega) { return zomega(n, omega); }

void check_against_mod_arithmetic(std::size_t n, std::vector<long long> const& omega) {
  HyperRing const r = z(n, omega);
  CAPTURE(n);
  auto const m = static_cast<Element>(n);
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      CHECK(r.add(x, y) == (x + y) % m);
      CHECK(oracle::cell(r, x, y) == oracle::zomega_cell(n, omega, x, y));
    }
  }
}

}  // namespace

TEST_CASE("zomega reproduces the fixtures cell for cell") {
  HyperRing const a = z(4, {0, 1, 2, 3});
  HyperRing const b = z(4, {1, 3});
  CHECK(a.same_tables(fixture_r1()));
  CHECK(b.same_tables(fixture_r2()));
  check_against_mod_arithmetic(4, {0, 1, 2, 3});
  check_against_mod_arithmetic(4, {1, 3});
}

TEST_CASE("zomega against direct modular evaluation") {
  for (std::size_t n = 2; n <= 9; ++n) {
    check_against_mod_arithmetic(n, {0, 1});
    check_against_mod_arithmetic(n, {1, 2});
    check_against_mod_arithmetic(n, {-1, 5, 7});
  }
}

TEST_CASE("zomega reduction and rejection") {
  CHECK(z(6, {1, 8}).same_tables(z(6, {7, 2})));
  CHECK(z(5, {1, 2, 6}).same_tables(z(5, {1, 2})));
  // Omega = {1, 9} in Z_8 is the ordinary product
  HyperRing const z8 = z(8, {1, 9});
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      CHECK(z8.mul(x, y).elements() == V{(x * y) % 8});
    }
  }
  CHECK_THROWS_AS(z(4, {3}), PreconditionError);
  CHECK_THROWS_AS(z(4, {2, 2}), PreconditionError);
  CHECK_THROWS_AS(z(1, {0, 1}), PreconditionError);
}

TEST_CASE("products") {
  HyperRing const r1 = fixture_r1();
  HyperRing const r2 = fixture_r2();
  CHECK(product_ring(r1, r2).order() == 16);
  HyperRing const p = product_ring(r2, r2);
  // (1,2) has index 1*4+2
  CHECK(p.mul(6, 6).elements() == V{4, 12});
  CHECK(validate_hyperring(p).ok());
  for (Element x = 0; x < 16; ++x) {
    for (Element y = 0; y < 16; ++y) {
      oracle::Set expect;
      for (Element a : r2.mul(x / 4, y / 4).elements()) {
        for (Element b : r2.mul(x % 4, y % 4).elements()) {
          expect.insert(a * 4 + b);
        }
      }
      CHECK(oracle::cell(p, x, y) == expect);
      CHECK(p.add(x, y) == r2.add(x / 4, y / 4) * 4 + r2.add(x % 4, y % 4));
    }
  }
}

TEST_CASE("quotients of R1") {
  HyperRing const r1 = fixture_r1();
  QuotientRing const q = quotient_ring(r1, r1.subset({0, 2}));
  CHECK(q.ring.order() == 2);
  CHECK(q.projection == V{0, 1, 0, 1});
  CHECK(q.representatives == V{0, 1});
  CHECK(q.ring.mul(1, 1).elements() == V{0, 1});

  QuotientRing const same = quotient_ring(r1, r1.singleton(0));
  CHECK(same.ring.same_tables(r1));
  CHECK(quotient_ring(r1, r1.full()).ring.order() == 1);
  CHECK_THROWS_AS(quotient_ring(r1, r1.subset({0, 1})), PreconditionError);

  HomMap const pi = check_good_hom(q.projection, r1, q.ring);
  CHECK(pi.good());
  CHECK(pi.kernel.elements() == V{0, 2});
  CHECK(hom_preimage(pi, q.ring.singleton(0)).elements() == V{0, 2});
  CHECK(hom_image(pi, r1.subset({0, 2})).elements() == V{0});
}

TEST_CASE("homomorphisms on the fixtures") {
  HyperRing const r1 = fixture_r1();
  HyperRing const r2 = fixture_r2();
  HomMap const id = check_good_hom({0, 1, 2, 3}, r1, r1);
  CHECK(id.good());
  CHECK(id.kernel.elements() == V{0});
  CHECK(hom_image(id, r1.subset({0, 2})) == r1.subset({0, 2}));
  HomMap const swap = check_good_hom({0, 2, 1, 3}, r2, r2);
  CHECK_FALSE(swap.additive);
  CHECK(swap.additive_witness.size() == 2);
  CHECK_FALSE(swap.good());
  CHECK_THROWS_AS(check_good_hom({0, 1}, r1, r1), PreconditionError);
  CHECK_THROWS_AS(hom_preimage(swap, r2.singleton(0)), PreconditionError);
}

TEST_CASE("matrix rings") {
  HyperRing const r2 = fixture_r2();
  MatrixRing const m2(r2, 2);
  CHECK(m2.order() == 256);
  CHECK(m2.entries(m2.corner(3)) == V{3, 0, 0, 0});
  Element const x = m2.encode(V{1, 2, 3, 0});
  CHECK(m2.entries(x) == V{1, 2, 3, 0});
  CHECK(m2.entries(m2.add(x, x)) == V{2, 0, 2, 0});
  CHECK(m2.add(x, m2.neg(x)) == m2.zero());
  // corner products are corners of base products
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      Subset expect = m2.empty();
      r2.mul(a, b).for_each([&](Element c) { expect.insert(m2.corner(c)); });
      CHECK(m2.mul(m2.corner(a), m2.corner(b)) == expect);
    }
  }
  CHECK(m2.lift(r2.subset({0, 2})).count() == 16);
  CHECK(MatrixRing(r2, 1).to_hyperring().same_tables(r2));
  CHECK(MatrixRing(fixture_r1(), 1).to_hyperring().same_tables(fixture_r1()));
  CHECK_THROWS_AS(MatrixRing(z(9, {1, 2}), 2, 4096), PreconditionError);
  CHECK_THROWS_AS(MatrixRing(r2, 0), PreconditionError);
}

TEST_CASE("sub-hyperrings") {
  HyperRing const r2 = fixture_r2();
  SubHyperRing const s = sub_hyperring(r2, r2.subset({0, 2}));
  CHECK(s.ring.order() == 2);
  CHECK(s.embedding == V{0, 2});
  CHECK(validate_hyperring(s.ring).ok());
  CHECK_THROWS_AS(sub_hyperring(r2, r2.subset({0, 1})), PreconditionError);
}

TEST_CASE("constructed rings validate and projections are good") {
  Corpus const c = generate_corpus("fixtures+zomega:nMax=6,omegaMax=3+product:orderCap=3+quotients");
  CHECK(c.skipped.empty());
  for (CorpusRing const& r : c.rings) {
    CAPTURE(r.label);
    CHECK(validate_hyperring(r.ring).ok());
  }
  for (QuotientRecord const& q : c.quotients) {
    HomMap const pi = check_good_hom(q.projection, c.rings[q.parent].ring, c.rings[q.ring].ring);
    CHECK(pi.good());
    CHECK(pi.kernel == q.ideal);
  }
}
