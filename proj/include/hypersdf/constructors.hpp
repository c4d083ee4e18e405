#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypersdf/hyperring.hpp"

namespace hypersdf {

// Z_n with x o y = {x*g*y mod n : g in omega}; the finite surrogate of the
// Z_Omega hyperring. `omega` must hold at least two distinct integers;
// residues that collide mod n are merged afterwards. The designated identity
// is the least identity witness, if any.
HyperRing zomega(std::size_t n, std::span<long long const> omega);

// H1 x H2 with carrier index a * |H2| + b for the pair (a, b).
HyperRing product_ring(HyperRing const& left, HyperRing const& right);

struct QuotientRing {
  HyperRing ring;
  // projection[x] is the coset index of x; cosets are numbered by their
  // least member, ascending.
  std::vector<Element> projection;
  // representatives[c] is the least member of coset c.
  std::vector<Element> representatives;
};

// H/Q with (x+Q) * (y+Q) = {z+Q : z in x o y}. Throws PreconditionError if Q
// is not a hyperideal and ConstructionError if the coset product depends on
// the chosen representatives or the result fails validation.
QuotientRing quotient_ring(HyperRing const& ring, Subset const& ideal);

struct SubHyperRing {
  HyperRing ring;
  // embedding[i] is the element of the parent represented by i.
  std::vector<Element> embedding;
};

// The sub-hyperring carried by `carrier`, which must contain zero and be
// closed under subtraction and under o. Elements keep their relative order.
SubHyperRing sub_hyperring(HyperRing const& ring, Subset const& carrier);

// Hypermatrix ring M_m(H). Elements are m x m matrices over H, encoded with
// entry (0,0) as the most significant base-|H| digit. Addition is entrywise;
// X o Y is the set of matrices Z with Z_ij in sum_k X_ik o Y_kj. Products
// are computed on demand, so the table is never materialised unless
// to_hyperring() is called.
class MatrixRing {
 public:
  static constexpr std::size_t default_cap = 4096;

  MatrixRing(HyperRing const& base, std::size_t m, std::size_t cap = default_cap);

  [[nodiscard]] HyperRing const& base() const noexcept { return base_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return m_; }
  [[nodiscard]] RingId id() const noexcept { return id_; }
  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] Element zero() const noexcept { return zero_; }

  [[nodiscard]] std::vector<Element> entries(Element matrix) const;
  [[nodiscard]] Element encode(std::span<Element const> entries) const;

  [[nodiscard]] Element add(Element x, Element y) const;
  [[nodiscard]] Element neg(Element x) const;
  [[nodiscard]] Element sub(Element x, Element y) const { return add(x, neg(y)); }
  [[nodiscard]] Subset mul(Element x, Element y) const;
  [[nodiscard]] Subset square(Element x) const { return mul(x, x); }

  [[nodiscard]] Subset empty() const { return Subset(id_, order_); }
  [[nodiscard]] Subset product(Subset const& a, Subset const& b) const;
  [[nodiscard]] Subset sum(Subset const& a, Subset const& b) const;
  [[nodiscard]] Subset negate(Subset const& a) const;
  [[nodiscard]] Subset difference(Subset const& a, Subset const& b) const;

  // The matrix with x in entry (0,0) and zero elsewhere.
  [[nodiscard]] Element corner(Element x) const;
  // M_m(P): all matrices whose entries lie in P.
  [[nodiscard]] Subset lift(Subset const& base_subset) const;
  // The projections (A_ij) of a set of matrices onto each entry.
  [[nodiscard]] std::vector<Subset> entry_sets(Subset const& matrices) const;
  // Entrywise inclusion A_ij subset of B_ij.
  [[nodiscard]] static bool entrywise_subset(std::span<Subset const> a, std::span<Subset const> b);

  // Full table; only sensible for small orders.
  [[nodiscard]] HyperRing to_hyperring() const;

 private:
  HyperRing base_;
  std::size_t m_;
  std::size_t order_;
  RingId id_;
  Element zero_ = 0;
};

// Structure-preserving test of an element map between two hyperrings.
struct HomMap {
  RingId source;
  RingId target;
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Element> map;
  bool additive = false;
  bool multiplicative = false;
  std::vector<Element> additive_witness;        // (x, y) where additivity fails
  std::vector<Element> multiplicative_witness;  // (x, y) where theta(x o y) differs
  Subset kernel;

  [[nodiscard]] bool good() const noexcept { return additive && multiplicative; }
  [[nodiscard]] bool injective() const;
  [[nodiscard]] bool surjective() const;
};

// Exhaustive check of theta(x+y) = theta(x)+theta(y) and
// theta(x o y) = theta(x) o theta(y). A failure is a flag, never an error,
// except for a map that is not total on the source.
HomMap check_good_hom(std::vector<Element> map, HyperRing const& source, HyperRing const& target);

// Element-wise preimage and image. The map must be good.
Subset hom_preimage(HomMap const& theta, Subset const& target_subset);
Subset hom_image(HomMap const& theta, Subset const& source_subset);

}  // namespace hypersdf
