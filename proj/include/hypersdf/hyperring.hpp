#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypersdf/error.hpp"
#include "hypersdf/subset.hpp"

namespace hypersdf {

// Allocates an identifier no existing ring uses.
RingId new_ring_id();

// A finite commutative multiplicative hyperring (H, +, o).
//
// The carrier is {0, ..., order-1}. Addition is an ordinary table, the
// hyperoperation maps each pair to a nonempty Subset. The constructor only
// checks that the tables are well formed; whether they satisfy the hyperring
// axioms is decided by validate_hyperring().
//
// Instances are immutable. Copies share the RingId, so subsets created from
// one copy are accepted by the other.
class HyperRing {
 public:
  // `add` is row-major (add[x * order + y] = x + y); `mul` likewise holds
  // the members of each cell x o y.
  HyperRing(std::string name, std::size_t order, Element zero, std::optional<Element> one,
            std::vector<Element> add, std::vector<std::vector<Element>> mul);

  [[nodiscard]] RingId id() const noexcept { return id_; }
  [[nodiscard]] std::string const& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] Element zero() const noexcept { return zero_; }
  [[nodiscard]] std::optional<Element> one() const noexcept { return one_; }
  // Throws PreconditionError when no identity is designated.
  [[nodiscard]] Element require_one() const;

  [[nodiscard]] Element add(Element x, Element y) const { return add_[x * order_ + y]; }
  // Additive inverse; only meaningful when (H,+) is a group.
  [[nodiscard]] Element neg(Element x) const { return neg_[x]; }
  [[nodiscard]] Element sub(Element x, Element y) const { return add(x, neg(y)); }
  [[nodiscard]] Subset const& mul(Element x, Element y) const { return mul_[x * order_ + y]; }

  [[nodiscard]] Subset empty() const { return Subset(id_, order_); }
  [[nodiscard]] Subset full() const { return Subset::full(id_, order_); }
  [[nodiscard]] Subset singleton(Element x) const;
  [[nodiscard]] Subset subset(std::vector<Element> const& elements) const;

  // A o B, the union of the cells a o b. Both operands must be nonempty.
  [[nodiscard]] Subset product(Subset const& a, Subset const& b) const;
  // {a + b}, {a - b}, {-a}, element-wise.
  [[nodiscard]] Subset sum(Subset const& a, Subset const& b) const;
  [[nodiscard]] Subset difference(Subset const& a, Subset const& b) const;
  [[nodiscard]] Subset negate(Subset const& a) const;
  // x^k with x^1 = {x} and x^k = {x} o x^(k-1); k = 0 is rejected.
  [[nodiscard]] Subset power(Element x, unsigned k) const;

  // k * x = x + ... + x.
  [[nodiscard]] Element multiple(unsigned k, Element x) const;

  // Same order, zero, identity and tables.
  [[nodiscard]] bool same_tables(HyperRing const& other) const;

  [[nodiscard]] std::vector<Element> const& add_table() const noexcept { return add_; }

 private:
  void require_member(Subset const& s) const;

  RingId id_;
  std::string name_;
  std::size_t order_;
  Element zero_;
  std::optional<Element> one_;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Subset> mul_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witness;
};

struct AxiomReport {
  bool abelian_group = true;
  bool semihypergroup = true;
  bool distributive_inclusion = true;
  bool sign_rule = true;
  bool commutative = true;
  bool strongly_distributive = true;
  // Elements e with x in x o e for every x.
  Subset identity_witnesses;
  // First witness found for each failing axiom.
  std::vector<AxiomViolation> violations;

  [[nodiscard]] bool ok() const noexcept {
    return abelian_group && semihypergroup && distributive_inclusion && sign_rule && commutative;
  }
};

// Exhaustive table scan of the five hyperring axioms, strong distributivity
// and the identity witnesses. O(n^3) cell products.
AxiomReport validate_hyperring(HyperRing const& ring);

Subset identity_witnesses(HyperRing const& ring);

// U(H) relative to the designated identity.
Subset units(HyperRing const& ring);

// Elements x with 0 in x^k for some k. The power sequence of each element is
// followed until it cycles, so the answer is exact.
Subset nilpotents(HyperRing const& ring);

// Elements x with x in x^2 o y for some y.
Subset regular_elements(HyperRing const& ring);

// Least a >= 1 with a*x = 0 for all x (the exponent of (H,+)).
std::size_t characteristic(HyperRing const& ring);

// Least a >= 1 with a*x in A for all x, i.e. the characteristic of the
// additive quotient H/A. A must be an additive subgroup.
std::size_t characteristic_modulo(HyperRing const& ring, Subset const& a);

// Elements x for which some power x^k lies inside `target`, computed with the
// same cycle-bounded iteration as nilpotents().
Subset elements_with_power_inside(HyperRing const& ring, Subset const& target);

}  // namespace hypersdf
