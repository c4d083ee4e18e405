#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypersdf/hyperring.hpp"

namespace hypersdf {

// Outcome of a predicate that can name the elements refuting it.
struct Check {
  bool holds = true;
  std::vector<Element> witness;
  std::string reason;

  explicit operator bool() const noexcept { return holds; }

  static Check pass() { return {}; }
  static Check fail(std::vector<Element> witness, std::string reason) {
    return {false, std::move(witness), std::move(reason)};
  }
};

inline constexpr std::size_t default_enumeration_cap = 16;

// Closed under subtraction and r o x is inside S for r in H and x in S.
// Throws PreconditionError for an empty S.
Check is_hyperideal(HyperRing const& ring, Subset const& s);

// True for hyperideals other than H.
bool is_proper_hyperideal(HyperRing const& ring, Subset const& s);

// Additive subgroup generated by `gens` (always contains zero).
Subset additive_closure(HyperRing const& ring, Subset const& gens);

// Every additive subgroup of (H,+), sorted by bit pattern.
std::vector<Subset> enumerate_additive_subgroups(HyperRing const& ring,
                                                 std::size_t cap = default_enumeration_cap);

// Every hyperideal, sorted by bit pattern. Throws PreconditionError above
// the order cap.
std::vector<Subset> enumerate_hyperideals(HyperRing const& ring,
                                          std::size_t cap = default_enumeration_cap);

// Least hyperideal containing gens (and zero).
Subset generated_hyperideal(HyperRing const& ring, Subset const& gens);

// Both require a proper hyperideal and throw PreconditionError otherwise.
// Witness: the pair (x, y) with x o y inside P and neither factor in P.
Check is_prime(HyperRing const& ring, Subset const& p);
Check is_weakly_prime(HyperRing const& ring, Subset const& p);

// (A2 : A1) = {x : x o A1 inside A2}.
Subset colon_ideal(HyperRing const& ring, Subset const& a2, Subset const& a1);

// P + Q = H.
bool are_coprime(HyperRing const& ring, Subset const& p, Subset const& q);

// Least x with <x> = P, if any.
std::optional<Element> principal_generator(HyperRing const& ring, Subset const& p);

// D(A) = {x : x^n inside A for some n}.
Subset d_set(HyperRing const& ring, Subset const& a);

// The hyperideal lattice of one ring, enumerated once. Holds a reference to
// the ring, which must outlive it.
class IdealLattice {
 public:
  explicit IdealLattice(HyperRing const& ring, std::size_t cap = default_enumeration_cap);

  [[nodiscard]] HyperRing const& ring() const noexcept { return *ring_; }
  [[nodiscard]] std::vector<Subset> const& ideals() const noexcept { return ideals_; }
  [[nodiscard]] std::vector<Subset> const& primes() const noexcept { return primes_; }
  [[nodiscard]] std::vector<Subset> const& maximals() const noexcept { return maximals_; }

  // No hyperideal strictly between P and H. P must be a proper hyperideal.
  [[nodiscard]] bool is_maximal(Subset const& p) const;
  // Intersection of the primes containing A, or H when there are none.
  // A must be a hyperideal.
  [[nodiscard]] Subset radical(Subset const& a) const;
  // Intersection of the maximal hyperideals, or H when there are none.
  [[nodiscard]] Subset jacobson() const;
  // Intersection of the enumerated hyperideals containing gens.
  [[nodiscard]] Subset smallest_containing(Subset const& gens) const;

 private:
  HyperRing const* ring_;
  std::vector<Subset> ideals_;
  std::vector<Subset> primes_;
  std::vector<Subset> maximals_;
};

// One-shot wrappers that enumerate the lattice on every call.
bool is_maximal(HyperRing const& ring, Subset const& p);
Subset radical(HyperRing const& ring, Subset const& a);
Subset jacobson(HyperRing const& ring);

// The finite-product family C (every c1 o ... o cn, n >= 1) and the family
// of finite sums of its members (n >= 1 summands). Both sorted.
struct ProductFamily {
  std::vector<Subset> products;
  std::vector<Subset> sums;
};

ProductFamily product_family(HyperRing const& ring, std::size_t cap = default_enumeration_cap);

// Every member of the family that meets A lies inside A. Witness: the
// members of the offending family set.
Check is_c_hyperideal(HyperRing const& ring, Subset const& a, ProductFamily const& family);
Check is_strong_c_hyperideal(HyperRing const& ring, Subset const& a, ProductFamily const& family);

}  // namespace hypersdf
