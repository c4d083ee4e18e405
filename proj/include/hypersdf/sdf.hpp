#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "hypersdf/constructors.hpp"
#include "hypersdf/hyperring.hpp"

namespace hypersdf {

// Which square-difference condition to decide. For nonzero x, y:
//   sdf:    x^2 - y^2 inside P             => x - y in P or x + y in P
//   weakly: 0 not in x^2 - y^2 inside P    => x - y in P or x + y in P
//   both:   x^2 - y^2 inside P             => x - y in P and x + y in P
enum class SdfVariant { sdf, weakly, both };

enum class ScanMode {
  first_violation,  // stop at the first refuting pair
  exhaustive,       // every violation and every premise-firing pair
};

struct SdfWitness {
  Element x = 0;
  Element y = 0;
  Subset diff_set;  // x^2 - y^2
  bool contains_zero = false;
  bool minus_in = false;
  bool plus_in = false;
};

struct SdfResult {
  bool holds = true;
  // Number of ordered nonzero pairs whose premise held. Exact whenever the
  // scan ran to completion (always when holds, or in exhaustive mode).
  std::size_t firing_pairs = 0;
  std::vector<SdfWitness> violations;
  // Premise-firing pairs, recorded in exhaustive mode only.
  std::vector<std::pair<Element, Element>> firing;
};

// x^2 - y^2.
Subset diff_of_squares(HyperRing const& ring, Element x, Element y);

// P must be a proper hyperideal; PreconditionError otherwise.
SdfResult is_sdf_absorbing(HyperRing const& ring, Subset const& p,
                           ScanMode mode = ScanMode::first_violation);
SdfResult is_weakly_sdf_absorbing(HyperRing const& ring, Subset const& p,
                                  ScanMode mode = ScanMode::first_violation);
SdfResult sdf_both_membership(HyperRing const& ring, Subset const& p,
                              ScanMode mode = ScanMode::first_violation);
SdfResult scan_sdf(HyperRing const& ring, Subset const& p, SdfVariant variant,
                   ScanMode mode = ScanMode::first_violation);

// The condition for M_m(P) in M_m(H). `base_ideal` is P, a proper hyperideal
// of the base ring; M_m(P) is then a proper hyperideal of M_m(H).
SdfResult scan_matrix_sdf(MatrixRing const& matrices, Subset const& base_ideal, SdfVariant variant,
                          ScanMode mode = ScanMode::first_violation);

// The same condition restricted to corner matrices corner(x), corner(y) with
// x, y nonzero. Witness elements are reported as base-ring elements.
SdfResult scan_corner_sdf(MatrixRing const& matrices, Subset const& base_ideal, SdfVariant variant,
                          ScanMode mode = ScanMode::first_violation);

namespace detail {

inline Subset square_of(HyperRing const& ring, Element x) { return ring.mul(x, x); }
inline Subset square_of(MatrixRing const& ring, Element x) { return ring.square(x); }

// Core scan. P must be an additive subgroup of `ring`; then x^2 - y^2 lies in
// P exactly when x^2 and y^2 sit in one common coset of P, and 0 belongs to
// x^2 - y^2 exactly when x^2 and y^2 meet. `candidates` lists the elements
// over which x and y range (zero excluded by the caller).
template <typename Ring>
SdfResult scan(Ring const& ring, Subset const& p, std::vector<Element> const& candidates,
               SdfVariant variant, ScanMode mode) {
  constexpr Element mixed = std::numeric_limits<Element>::max();
  auto const n = static_cast<Element>(ring.order());

  std::vector<Element> coset(n);
  for (Element x = 0; x < n; ++x) {
    Element best = n;
    p.for_each([&](Element q) { best = std::min(best, ring.add(x, q)); });
    coset[x] = best;
  }

  std::vector<Subset> squares(n);
  std::vector<Element> square_coset(n, mixed);
  for (Element x : candidates) {
    squares[x] = square_of(ring, x);
    Element label = coset[squares[x].min()];
    squares[x].for_each([&](Element t) {
      if (coset[t] != label) {
        label = mixed;
      }
    });
    square_coset[x] = label;
  }

  SdfResult result;
  for (Element x : candidates) {
    if (square_coset[x] == mixed) {
      continue;
    }
    for (Element y : candidates) {
      if (square_coset[y] != square_coset[x]) {
        continue;
      }
      bool const contains_zero = squares[x].intersects(squares[y]);
      if (variant == SdfVariant::weakly && contains_zero) {
        continue;
      }
      ++result.firing_pairs;
      if (mode == ScanMode::exhaustive) {
        result.firing.emplace_back(x, y);
      }
      bool const minus_in = coset[x] == coset[y];
      bool const plus_in = coset[x] == coset[ring.neg(y)];
      bool const ok = variant == SdfVariant::both ? (minus_in && plus_in) : (minus_in || plus_in);
      if (ok) {
        continue;
      }
      result.holds = false;
      result.violations.push_back(SdfWitness{x, y, ring.difference(squares[x], squares[y]),
                                             contains_zero, minus_in, plus_in});
      if (mode == ScanMode::first_violation) {
        return result;
      }
    }
  }
  return result;
}

}  // namespace detail

}  // namespace hypersdf
