#pragma once

// Slow reference implementations written straight from the definitions.
// They read only the raw tables (add(x, y) and the members of each mul
// cell) and use std::set, so they share no code with the engine beyond
// table access.

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hypersdf/hyperring.hpp"

namespace oracle {

using hypersdf::Element;
using hypersdf::HyperRing;
using Set = std::set<Element>;

inline Set cell(HyperRing const& r, Element x, Element y) {
  auto const v = r.mul(x, y).elements();
  return Set(v.begin(), v.end());
}

inline Set to_set(hypersdf::Subset const& s) {
  auto const v = s.elements();
  return Set(v.begin(), v.end());
}

inline bool inside(Set const& a, Set const& b) {
  for (Element x : a) {
    if (!b.count(x)) {
      return false;
    }
  }
  return true;
}

// a - b: the c with b + c = a, found by searching the addition table.
inline Element minus(HyperRing const& r, Element a, Element b) {
  auto const n = static_cast<Element>(r.order());
  for (Element c = 0; c < n; ++c) {
    if (r.add(b, c) == a) {
      return c;
    }
  }
  return n;  // not a group; callers only pass valid rings
}

inline Set product(HyperRing const& r, Set const& a, Set const& b) {
  Set out;
  for (Element x : a) {
    for (Element y : b) {
      for (Element z : cell(r, x, y)) {
        out.insert(z);
      }
    }
  }
  return out;
}

inline Set diff_of_squares(HyperRing const& r, Element x, Element y) {
  Set out;
  for (Element a : cell(r, x, x)) {
    for (Element b : cell(r, y, y)) {
      out.insert(minus(r, a, b));
    }
  }
  return out;
}

struct SdfVerdict {
  bool holds = true;
  std::size_t firing = 0;
  std::optional<std::pair<Element, Element>> witness;  // first in (x, y) order
};

// For nonzero x, y with x^2 - y^2 inside P (and, for the weak form, 0 not
// in x^2 - y^2): x - y in P or x + y in P.
inline SdfVerdict sdf(HyperRing const& r, Set const& p, bool weak) {
  SdfVerdict v;
  auto const n = static_cast<Element>(r.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == r.zero() || y == r.zero()) {
        continue;
      }
      Set const d = oracle::diff_of_squares(r, x, y);
      if (!inside(d, p)) {
        continue;
      }
      if (weak && d.count(r.zero())) {
        continue;
      }
      ++v.firing;
      if (p.count(minus(r, x, y)) || p.count(r.add(x, y))) {
        continue;
      }
      if (v.holds) {
        v.witness = std::make_pair(x, y);
      }
      v.holds = false;
    }
  }
  return v;
}

inline bool is_hyperideal(HyperRing const& r, Set const& s) {
  if (s.empty()) {
    return false;
  }
  for (Element a : s) {
    for (Element b : s) {
      if (!s.count(minus(r, a, b))) {
        return false;
      }
    }
  }
  auto const n = static_cast<Element>(r.order());
  for (Element t = 0; t < n; ++t) {
    for (Element a : s) {
      if (!inside(cell(r, t, a), s)) {
        return false;
      }
    }
  }
  return true;
}

// Every subset, filtered. Exponential; keep the order small.
inline std::vector<Set> hyperideals(HyperRing const& r) {
  std::vector<Set> out;
  std::size_t const n = r.order();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Set s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        s.insert(static_cast<Element>(i));
      }
    }
    if (is_hyperideal(r, s)) {
      out.push_back(s);
    }
  }
  return out;
}

// Proper, and x o y inside P forces x or y into P.
inline bool is_prime(HyperRing const& r, Set const& p) {
  if (p.size() == r.order()) {
    return false;
  }
  auto const n = static_cast<Element>(r.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (inside(cell(r, x, y), p) && !p.count(x) && !p.count(y)) {
        return false;
      }
    }
  }
  return true;
}

inline Set everything(HyperRing const& r) {
  Set out;
  for (Element x = 0; x < r.order(); ++x) {
    out.insert(x);
  }
  return out;
}

inline Set radical(HyperRing const& r, Set const& a) {
  Set out = everything(r);
  for (Set const& p : hyperideals(r)) {
    if (inside(a, p) && is_prime(r, p)) {
      Set keep;
      for (Element x : out) {
        if (p.count(x)) {
          keep.insert(x);
        }
      }
      out = keep;
    }
  }
  return out;
}

// x with some power x^k inside A. Powers are iterated until they repeat.
inline Set d_set(HyperRing const& r, Set const& a) {
  Set out;
  for (Element x = 0; x < r.order(); ++x) {
    std::set<Set> seen;
    Set power{x};
    while (seen.insert(power).second) {
      if (inside(power, a)) {
        out.insert(x);
        break;
      }
      power = product(r, power, Set{x});
    }
  }
  return out;
}

// Z_n cell {x g y mod n : g in omega}, straight from the definition.
inline Set zomega_cell(std::size_t n, std::vector<long long> const& omega, Element x, Element y) {
  Set out;
  auto const m = static_cast<long long>(n);
  for (long long g : omega) {
    out.insert(static_cast<Element>((((x * g) % m * y) % m + m) % m));
  }
  return out;
}

}  // namespace oracle
