#include "hypersdf/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

namespace hypersdf {

namespace {

void require_hyperideal(HyperRing const& ring, Subset const& s, char const* what) {
  if (s.empty() || !is_hyperideal(ring, s)) {
    throw PreconditionError(std::string(what) + ": argument is not a hyperideal");
  }
}

void require_proper_hyperideal(HyperRing const& ring, Subset const& s, char const* what) {
  if (s.empty() || !is_proper_hyperideal(ring, s)) {
    throw PreconditionError(std::string(what) + ": argument is not a proper hyperideal");
  }
}

void require_cap(HyperRing const& ring, std::size_t cap, char const* what) {
  if (ring.order() > cap) {
    throw PreconditionError(std::string(what) + ": order " + std::to_string(ring.order())
                            + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

// Worklist closure of `seeds` under `step`, which receives each new member and
// a callback for the subsets it produces.
template <typename Step>
std::vector<Subset> closure(std::vector<Subset> seeds, Step&& step) {
  std::unordered_set<Subset> seen(seeds.begin(), seeds.end());
  std::deque<Subset> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    Subset current = std::move(todo.front());
    todo.pop_front();
    step(current, [&](Subset next) {
      if (seen.insert(next).second) {
        todo.push_back(std::move(next));
      }
    });
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Check is_hyperideal(HyperRing const& ring, Subset const& s) {
  if (s.empty()) {
    throw PreconditionError("is_hyperideal: empty subset");
  }
  auto const n = static_cast<Element>(ring.order());
  Check result;
  s.for_each([&](Element x) {
    if (!result) {
      return;
    }
    s.for_each([&](Element y) {
      if (result && !s.contains(ring.sub(x, y))) {
        result = Check::fail({x, y}, "difference leaves the subset");
      }
    });
    for (Element r = 0; r < n && result; ++r) {
      if (!ring.mul(r, x).is_subset_of(s)) {
        result = Check::fail({r, x}, "product leaves the subset");
      }
    }
  });
  return result;
}

bool is_proper_hyperideal(HyperRing const& ring, Subset const& s) {
  return !s.empty() && !s.is_full() && is_hyperideal(ring, s).holds;
}

Subset additive_closure(HyperRing const& ring, Subset const& gens) {
  Subset current = gens;
  current.insert(ring.zero());
  while (true) {
    Subset next = current | ring.difference(current, current);
    if (next == current) {
      return current;
    }
    current = std::move(next);
  }
}

std::vector<Subset> enumerate_additive_subgroups(HyperRing const& ring, std::size_t cap) {
  require_cap(ring, cap, "enumerate_additive_subgroups");
  auto const n = static_cast<Element>(ring.order());
  return closure({ring.singleton(ring.zero())}, [&](Subset const& group, auto&& emit) {
    for (Element x = 0; x < n; ++x) {
      if (!group.contains(x)) {
        Subset grown = group;
        grown.insert(x);
        emit(additive_closure(ring, grown));
      }
    }
  });
}

std::vector<Subset> enumerate_hyperideals(HyperRing const& ring, std::size_t cap) {
  std::vector<Subset> out;
  for (Subset& group : enumerate_additive_subgroups(ring, cap)) {
    if (is_hyperideal(ring, group)) {
      out.push_back(std::move(group));
    }
  }
  return out;
}

Subset generated_hyperideal(HyperRing const& ring, Subset const& gens) {
  Subset current = gens;
  current.insert(ring.zero());
  Subset const everything = ring.full();
  while (true) {
    Subset next = current | ring.difference(current, current) | ring.product(everything, current);
    if (next == current) {
      return current;
    }
    current = std::move(next);
  }
}

namespace {

template <typename Premise>
Check prime_scan(HyperRing const& ring, Subset const& p, Premise&& premise) {
  auto const n = static_cast<Element>(ring.order());
  for (Element x = 0; x < n; ++x) {
    if (p.contains(x)) {
      continue;
    }
    for (Element y = x; y < n; ++y) {
      if (!p.contains(y) && premise(ring.mul(x, y))) {
        return Check::fail({x, y}, "x o y lies in P but neither factor does");
      }
    }
  }
  return Check::pass();
}

}  // namespace

Check is_prime(HyperRing const& ring, Subset const& p) {
  require_proper_hyperideal(ring, p, "is_prime");
  return prime_scan(ring, p, [&](Subset const& cell) { return cell.is_subset_of(p); });
}

Check is_weakly_prime(HyperRing const& ring, Subset const& p) {
  require_proper_hyperideal(ring, p, "is_weakly_prime");
  return prime_scan(ring, p, [&](Subset const& cell) {
    return !cell.contains(ring.zero()) && cell.is_subset_of(p);
  });
}

Subset colon_ideal(HyperRing const& ring, Subset const& a2, Subset const& a1) {
  require_hyperideal(ring, a2, "colon_ideal");
  require_hyperideal(ring, a1, "colon_ideal");
  auto const n = static_cast<Element>(ring.order());
  Subset out = ring.empty();
  for (Element x = 0; x < n; ++x) {
    if (ring.product(ring.singleton(x), a1).is_subset_of(a2)) {
      out.insert(x);
    }
  }
  return out;
}

bool are_coprime(HyperRing const& ring, Subset const& p, Subset const& q) {
  require_hyperideal(ring, p, "are_coprime");
  require_hyperideal(ring, q, "are_coprime");
  return ring.sum(p, q).is_full();
}

std::optional<Element> principal_generator(HyperRing const& ring, Subset const& p) {
  require_hyperideal(ring, p, "principal_generator");
  std::optional<Element> found;
  p.for_each([&](Element x) {
    if (!found && generated_hyperideal(ring, ring.singleton(x)) == p) {
      found = x;
    }
  });
  return found;
}

Subset d_set(HyperRing const& ring, Subset const& a) {
  require_hyperideal(ring, a, "d_set");
  return elements_with_power_inside(ring, a);
}

IdealLattice::IdealLattice(HyperRing const& ring, std::size_t cap)
    : ring_(&ring), ideals_(enumerate_hyperideals(ring, cap)) {
  for (Subset const& p : ideals_) {
    if (!p.is_full() && is_prime(ring, p)) {
      primes_.push_back(p);
    }
  }
  for (Subset const& p : ideals_) {
    if (!p.is_full() && is_maximal(p)) {
      maximals_.push_back(p);
    }
  }
}

bool IdealLattice::is_maximal(Subset const& p) const {
  require_proper_hyperideal(*ring_, p, "is_maximal");
  return std::none_of(ideals_.begin(), ideals_.end(), [&](Subset const& q) {
    return q != p && !q.is_full() && p.is_subset_of(q);
  });
}

Subset IdealLattice::radical(Subset const& a) const {
  require_hyperideal(*ring_, a, "radical");
  Subset out = ring_->full();
  for (Subset const& p : primes_) {
    if (a.is_subset_of(p)) {
      out &= p;
    }
  }
  return out;
}

Subset IdealLattice::jacobson() const {
  Subset out = ring_->full();
  for (Subset const& m : maximals_) {
    out &= m;
  }
  return out;
}

Subset IdealLattice::smallest_containing(Subset const& gens) const {
  Subset out = ring_->full();
  for (Subset const& a : ideals_) {
    if (gens.is_subset_of(a)) {
      out &= a;
    }
  }
  return out;
}

bool is_maximal(HyperRing const& ring, Subset const& p) {
  return IdealLattice(ring).is_maximal(p);
}

Subset radical(HyperRing const& ring, Subset const& a) {
  return IdealLattice(ring).radical(a);
}

Subset jacobson(HyperRing const& ring) {
  return IdealLattice(ring).jacobson();
}

ProductFamily product_family(HyperRing const& ring, std::size_t cap) {
  require_cap(ring, cap, "product_family");
  auto const n = static_cast<Element>(ring.order());
  std::vector<Subset> singletons;
  std::vector<Subset> factors;
  for (Element c = 0; c < n; ++c) {
    singletons.push_back(ring.singleton(c));
  }
  factors = singletons;
  ProductFamily family;
  family.products = closure(singletons, [&](Subset const& s, auto&& emit) {
    for (Subset const& c : factors) {
      emit(ring.product(s, c));
    }
  });
  family.sums = closure(family.products, [&](Subset const& d, auto&& emit) {
    for (Subset const& c : family.products) {
      emit(ring.sum(d, c));
    }
  });
  return family;
}

namespace {

Check containment_scan(Subset const& a, std::vector<Subset> const& members) {
  for (Subset const& c : members) {
    if (c.intersects(a) && !c.is_subset_of(a)) {
      return Check::fail(c.elements(), "family member meets the hyperideal without lying inside it");
    }
  }
  return Check::pass();
}

}  // namespace

Check is_c_hyperideal(HyperRing const& ring, Subset const& a, ProductFamily const& family) {
  require_hyperideal(ring, a, "is_c_hyperideal");
  return containment_scan(a, family.products);
}

Check is_strong_c_hyperideal(HyperRing const& ring, Subset const& a, ProductFamily const& family) {
  require_hyperideal(ring, a, "is_strong_c_hyperideal");
  return containment_scan(a, family.sums);
}

}  // namespace hypersdf
