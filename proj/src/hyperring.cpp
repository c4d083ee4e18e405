#include "hypersdf/hyperring.hpp"

#include <atomic>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

namespace hypersdf {

namespace {

std::string cell_name(Element x, Element y) {
  return std::to_string(x) + " o " + std::to_string(y);
}

// Follows the sequence {x}, {x} o {x}, {x} o x^2, ... until `stop` accepts a
// power or the sequence revisits a subset.
template <typename Stop>
bool some_power(HyperRing const& ring, Element x, Stop&& stop) {
  Subset const base = ring.singleton(x);
  Subset current = base;
  std::unordered_set<Subset> seen;
  while (seen.insert(current).second) {
    if (stop(current)) {
      return true;
    }
    current = ring.product(base, current);
  }
  return false;
}

}  // namespace

RingId new_ring_id() {
  static std::atomic<std::uint64_t> next{1};
  return RingId{next.fetch_add(1, std::memory_order_relaxed)};
}

HyperRing::HyperRing(std::string name, std::size_t order, Element zero, std::optional<Element> one,
                     std::vector<Element> add, std::vector<std::vector<Element>> mul)
    : id_(new_ring_id()),
      name_(std::move(name)),
      order_(order),
      zero_(zero),
      one_(one),
      add_(std::move(add)) {
  if (order_ == 0) {
    throw StructuralError("hyperring order must be positive");
  }
  if (zero_ >= order_) {
    throw StructuralError("zero element " + std::to_string(zero_) + " is not in the carrier");
  }
  if (one_ && *one_ >= order_) {
    throw StructuralError("identity element " + std::to_string(*one_) + " is not in the carrier");
  }
  if (add_.size() != order_ * order_) {
    throw StructuralError("addition table has " + std::to_string(add_.size())
                          + " entries, expected " + std::to_string(order_ * order_));
  }
  if (mul.size() != order_ * order_) {
    throw StructuralError("multiplication table has " + std::to_string(mul.size())
                          + " cells, expected " + std::to_string(order_ * order_));
  }
  for (Element v : add_) {
    if (v >= order_) {
      throw StructuralError("addition table entry " + std::to_string(v) + " is not in the carrier");
    }
  }
  mul_.reserve(mul.size());
  for (std::size_t i = 0; i < mul.size(); ++i) {
    auto const x = static_cast<Element>(i / order_);
    auto const y = static_cast<Element>(i % order_);
    if (mul[i].empty()) {
      throw StructuralError("empty hyperproduct cell " + cell_name(x, y));
    }
    Subset cell(id_, order_);
    for (Element v : mul[i]) {
      if (v >= order_) {
        throw StructuralError("cell " + cell_name(x, y) + " contains " + std::to_string(v)
                              + ", which is not in the carrier");
      }
      cell.insert(v);
    }
    mul_.push_back(std::move(cell));
  }
  neg_.assign(order_, static_cast<Element>(order_));
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (add_[x * order_ + y] == zero_) {
        neg_[x] = y;
        break;
      }
    }
  }
}

Element HyperRing::require_one() const {
  if (!one_) {
    throw PreconditionError("hyperring '" + name_ + "' has no designated identity");
  }
  return *one_;
}

Subset HyperRing::singleton(Element x) const {
  Subset s(id_, order_);
  s.insert(x);
  return s;
}

Subset HyperRing::subset(std::vector<Element> const& elements) const {
  Subset s(id_, order_);
  for (Element x : elements) {
    s.insert(x);
  }
  return s;
}

void HyperRing::require_member(Subset const& s) const {
  if (s.ring() != id_ || s.universe() != order_) {
    throw std::invalid_argument("subset does not belong to hyperring '" + name_ + "'");
  }
}

Subset HyperRing::product(Subset const& a, Subset const& b) const {
  require_member(a);
  require_member(b);
  if (a.empty() || b.empty()) {
    throw PreconditionError("hyperproduct of an empty subset");
  }
  Subset out(id_, order_);
  a.for_each([&](Element x) { b.for_each([&](Element y) { out |= mul(x, y); }); });
  return out;
}

Subset HyperRing::sum(Subset const& a, Subset const& b) const {
  require_member(a);
  require_member(b);
  Subset out(id_, order_);
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(add(x, y)); }); });
  return out;
}

Subset HyperRing::negate(Subset const& a) const {
  require_member(a);
  Subset out(id_, order_);
  a.for_each([&](Element x) { out.insert(neg(x)); });
  return out;
}

Subset HyperRing::difference(Subset const& a, Subset const& b) const {
  return sum(a, negate(b));
}

Subset HyperRing::power(Element x, unsigned k) const {
  if (k == 0) {
    throw PreconditionError("power exponent must be at least 1");
  }
  Subset const base = singleton(x);
  Subset out = base;
  for (unsigned i = 1; i < k; ++i) {
    out = product(base, out);
  }
  return out;
}

Element HyperRing::multiple(unsigned k, Element x) const {
  Element acc = zero_;
  for (unsigned i = 0; i < k; ++i) {
    acc = add(acc, x);
  }
  return acc;
}

bool HyperRing::same_tables(HyperRing const& other) const {
  if (order_ != other.order_ || zero_ != other.zero_ || one_ != other.one_ || add_ != other.add_) {
    return false;
  }
  for (std::size_t i = 0; i < mul_.size(); ++i) {
    if (mul_[i].elements() != other.mul_[i].elements()) {
      return false;
    }
  }
  return true;
}

AxiomReport validate_hyperring(HyperRing const& ring) {
  AxiomReport report;
  auto const n = static_cast<Element>(ring.order());
  auto fail = [&](bool& flag, char const* axiom, std::vector<Element> witness) {
    if (flag) {
      report.violations.push_back({axiom, std::move(witness)});
    }
    flag = false;
  };

  // (H,+) abelian group with identity zero.
  for (Element x = 0; x < n && report.abelian_group; ++x) {
    if (ring.add(ring.zero(), x) != x || ring.add(x, ring.zero()) != x) {
      fail(report.abelian_group, "additive identity", {x});
    } else if (ring.neg(x) >= n) {
      fail(report.abelian_group, "additive inverse", {x});
    }
    for (Element y = 0; y < n && report.abelian_group; ++y) {
      if (ring.add(x, y) != ring.add(y, x)) {
        fail(report.abelian_group, "additive commutativity", {x, y});
      }
      for (Element z = 0; z < n && report.abelian_group; ++z) {
        if (ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z))) {
          fail(report.abelian_group, "additive associativity", {x, y, z});
        }
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    Subset const sx = ring.singleton(x);
    for (Element y = 0; y < n; ++y) {
      if (report.commutative && ring.mul(x, y) != ring.mul(y, x)) {
        fail(report.commutative, "commutativity", {x, y});
      }
      if (report.sign_rule && report.abelian_group) {
        Subset const negated = ring.negate(ring.mul(x, y));
        if (ring.mul(x, ring.neg(y)) != negated || ring.mul(ring.neg(x), y) != negated) {
          fail(report.sign_rule, "sign rule", {x, y});
        }
      }
      for (Element z = 0; z < n; ++z) {
        if (report.semihypergroup) {
          Subset const left = ring.product(ring.mul(x, y), ring.singleton(z));
          Subset const right = ring.product(sx, ring.mul(y, z));
          if (left != right) {
            fail(report.semihypergroup, "associativity", {x, y, z});
          }
        }
        if (report.distributive_inclusion || report.strongly_distributive) {
          Subset const lhs = ring.mul(x, ring.add(y, z));
          Subset const rhs = ring.sum(ring.mul(x, y), ring.mul(x, z));
          if (!lhs.is_subset_of(rhs)) {
            fail(report.distributive_inclusion, "distributive inclusion", {x, y, z});
            report.strongly_distributive = false;
          } else if (lhs != rhs) {
            report.strongly_distributive = false;
          }
        }
      }
    }
  }
  if (!report.abelian_group && report.sign_rule) {
    fail(report.sign_rule, "sign rule", {});
  }
  report.identity_witnesses = identity_witnesses(ring);
  return report;
}

Subset identity_witnesses(HyperRing const& ring) {
  auto const n = static_cast<Element>(ring.order());
  Subset out = ring.empty();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = ring.mul(x, e).contains(x);
    }
    if (ok) {
      out.insert(e);
    }
  }
  return out;
}

Subset units(HyperRing const& ring) {
  Element const one = ring.require_one();
  auto const n = static_cast<Element>(ring.order());
  Subset out = ring.empty();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (ring.mul(x, y).contains(one)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

Subset nilpotents(HyperRing const& ring) {
  auto const n = static_cast<Element>(ring.order());
  Subset out = ring.empty();
  for (Element x = 0; x < n; ++x) {
    if (some_power(ring, x, [&](Subset const& p) { return p.contains(ring.zero()); })) {
      out.insert(x);
    }
  }
  return out;
}

Subset elements_with_power_inside(HyperRing const& ring, Subset const& target) {
  auto const n = static_cast<Element>(ring.order());
  Subset out = ring.empty();
  for (Element x = 0; x < n; ++x) {
    if (some_power(ring, x, [&](Subset const& p) { return p.is_subset_of(target); })) {
      out.insert(x);
    }
  }
  return out;
}

Subset regular_elements(HyperRing const& ring) {
  auto const n = static_cast<Element>(ring.order());
  Subset out = ring.empty();
  for (Element x = 0; x < n; ++x) {
    Subset const square = ring.mul(x, x);
    for (Element y = 0; y < n; ++y) {
      if (ring.product(square, ring.singleton(y)).contains(x)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

std::size_t characteristic(HyperRing const& ring) {
  return characteristic_modulo(ring, ring.singleton(ring.zero()));
}

std::size_t characteristic_modulo(HyperRing const& ring, Subset const& a) {
  auto const n = static_cast<Element>(ring.order());
  std::size_t result = 1;
  for (Element x = 0; x < n; ++x) {
    // Order of x + A in the additive quotient.
    std::size_t k = 1;
    Element acc = x;
    while (!a.contains(acc)) {
      acc = ring.add(acc, x);
      ++k;
      if (k > ring.order()) {
        throw PreconditionError("characteristic_modulo: argument is not an additive subgroup");
      }
    }
    result = std::lcm(result, k);
  }
  return result;
}

}  // namespace hypersdf
