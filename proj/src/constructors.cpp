#include "hypersdf/constructors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "hypersdf/ideals.hpp"

namespace hypersdf {

namespace {

std::optional<Element> least_identity(HyperRing const& ring) {
  Subset const witnesses = identity_witnesses(ring);
  if (witnesses.empty()) {
    return std::nullopt;
  }
  return witnesses.min();
}

// Rebuilds `ring` with a designated identity.
HyperRing with_identity(HyperRing const& ring, std::optional<Element> one) {
  auto const n = ring.order();
  std::vector<std::vector<Element>> cells;
  cells.reserve(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      cells.push_back(ring.mul(x, y).elements());
    }
  }
  return HyperRing(ring.name(), n, ring.zero(), one, ring.add_table(), std::move(cells));
}

void assert_valid(HyperRing const& ring, char const* constructor) {
  AxiomReport const report = validate_hyperring(ring);
  if (!report.ok()) {
    AxiomViolation const& v = report.violations.front();
    throw ConstructionError(std::string(constructor) + " produced a table violating "
                                + v.axiom,
                            v.witness);
  }
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > cap / base) {
      return cap + 1;
    }
    out *= base;
  }
  return out;
}

}  // namespace

HyperRing zomega(std::size_t n, std::span<long long const> omega) {
  if (n < 2) {
    throw PreconditionError("zomega: modulus must be at least 2");
  }
  std::set<long long> const distinct(omega.begin(), omega.end());
  if (distinct.size() < 2) {
    throw PreconditionError("zomega: Omega needs at least two distinct integers");
  }
  auto const mod = static_cast<long long>(n);
  std::set<Element> residues;
  for (long long g : distinct) {
    residues.insert(static_cast<Element>(((g % mod) + mod) % mod));
  }

  std::ostringstream name;
  name << 'Z' << n << '{';
  bool first = true;
  for (Element g : residues) {
    name << (first ? "" : ",") << g;
    first = false;
  }
  name << '}';

  std::vector<Element> add(n * n);
  std::vector<std::vector<Element>> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      add[x * n + y] = static_cast<Element>((x + y) % n);
      std::set<Element> cell;
      for (Element g : residues) {
        cell.insert(static_cast<Element>((std::uint64_t{x} * g % n) * y % n));
      }
      cells[x * n + y].assign(cell.begin(), cell.end());
    }
  }
  HyperRing draft(name.str(), n, 0, std::nullopt, std::move(add), std::move(cells));
  assert_valid(draft, "zomega");
  return with_identity(draft, least_identity(draft));
}

HyperRing product_ring(HyperRing const& left, HyperRing const& right) {
  auto const n1 = left.order();
  auto const n2 = right.order();
  auto const n = n1 * n2;
  auto index = [&](Element a, Element b) { return static_cast<Element>(a * n2 + b); };

  std::vector<Element> add(n * n);
  std::vector<std::vector<Element>> cells(n * n);
  for (Element a1 = 0; a1 < n1; ++a1) {
    for (Element b1 = 0; b1 < n2; ++b1) {
      for (Element a2 = 0; a2 < n1; ++a2) {
        for (Element b2 = 0; b2 < n2; ++b2) {
          std::size_t const cell = std::size_t{index(a1, b1)} * n + index(a2, b2);
          add[cell] = index(left.add(a1, a2), right.add(b1, b2));
          auto& members = cells[cell];
          left.mul(a1, a2).for_each([&](Element u) {
            right.mul(b1, b2).for_each([&](Element v) { members.push_back(index(u, v)); });
          });
        }
      }
    }
  }
  std::optional<Element> one;
  if (left.one() && right.one()) {
    one = index(*left.one(), *right.one());
  }
  HyperRing out("(" + left.name() + ")x(" + right.name() + ")", n, index(left.zero(), right.zero()),
                one, std::move(add), std::move(cells));
  assert_valid(out, "product_ring");
  return out;
}

QuotientRing quotient_ring(HyperRing const& ring, Subset const& ideal) {
  if (ideal.empty() || !is_hyperideal(ring, ideal)) {
    throw PreconditionError("quotient_ring: the divisor is not a hyperideal");
  }
  auto const n = static_cast<Element>(ring.order());

  // Coset of x is identified by its least member.
  std::vector<Element> least(n);
  for (Element x = 0; x < n; ++x) {
    Element best = n;
    ideal.for_each([&](Element q) { best = std::min(best, ring.add(x, q)); });
    least[x] = best;
  }
  std::vector<Element> representatives(least);
  std::sort(representatives.begin(), representatives.end());
  representatives.erase(std::unique(representatives.begin(), representatives.end()),
                        representatives.end());
  auto const k = static_cast<Element>(representatives.size());
  std::vector<Element> projection(n);
  for (Element x = 0; x < n; ++x) {
    projection[x] = static_cast<Element>(
        std::lower_bound(representatives.begin(), representatives.end(), least[x])
        - representatives.begin());
  }

  auto image = [&](Subset const& s) {
    std::set<Element> out;
    s.for_each([&](Element z) { out.insert(projection[z]); });
    return out;
  };

  std::vector<Element> add(std::size_t{k} * k);
  std::vector<std::vector<Element>> cells(std::size_t{k} * k);
  for (Element c = 0; c < k; ++c) {
    for (Element d = 0; d < k; ++d) {
      Element const x = representatives[c];
      Element const y = representatives[d];
      add[c * k + d] = projection[ring.add(x, y)];
      std::set<Element> const expected = image(ring.mul(x, y));
      // Every choice of representatives must give the same coset set.
      for (Element x2 = 0; x2 < n; ++x2) {
        if (projection[x2] != c) {
          continue;
        }
        for (Element y2 = 0; y2 < n; ++y2) {
          if (projection[y2] == d && image(ring.mul(x2, y2)) != expected) {
            throw ConstructionError("quotient_ring: coset product depends on representatives",
                                    {x, y, x2, y2});
          }
        }
      }
      cells[c * k + d].assign(expected.begin(), expected.end());
    }
  }
  std::optional<Element> one;
  if (ring.one()) {
    one = projection[*ring.one()];
  }
  std::ostringstream name;
  name << ring.name() << "/{";
  bool first = true;
  ideal.for_each([&](Element q) {
    name << (first ? "" : ",") << q;
    first = false;
  });
  name << '}';
  HyperRing out(name.str(), k, projection[ring.zero()], one, std::move(add), std::move(cells));
  assert_valid(out, "quotient_ring");
  return {std::move(out), std::move(projection), std::move(representatives)};
}

SubHyperRing sub_hyperring(HyperRing const& ring, Subset const& carrier) {
  if (!carrier.contains(ring.zero())) {
    throw PreconditionError("sub_hyperring: carrier must contain zero");
  }
  std::vector<Element> const embedding = carrier.elements();
  auto const k = embedding.size();
  std::vector<Element> position(ring.order(), static_cast<Element>(k));
  for (std::size_t i = 0; i < k; ++i) {
    position[embedding[i]] = static_cast<Element>(i);
  }
  std::vector<Element> add(k * k);
  std::vector<std::vector<Element>> cells(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Element const x = embedding[i];
      Element const y = embedding[j];
      Element const s = ring.sub(x, y);
      if (!carrier.contains(s)) {
        throw PreconditionError("sub_hyperring: carrier is not closed under subtraction");
      }
      add[i * k + j] = position[ring.add(x, y)];
      if (!ring.mul(x, y).is_subset_of(carrier)) {
        throw PreconditionError("sub_hyperring: carrier is not closed under the hyperoperation");
      }
      ring.mul(x, y).for_each([&](Element z) { cells[i * k + j].push_back(position[z]); });
    }
  }
  HyperRing draft(ring.name() + "|sub", k, position[ring.zero()], std::nullopt, std::move(add),
                  std::move(cells));
  std::optional<Element> one;
  if (ring.one() && carrier.contains(*ring.one())) {
    one = position[*ring.one()];
  } else {
    one = least_identity(draft);
  }
  return {with_identity(draft, one), embedding};
}

MatrixRing::MatrixRing(HyperRing const& base, std::size_t m, std::size_t cap)
    : base_(base), m_(m), order_(0), id_(new_ring_id()) {
  if (m == 0) {
    throw PreconditionError("matrix_ring: dimension must be at least 1");
  }
  order_ = checked_power(base.order(), m * m, cap);
  if (order_ > cap) {
    throw PreconditionError("matrix_ring: order " + std::to_string(base.order()) + "^"
                            + std::to_string(m * m) + " exceeds the cap "
                            + std::to_string(cap));
  }
  zero_ = corner(base.zero());
}

std::vector<Element> MatrixRing::entries(Element matrix) const {
  auto const n = static_cast<Element>(base_.order());
  std::vector<Element> out(m_ * m_);
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = matrix % n;
    matrix /= n;
  }
  return out;
}

Element MatrixRing::encode(std::span<Element const> entries) const {
  auto const n = static_cast<Element>(base_.order());
  Element out = 0;
  for (Element e : entries) {
    out = out * n + e;
  }
  return out;
}

Element MatrixRing::add(Element x, Element y) const {
  auto a = entries(x);
  auto const b = entries(y);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = base_.add(a[i], b[i]);
  }
  return encode(a);
}

Element MatrixRing::neg(Element x) const {
  auto a = entries(x);
  for (Element& e : a) {
    e = base_.neg(e);
  }
  return encode(a);
}

Subset MatrixRing::mul(Element x, Element y) const {
  auto const a = entries(x);
  auto const b = entries(y);
  std::vector<std::vector<Element>> choices(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      Subset entry = base_.mul(a[i * m_], b[j]);
      for (std::size_t k = 1; k < m_; ++k) {
        entry = base_.sum(entry, base_.mul(a[i * m_ + k], b[k * m_ + j]));
      }
      choices[i * m_ + j] = entry.elements();
    }
  }
  Subset out(id_, order_);
  std::vector<Element> pick(m_ * m_);
  // Odometer over the Cartesian product of the entry sets.
  std::vector<std::size_t> cursor(m_ * m_, 0);
  while (true) {
    for (std::size_t i = 0; i < pick.size(); ++i) {
      pick[i] = choices[i][cursor[i]];
    }
    out.insert(encode(pick));
    std::size_t pos = cursor.size();
    while (pos > 0) {
      --pos;
      if (++cursor[pos] < choices[pos].size()) {
        break;
      }
      cursor[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
  }
}

Subset MatrixRing::product(Subset const& a, Subset const& b) const {
  if (a.ring() != id_ || b.ring() != id_) {
    throw std::invalid_argument("subset does not belong to this matrix ring");
  }
  if (a.empty() || b.empty()) {
    throw PreconditionError("hyperproduct of an empty subset");
  }
  Subset out(id_, order_);
  a.for_each([&](Element x) { b.for_each([&](Element y) { out |= mul(x, y); }); });
  return out;
}

Subset MatrixRing::sum(Subset const& a, Subset const& b) const {
  if (a.ring() != id_ || b.ring() != id_) {
    throw std::invalid_argument("subset does not belong to this matrix ring");
  }
  Subset out(id_, order_);
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(add(x, y)); }); });
  return out;
}

Subset MatrixRing::negate(Subset const& a) const {
  if (a.ring() != id_) {
    throw std::invalid_argument("subset does not belong to this matrix ring");
  }
  Subset out(id_, order_);
  a.for_each([&](Element x) { out.insert(neg(x)); });
  return out;
}

Subset MatrixRing::difference(Subset const& a, Subset const& b) const {
  return sum(a, negate(b));
}

Element MatrixRing::corner(Element x) const {
  std::vector<Element> e(m_ * m_, base_.zero());
  e[0] = x;
  return encode(e);
}

Subset MatrixRing::lift(Subset const& base_subset) const {
  if (base_subset.ring() != base_.id()) {
    throw std::invalid_argument("lift: subset does not belong to the base ring");
  }
  Subset out(id_, order_);
  for (Element x = 0; x < order_; ++x) {
    auto const e = entries(x);
    if (std::all_of(e.begin(), e.end(), [&](Element v) { return base_subset.contains(v); })) {
      out.insert(x);
    }
  }
  return out;
}

std::vector<Subset> MatrixRing::entry_sets(Subset const& matrices) const {
  std::vector<Subset> out(m_ * m_, base_.empty());
  matrices.for_each([&](Element x) {
    auto const e = entries(x);
    for (std::size_t i = 0; i < e.size(); ++i) {
      out[i].insert(e[i]);
    }
  });
  return out;
}

bool MatrixRing::entrywise_subset(std::span<Subset const> a, std::span<Subset const> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("entrywise_subset: matrices of different dimension");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_subset_of(b[i])) {
      return false;
    }
  }
  return true;
}

HyperRing MatrixRing::to_hyperring() const {
  auto const n = order_;
  std::vector<Element> add_table(n * n);
  std::vector<std::vector<Element>> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      add_table[x * n + y] = add(x, y);
      cells[x * n + y] = mul(x, y).elements();
    }
  }
  std::optional<Element> one;
  if (base_.one()) {
    std::vector<Element> identity(m_ * m_, base_.zero());
    for (std::size_t i = 0; i < m_; ++i) {
      identity[i * m_ + i] = *base_.one();
    }
    one = encode(identity);
  }
  return HyperRing("M" + std::to_string(m_) + "(" + base_.name() + ")", n, zero(), one,
                   std::move(add_table), std::move(cells));
}

bool HomMap::injective() const {
  std::vector<bool> hit(target_order, false);
  for (Element y : map) {
    if (hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

bool HomMap::surjective() const {
  std::vector<bool> hit(target_order, false);
  for (Element y : map) {
    hit[y] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

HomMap check_good_hom(std::vector<Element> map, HyperRing const& source, HyperRing const& target) {
  if (map.size() != source.order()) {
    throw PreconditionError("check_good_hom: map is not total on the source");
  }
  for (Element y : map) {
    if (y >= target.order()) {
      throw PreconditionError("check_good_hom: map leaves the target carrier");
    }
  }
  HomMap theta;
  theta.source = source.id();
  theta.target = target.id();
  theta.source_order = source.order();
  theta.target_order = target.order();
  theta.map = std::move(map);
  theta.additive = true;
  theta.multiplicative = true;
  auto const n = static_cast<Element>(source.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (theta.additive && theta.map[source.add(x, y)] != target.add(theta.map[x], theta.map[y])) {
        theta.additive = false;
        theta.additive_witness = {x, y};
      }
      if (theta.multiplicative) {
        Subset image = target.empty();
        source.mul(x, y).for_each([&](Element z) { image.insert(theta.map[z]); });
        if (image != target.mul(theta.map[x], theta.map[y])) {
          theta.multiplicative = false;
          theta.multiplicative_witness = {x, y};
        }
      }
    }
  }
  theta.kernel = source.empty();
  for (Element x = 0; x < n; ++x) {
    if (theta.map[x] == target.zero()) {
      theta.kernel.insert(x);
    }
  }
  return theta;
}

Subset hom_preimage(HomMap const& theta, Subset const& target_subset) {
  if (!theta.good()) {
    throw PreconditionError("hom_preimage: map is not a good homomorphism");
  }
  if (target_subset.ring() != theta.target) {
    throw std::invalid_argument("hom_preimage: subset does not belong to the target");
  }
  Subset out(theta.source, theta.source_order);
  for (Element x = 0; x < theta.map.size(); ++x) {
    if (target_subset.contains(theta.map[x])) {
      out.insert(x);
    }
  }
  return out;
}

Subset hom_image(HomMap const& theta, Subset const& source_subset) {
  if (!theta.good()) {
    throw PreconditionError("hom_image: map is not a good homomorphism");
  }
  if (source_subset.ring() != theta.source) {
    throw std::invalid_argument("hom_image: subset does not belong to the source");
  }
  Subset out(theta.target, theta.target_order);
  source_subset.for_each([&](Element x) { out.insert(theta.map[x]); });
  return out;
}

}  // namespace hypersdf
