#include "hypersdf/analysis.hpp"

#include <algorithm>

namespace hypersdf {

ClassificationReport classify(HyperRing const& ring, Subset const& s, IdealLattice const& lattice,
                              ProductFamily const& family) {
  ClassificationReport r;
  r.members = s;
  r.is_nonzero = s.count() > 1 || (s.count() == 1 && !s.contains(ring.zero()));
  Check const ideal = is_hyperideal(ring, s);
  r.is_hyperideal = ideal.holds;
  if (!ideal.holds) {
    r.witnesses["hyperideal"] = ideal.witness;
    return r;
  }
  r.is_proper = !s.is_full();
  r.radical = lattice.radical(s);
  r.d_set = d_set(ring, s);
  r.quotient_characteristic = characteristic_modulo(ring, s);
  if (auto one = ring.one()) {
    r.one_plus_one_in = s.contains(ring.add(*one, *one));
  }
  r.generator = principal_generator(ring, s);
  r.is_principal = r.generator.has_value();

  Check const c = is_c_hyperideal(ring, s, family);
  r.is_c_hyperideal = c.holds;
  if (!c.holds) {
    r.witnesses["cHyperideal"] = c.witness;
  }
  Check const strong = is_strong_c_hyperideal(ring, s, family);
  r.is_strong_c_hyperideal = strong.holds;
  if (!strong.holds) {
    r.witnesses["strongCHyperideal"] = strong.witness;
  }
  if (!r.is_proper) {
    return r;
  }

  Check const prime = is_prime(ring, s);
  r.is_prime = prime.holds;
  if (!prime.holds) {
    r.witnesses["prime"] = prime.witness;
  }
  Check const weak = is_weakly_prime(ring, s);
  r.is_weakly_prime = weak.holds;
  if (!weak.holds) {
    r.witnesses["weaklyPrime"] = weak.witness;
  }
  r.is_maximal = lattice.is_maximal(s);

  auto record = [&](SdfVariant variant, char const* name, bool& flag) {
    SdfResult res = scan_sdf(ring, s, variant, ScanMode::exhaustive);
    flag = res.holds;
    if (!res.holds) {
      r.witnesses[name] = {res.violations.front().x, res.violations.front().y};
    }
    return res;
  };
  SdfResult sdf = record(SdfVariant::sdf, "sdf", r.is_sdf);
  r.sdf_firing_pairs = sdf.firing_pairs;
  r.sdf_firing = std::move(sdf.firing);
  SdfResult weakly = record(SdfVariant::weakly, "weaklySdf", r.is_weakly_sdf);
  r.weak_firing_pairs = weakly.firing_pairs;
  r.weak_firing = std::move(weakly.firing);
  record(SdfVariant::both, "sdfBoth", r.is_sdf_both);
  return r;
}

ClassificationReport classify(HyperRing const& ring, Subset const& s) {
  IdealLattice const lattice(ring);
  return classify(ring, s, lattice, product_family(ring));
}

RingAnalysis::RingAnalysis(HyperRing const& ring)
    : ring_(&ring), lattice_(ring), family_(product_family(ring)) {
  for (Subset const& a : lattice_.ideals()) {
    ideals_.push_back(classify(ring, a, lattice_, family_));
    ClassificationReport const& r = ideals_.back();
    all_c_ = all_c_ && r.is_c_hyperideal;
    if (r.is_nonzero && r.is_proper) {
      all_nonzero_proper_c_ = all_nonzero_proper_c_ && r.is_c_hyperideal;
    }
  }
  nilpotents_ = hypersdf::nilpotents(ring);
  nil_ideal_ = is_hyperideal(ring, nilpotents_).holds;
  regular_ = regular_elements(ring).is_full();
  characteristic_ = hypersdf::characteristic(ring);
  units_ = ring.empty();
  if (auto one = ring.one()) {
    units_ = hypersdf::units(ring);
    two_ = ring.add(*one, *one);
  }
}

ClassificationReport const* RingAnalysis::find(Subset const& s) const {
  auto const& all = lattice_.ideals();
  auto it = std::lower_bound(all.begin(), all.end(), s);
  if (it == all.end() || *it != s) {
    return nullptr;
  }
  return &ideals_[static_cast<std::size_t>(it - all.begin())];
}

}  // namespace hypersdf
