#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypersdf/hyperring.hpp"
#include "hypersdf/ideals.hpp"
#include "hypersdf/sdf.hpp"

namespace hypersdf {

// Every flag computed for one (ring, subset) pair. Flags that need a proper
// hyperideal stay false otherwise; `witnesses` holds the refuting elements
// of each failed flag by name.
struct ClassificationReport {
  Subset members;
  bool is_hyperideal = false;
  bool is_proper = false;
  bool is_nonzero = false;
  bool is_prime = false;
  bool is_weakly_prime = false;
  bool is_maximal = false;
  bool is_c_hyperideal = false;
  bool is_strong_c_hyperideal = false;
  bool is_principal = false;
  bool is_sdf = false;
  bool is_weakly_sdf = false;
  bool is_sdf_both = false;
  std::optional<Element> generator;
  std::size_t sdf_firing_pairs = 0;
  std::size_t weak_firing_pairs = 0;
  std::vector<std::pair<Element, Element>> sdf_firing;
  std::vector<std::pair<Element, Element>> weak_firing;
  Subset radical;
  Subset d_set;
  std::size_t quotient_characteristic = 0;  // char(H/P); 0 unless a hyperideal
  std::optional<bool> one_plus_one_in;      // needs a designated identity
  std::map<std::string, std::vector<Element>> witnesses;
};

// Uses the given lattice and family instead of recomputing them.
ClassificationReport classify(HyperRing const& ring, Subset const& s, IdealLattice const& lattice,
                              ProductFamily const& family);
ClassificationReport classify(HyperRing const& ring, Subset const& s);

// Ring-level facts plus a report for every hyperideal. Keeps a reference to
// the ring.
class RingAnalysis {
 public:
  explicit RingAnalysis(HyperRing const& ring);

  [[nodiscard]] HyperRing const& ring() const noexcept { return *ring_; }
  [[nodiscard]] IdealLattice const& lattice() const noexcept { return lattice_; }
  [[nodiscard]] ProductFamily const& family() const noexcept { return family_; }
  [[nodiscard]] std::vector<ClassificationReport> const& ideals() const noexcept { return ideals_; }
  // nullptr when s is not a hyperideal.
  [[nodiscard]] ClassificationReport const* find(Subset const& s) const;

  [[nodiscard]] bool has_identity() const noexcept { return ring_->one().has_value(); }
  [[nodiscard]] Subset const& nilpotents() const noexcept { return nilpotents_; }
  [[nodiscard]] bool nilpotents_form_ideal() const noexcept { return nil_ideal_; }
  [[nodiscard]] bool regular() const noexcept { return regular_; }
  [[nodiscard]] std::size_t characteristic() const noexcept { return characteristic_; }
  // U(H); empty without a designated identity.
  [[nodiscard]] Subset const& units() const noexcept { return units_; }
  // 1 + 1, when an identity is designated.
  [[nodiscard]] std::optional<Element> two() const noexcept { return two_; }
  [[nodiscard]] bool two_is_unit() const { return two_ && units_.contains(*two_); }

  [[nodiscard]] bool all_c() const noexcept { return all_c_; }
  [[nodiscard]] bool all_nonzero_proper_c() const noexcept { return all_nonzero_proper_c_; }

 private:
  HyperRing const* ring_;
  IdealLattice lattice_;
  ProductFamily family_;
  std::vector<ClassificationReport> ideals_;
  Subset nilpotents_;
  bool nil_ideal_ = false;
  bool regular_ = false;
  std::size_t characteristic_ = 0;
  Subset units_;
  std::optional<Element> two_;
  bool all_c_ = true;
  bool all_nonzero_proper_c_ = true;
};

}  // namespace hypersdf
