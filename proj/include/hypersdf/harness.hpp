#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersdf/analysis.hpp"
#include "hypersdf/constructors.hpp"
#include "hypersdf/corpus.hpp"
#include "hypersdf/error.hpp"

namespace hypersdf {

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

enum class InstanceKind { ideal, ring, ideal_family, hom, sub_quotient, matrix, product };

char const* to_string(InstanceKind kind) noexcept;

struct TheoremCase {
  std::string id;
  std::string statement;
  InstanceKind kind = InstanceKind::ideal;
  // Non-gating entries are reported but excluded from acceptance.
  bool gating = true;
  // Sub-checks; a biconditional has one part per direction.
  std::vector<std::string> parts;
};

// Fixed order: P0, T1..T4, L5, C6, T7..T18, W1, W2, W3, W4, W2-conj.
std::vector<TheoremCase> const& theorem_registry();
// Throws UnknownTheorem.
TheoremCase const& find_theorem(std::string_view id);

// Enough to rebuild the failing instance outside the harness.
struct Counterexample {
  struct Ring {
    std::string role;
    std::string label;
    std::string document;  // canonical ring file
  };
  struct Set {
    std::string role;
    std::vector<Element> elements;
  };

  std::size_t instance = 0;  // ordinal among the scanned instances
  std::string descriptor;
  std::vector<std::string> failed_parts;
  std::vector<Ring> rings;
  std::vector<Set> sets;
  std::vector<Element> map;  // for homomorphism instances
};

struct PartTally {
  std::string name;
  std::size_t premises = 0;
  std::size_t held = 0;
};

// An instance counts towards premises_satisfied when the premise of at least
// one part holds, and towards conclusions_held when every such part's
// conclusion holds too. Instances the theorem cannot speak about (no
// designated identity, an ill-defined quotient, a matrix ring beyond the cap)
// are counted in `inapplicable` and nowhere else below instances_scanned.
struct TheoremVerdict {
  std::string id;
  std::string statement;
  bool gating = true;
  std::size_t instances_scanned = 0;
  std::size_t inapplicable = 0;
  std::size_t premises_satisfied = 0;
  std::size_t conclusions_held = 0;
  std::vector<PartTally> parts;
  std::vector<Counterexample> counterexamples;
  // Theorem-specific counters, e.g. agreement between the two matrix routes.
  std::vector<std::pair<std::string, std::size_t>> extras;

  [[nodiscard]] bool vacuous() const noexcept { return premises_satisfied == 0; }
  [[nodiscard]] bool has_counterexample() const noexcept { return !counterexamples.empty(); }
  [[nodiscard]] std::size_t extra(std::string_view name) const;
};

struct HomRecord {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string origin;
  HomMap theta;
};

// A corpus plus lazily computed per-ring analyses. Not copyable: analyses
// refer to the rings by address.
class CorpusAnalysis {
 public:
  explicit CorpusAnalysis(Corpus corpus);
  CorpusAnalysis(CorpusAnalysis const&) = delete;
  CorpusAnalysis& operator=(CorpusAnalysis const&) = delete;

  [[nodiscard]] Corpus const& corpus() const noexcept { return *corpus_; }
  [[nodiscard]] std::size_t size() const noexcept { return corpus_->rings.size(); }
  [[nodiscard]] HyperRing const& ring(std::size_t i) const { return corpus_->rings.at(i).ring; }
  [[nodiscard]] std::string const& label(std::size_t i) const { return corpus_->rings.at(i).label; }
  RingAnalysis const& at(std::size_t i);

  // Good homomorphisms between corpus rings: quotient projections, product
  // projections and injections, and every good map between rings of order
  // at most `small_order`.
  std::vector<HomRecord> const& homs();
  static constexpr std::size_t small_order = 4;

 private:
  std::unique_ptr<Corpus> corpus_;
  std::vector<std::unique_ptr<RingAnalysis>> analyses_;
  std::optional<std::vector<HomRecord>> homs_;
};

struct CheckOptions {
  bool stop_at_first = false;
};

// Throws UnknownTheorem.
TheoremVerdict check_theorem(std::string_view id, CorpusAnalysis& analysis,
                             CheckOptions options = {});
std::vector<TheoremVerdict> run_all(CorpusAnalysis& analysis);

struct SearchResult {
  TheoremVerdict verdict;
  std::optional<Counterexample> found;
};

// Scans the family in generation order and stops at the first counterexample.
SearchResult search_counterexample(std::string_view id, CorpusSpec const& family);

}  // namespace hypersdf
