#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersdf/error.hpp"
#include "hypersdf/hyperring.hpp"

namespace hypersdf {

class SpecError : public Error {
 public:
  using Error::Error;
};

// Textual form: terms joined by '+'
//   fixtures
//   zomega:nMin=2,nMax=6,omegaMin=2,omegaMax=3
//   product:orderCap=4
//   quotients
//   matrix:m=2,cap=256
//   file:PATH
// Omitted keys take the defaults below. zomega ranges over integer sets
// Omega with omegaMin <= |Omega| <= omegaMax; residues may collide mod n, so
// Omega = {g, g+n} (the ordinary product scaled by g) is included.
struct CorpusSpec {
  struct ZOmega {
    std::size_t n_min = 2;
    std::size_t n_max = 6;
    std::size_t omega_min = 2;
    std::size_t omega_max = 3;
  };
  struct Product {
    std::size_t order_cap = 4;
  };
  struct Matrix {
    std::size_t m = 2;
    std::size_t cap = 256;
  };

  bool fixtures = false;
  std::optional<ZOmega> zomega;
  std::optional<Product> product;
  bool quotients = false;
  std::optional<Matrix> matrix;
  std::vector<std::string> files;
  std::string text;
};

// Throws SpecError on unknown terms, unknown keys, bad numbers or
// inconsistent ranges.
CorpusSpec parse_corpus_spec(std::string_view text);

enum class Origin { fixture, file, zomega, product, quotient };

struct CorpusRing {
  std::string label;
  Origin origin = Origin::fixture;
  HyperRing ring;
};

// H1 x H2 with both factors in the corpus. `ring` may point at an earlier
// entry with identical tables.
struct ProductRecord {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t ring = 0;
};

struct QuotientRecord {
  std::size_t parent = 0;
  Subset ideal;
  std::size_t ring = 0;
  std::vector<Element> projection;
};

struct Corpus {
  CorpusSpec spec;
  std::vector<CorpusRing> rings;
  std::vector<ProductRecord> products;
  std::vector<QuotientRecord> quotients;
  // Constructions that were attempted and rejected (e.g. an ill-defined
  // quotient), in generation order.
  std::vector<std::string> skipped;

  [[nodiscard]] std::size_t matrix_dimension() const noexcept {
    return spec.matrix ? spec.matrix->m : 2;
  }
  [[nodiscard]] std::size_t matrix_cap() const noexcept {
    return spec.matrix ? spec.matrix->cap : 256;
  }
};

// Deterministic: fixtures, files, zomega rings, products of those base rings
// whose factors have order <= orderCap, then quotients of every ring listed
// so far by every hyperideal. Rings with tables identical to an earlier
// entry are dropped and records point at the earlier entry.
Corpus generate_corpus(CorpusSpec const& spec);
Corpus generate_corpus(std::string_view spec_text);

}  // namespace hypersdf
