#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersdf/error.hpp"
#include "hypersdf/hyperring.hpp"

namespace hypersdf {

// Line-oriented hyperring document:
//
//   ring R1          # name
//   order 4
//   zero 0
//   one 1            # optional
//   add              # followed by `order` rows of `order` indices
//   ...
//   mul              # followed by `order` rows of `order` cells {a,b,...}
//   ...
//   end
//
// `#` starts a comment. Lines and columns in diagnostics are 1-based.

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

struct RingDocument {
  std::string source;
  std::optional<HyperRing> ring;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const noexcept { return ring.has_value() && diagnostics.empty(); }
};

class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic diagnostic);
  [[nodiscard]] Diagnostic const& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

// Never throws on malformed input; problems are reported as diagnostics.
RingDocument parse_ring(std::string_view text);

// Throws ParseError with the first diagnostic.
HyperRing parse_ring_or_throw(std::string_view text);

// Canonical form: cells sorted ascending as {a,b}, single spaces, trailing
// newline.
std::string serialize_ring(HyperRing const& ring);

// Reads a file and parses it. I/O failures are reported as a diagnostic on
// line 0.
RingDocument load_ring_file(std::string const& path);

}  // namespace hypersdf
