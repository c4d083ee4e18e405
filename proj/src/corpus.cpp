#include "hypersdf/corpus.hpp"

#include <charconv>
#include <map>

#include "hypersdf/constructors.hpp"
#include "hypersdf/fixtures.hpp"
#include "hypersdf/ideals.hpp"
#include "hypersdf/ring_format.hpp"

namespace hypersdf {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t const pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t to_size(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw SpecError("corpus spec: '" + std::string(key) + "' needs a non-negative integer, got '"
                    + std::string(value) + "'");
  }
  return out;
}

// key=value pairs after the ':'.
std::map<std::string, std::size_t> options(std::string_view term, std::string_view body,
                                           std::vector<std::string_view> const& allowed) {
  std::map<std::string, std::size_t> out;
  if (trim(body).empty()) {
    return out;
  }
  for (std::string_view item : split(body, ',')) {
    item = trim(item);
    auto const eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw SpecError("corpus spec: expected key=value in '" + std::string(term) + "'");
    }
    std::string_view const key = trim(item.substr(0, eq));
    bool known = false;
    for (auto a : allowed) {
      known = known || a == key;
    }
    if (!known) {
      throw SpecError("corpus spec: unknown key '" + std::string(key) + "' for '"
                      + std::string(term) + "'");
    }
    if (!out.emplace(std::string(key), to_size(key, trim(item.substr(eq + 1)))).second) {
      throw SpecError("corpus spec: repeated key '" + std::string(key) + "'");
    }
  }
  return out;
}

std::string set_label(Subset const& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    out += (first ? "" : ",") + std::to_string(e);
    first = false;
  });
  return out + "}";
}

class Builder {
 public:
  explicit Builder(Corpus& corpus) : corpus_(corpus) {}

  // Index of the ring, appending it unless an identical one exists.
  std::size_t add(std::string label, Origin origin, HyperRing ring) {
    auto& bucket = by_order_[ring.order()];
    for (std::size_t i : bucket) {
      if (corpus_.rings[i].ring.same_tables(ring)) {
        return i;
      }
    }
    bucket.push_back(corpus_.rings.size());
    corpus_.rings.push_back(CorpusRing{std::move(label), origin, std::move(ring)});
    return corpus_.rings.size() - 1;
  }

 private:
  Corpus& corpus_;
  std::map<std::size_t, std::vector<std::size_t>> by_order_;
};

}  // namespace

CorpusSpec parse_corpus_spec(std::string_view text) {
  CorpusSpec spec;
  spec.text = std::string(trim(text));
  if (spec.text.empty()) {
    return spec;
  }
  for (std::string_view term : split(spec.text, '+')) {
    term = trim(term);
    auto const colon = term.find(':');
    std::string_view const head = trim(term.substr(0, colon));
    std::string_view const body = colon == std::string_view::npos ? "" : term.substr(colon + 1);
    auto no_body = [&] {
      if (!trim(body).empty()) {
        throw SpecError("corpus spec: '" + std::string(head) + "' takes no options");
      }
    };
    if (head == "fixtures") {
      no_body();
      spec.fixtures = true;
    } else if (head == "quotients") {
      no_body();
      spec.quotients = true;
    } else if (head == "zomega") {
      auto const o = options(term, body, {"nMin", "nMax", "omegaMin", "omegaMax"});
      CorpusSpec::ZOmega z;
      if (o.count("nMin")) z.n_min = o.at("nMin");
      if (o.count("nMax")) z.n_max = o.at("nMax");
      if (o.count("omegaMin")) z.omega_min = o.at("omegaMin");
      if (o.count("omegaMax")) z.omega_max = o.at("omegaMax");
      if (z.n_min < 2 || z.n_min > z.n_max || z.omega_min < 2 || z.omega_min > z.omega_max) {
        throw SpecError("corpus spec: zomega needs 2 <= nMin <= nMax and 2 <= omegaMin <= omegaMax");
      }
      if (z.n_max > 16) {
        throw SpecError("corpus spec: zomega nMax above the enumeration cap of 16");
      }
      spec.zomega = z;
    } else if (head == "product") {
      auto const o = options(term, body, {"orderCap"});
      CorpusSpec::Product p;
      if (o.count("orderCap")) p.order_cap = o.at("orderCap");
      if (p.order_cap == 0 || p.order_cap * p.order_cap > 64) {
        throw SpecError("corpus spec: product orderCap must be between 1 and 8");
      }
      spec.product = p;
    } else if (head == "matrix") {
      auto const o = options(term, body, {"m", "cap"});
      CorpusSpec::Matrix m;
      if (o.count("m")) m.m = o.at("m");
      if (o.count("cap")) m.cap = o.at("cap");
      if (m.m == 0 || m.cap == 0 || m.cap > MatrixRing::default_cap) {
        throw SpecError("corpus spec: matrix needs m >= 1 and 1 <= cap <= 4096");
      }
      spec.matrix = m;
    } else if (head == "file") {
      std::string_view const path = trim(body);
      if (path.empty()) {
        throw SpecError("corpus spec: 'file' needs a path");
      }
      spec.files.emplace_back(path);
    } else {
      throw SpecError("corpus spec: unknown term '" + std::string(term) + "'");
    }
  }
  return spec;
}

Corpus generate_corpus(CorpusSpec const& spec) {
  Corpus corpus;
  corpus.spec = spec;
  Builder builder(corpus);

  if (spec.fixtures) {
    builder.add("R1", Origin::fixture, fixture_r1());
    builder.add("R2", Origin::fixture, fixture_r2());
  }
  for (std::string const& path : spec.files) {
    RingDocument doc = load_ring_file(path);
    if (!doc.ok()) {
      Diagnostic const& d = doc.diagnostics.front();
      throw SpecError("corpus spec: " + path + ":" + std::to_string(d.line) + ":"
                      + std::to_string(d.column) + ": " + d.message);
    }
    std::string label = doc.ring->name();
    builder.add(std::move(label), Origin::file, std::move(*doc.ring));
  }
  if (spec.zomega) {
    auto const& z = *spec.zomega;
    for (std::size_t n = z.n_min; n <= z.n_max; ++n) {
      // An integer set of size omegaMin..omegaMax reduces to anywhere from 1
      // to min(omegaMax, n) residues, so every such residue set is reachable.
      for (std::size_t k = 1; k <= std::min(z.omega_max, n); ++k) {
        // k-subsets of {0..n-1} in lexicographic order
        std::vector<long long> omega(k);
        for (std::size_t i = 0; i < k; ++i) {
          omega[i] = static_cast<long long>(i);
        }
        while (true) {
          std::vector<long long> integers = omega;
          for (long long j = 1; integers.size() < z.omega_min; ++j) {
            integers.push_back(omega[0] + j * static_cast<long long>(n));
          }
          HyperRing ring = zomega(n, integers);
          std::string label = ring.name();
          builder.add(std::move(label), Origin::zomega, std::move(ring));
          std::size_t i = k;
          while (i > 0 && omega[i - 1] == static_cast<long long>(n - k + i - 1)) {
            --i;
          }
          if (i == 0) {
            break;
          }
          ++omega[i - 1];
          for (std::size_t j = i; j < k; ++j) {
            omega[j] = omega[j - 1] + 1;
          }
        }
      }
    }
  }

  std::size_t const base_count = corpus.rings.size();
  if (spec.product) {
    for (std::size_t a = 0; a < base_count; ++a) {
      if (corpus.rings[a].ring.order() > spec.product->order_cap) {
        continue;
      }
      for (std::size_t b = 0; b < base_count; ++b) {
        if (corpus.rings[b].ring.order() > spec.product->order_cap) {
          continue;
        }
        if (corpus.rings[a].ring.order() * corpus.rings[b].ring.order() > default_enumeration_cap) {
          corpus.skipped.push_back("product " + corpus.rings[a].label + " x " + corpus.rings[b].label
                                   + ": order above the enumeration cap");
          continue;
        }
        HyperRing ring = product_ring(corpus.rings[a].ring, corpus.rings[b].ring);
        std::string label = ring.name();
        std::size_t const at = builder.add(std::move(label), Origin::product, std::move(ring));
        corpus.products.push_back({a, b, at});
      }
    }
  }

  if (spec.quotients) {
    std::size_t const parents = corpus.rings.size();
    for (std::size_t i = 0; i < parents; ++i) {
      if (corpus.rings[i].ring.order() > default_enumeration_cap) {
        corpus.skipped.push_back("quotients of " + corpus.rings[i].label
                                 + ": order above the enumeration cap");
        continue;
      }
      // Copy: `add` may reallocate the ring vector.
      std::vector<Subset> const ideals = enumerate_hyperideals(corpus.rings[i].ring);
      for (Subset const& q : ideals) {
        std::string const label = corpus.rings[i].label + "/" + set_label(q);
        try {
          QuotientRing quotient = quotient_ring(corpus.rings[i].ring, q);
          std::size_t const at = builder.add(label, Origin::quotient, std::move(quotient.ring));
          corpus.quotients.push_back({i, q, at, std::move(quotient.projection)});
        } catch (ConstructionError const& e) {
          corpus.skipped.push_back(label + ": " + e.what());
        }
      }
    }
  }
  return corpus;
}

Corpus generate_corpus(std::string_view spec_text) {
  return generate_corpus(parse_corpus_spec(spec_text));
}

}  // namespace hypersdf
