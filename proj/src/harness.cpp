#include "hypersdf/harness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "hypersdf/ring_format.hpp"
#include "hypersdf/sdf.hpp"

namespace hypersdf {

char const* to_string(InstanceKind kind) noexcept {
  switch (kind) {
    case InstanceKind::ideal: return "ring+ideal";
    case InstanceKind::ring: return "ring";
    case InstanceKind::ideal_family: return "ring+ideal-tuple";
    case InstanceKind::hom: return "hom";
    case InstanceKind::sub_quotient: return "ring+ideal-tuple";
    case InstanceKind::matrix: return "matrix";
    case InstanceKind::product: return "product";
  }
  return "?";
}

std::vector<TheoremCase> const& theorem_registry() {
  using K = InstanceKind;
  static std::vector<TheoremCase> const registry = {
      {"P0", "P nonzero, prime and strong-C => P sdf-absorbing", K::ideal, true, {"=>"}},
      {"T1", "P nonzero, sdf-absorbing and a C-hyperideal => rad(P) = P", K::ideal, true, {"=>"}},
      {"T2", "char(H) = 2, P proper strong-C with rad(P) = P => P sdf-absorbing", K::ideal, true,
       {"=>"}},
      {"T3",
       "P sdf-absorbing strong-C => [(i) x^2-y^2 in P forces x-y and x+y in P] <=> "
       "[(ii) 1+1 in P] <=> [(iii) char(H/P) = 2]",
       K::ideal,
       true,
       {"(i)=>(ii)", "(ii)=>(i)", "(ii)<=>(iii)"}},
      {"T4",
       "P proper strong-C: P sdf-absorbing <=> for nonzero x,y outside P with x o y in P there "
       "are no nonzero a,b with a-b = x and a+b = y",
       K::ideal,
       true,
       {"=>", "<="}},
      {"L5", "every hyperideal a C-hyperideal => (H regular <=> rad(A) = A for every hyperideal A)",
       K::ring, true, {"=>", "<="}},
      {"C6", "char(H) = 2 and H regular => every nonzero proper strong-C hyperideal is sdf-absorbing",
       K::ideal, true, {"=>"}},
      {"T7",
       "every nonzero proper hyperideal an sdf-absorbing C-hyperideal => H/Y regular and no two "
       "primes P1 < P2",
       K::ring,
       true,
       {"H/Y regular", "no prime chain"}},
      {"T8",
       "H local with maximal P, every nonzero proper hyperideal a C-hyperideal: every nonzero "
       "proper hyperideal sdf-absorbing <=> P the only prime, P principal and P o P = {0}",
       K::ring,
       true,
       {"=>", "<="}},
      {"T9",
       "H regular, every hyperideal a C-hyperideal, exactly one maximal I with char(H/I) != 2 => "
       "every proper hyperideal sdf-absorbing",
       K::ring,
       true,
       {"stated", "narrow: I sdf-absorbing"}},
      {"T10",
       "P1..Pn (n >= 2) strong-C primes, no n-1 of them with the same intersection: "
       "intersection sdf-absorbing <=> at most one char(H/Pi) != 2",
       K::ideal_family,
       true,
       {"=>", "<="}},
      {"T11",
       "good hom theta: (a) P2 nonzero sdf strong-C => preimage sdf; (b) theta injective, P2 sdf "
       "strong-C => preimage sdf; (c) theta onto, P1 sdf strong-C, ker <= P1 => theta(P1) sdf",
       K::hom,
       true,
       {"(a)", "(b)", "(c)"}},
      {"T12",
       "P strong-C: (i) P sdf => P n K sdf in a sub-hyperring K; (ii) Q <= P, P sdf => P/Q sdf; "
       "(iii) Q < P: P sdf <=> P/Q sdf",
       K::sub_quotient,
       true,
       {"(i)", "(ii)", "(iii)=>", "(iii)<="}},
      {"T13",
       "P1..Pn (n >= 2) pairwise coprime strong-C: intersection sdf-absorbing <=> at most one "
       "char(H/Pi) != 2",
       K::ideal_family,
       true,
       {"=>", "<="}},
      {"T14", "P proper: M_m(P) sdf-absorbing in M_m(H) => P sdf-absorbing", K::matrix, true,
       {"full route", "corner route"}},
      {"T15", "P nonzero sdf-absorbing strong-C and 1+1 a unit => P prime", K::ideal, true, {"=>"}},
      {"T16",
       "P1, P2 nonzero proper strong-C: P1 x P2 sdf <=> P1 and P2 sdf and (1+1 in P1 or 1+1 in "
       "P2)",
       K::product,
       true,
       {"=>", "<="}},
      {"T17", "P1 nonzero proper strong-C: P1 sdf <=> P1 x H2 sdf", K::product, true, {"=>", "<="}},
      {"T18",
       "{0} x H2 strong-C: ({0} sdf in H1 and nilpotents(H1) = {0}) <=> {0} x H2 sdf",
       K::product,
       true,
       {"=>", "<="}},
      {"W1", "P strong-C, weakly sdf-absorbing but not sdf-absorbing => P inside the nilpotents",
       K::ideal, true, {"=>"}},
      {"W2", "P nonzero sdf-absorbing strong-C and 1+1 a unit => P prime (literal statement)",
       K::ideal, true, {"=>"}},
      {"W3",
       "P1 nonzero weakly sdf strong-C: (i) P1 sdf <=> (ii) P1 x H2 sdf <=> (iii) P1 x H2 weakly "
       "sdf",
       K::product,
       true,
       {"(i)=>(ii)", "(ii)=>(iii)", "(iii)=>(i)"}},
      {"W4",
       "P1, P2 strong-C, weakly sdf but not sdf: (i) P1 x P2 weakly sdf, not sdf <=> (ii) weakly "
       "sdf <=> (iii) squares-difference inside Pi always contains 0 <=> (iv) a^2-b^2 inside "
       "P1 x P2 always contains (0,0)",
       K::product,
       true,
       {"(i)=>(ii)", "(ii)=>(iii)", "(iii)=>(iv)", "(iv)=>(i)"}},
      {"W2-conj",
       "conjectured reading: P nonzero weakly sdf-absorbing strong-C and 1+1 a unit => P weakly "
       "prime",
       K::ideal,
       false,
       {"=>"}},
  };
  return registry;
}

TheoremCase const& find_theorem(std::string_view id) {
  for (TheoremCase const& t : theorem_registry()) {
    if (t.id == id) {
      return t;
    }
  }
  throw UnknownTheorem("unknown theorem id '" + std::string(id) + "'");
}

std::size_t TheoremVerdict::extra(std::string_view name) const {
  for (auto const& [key, value] : extras) {
    if (key == name) {
      return value;
    }
  }
  return 0;
}

// --- corpus analysis -------------------------------------------------------

CorpusAnalysis::CorpusAnalysis(Corpus corpus)
    : corpus_(std::make_unique<Corpus>(std::move(corpus))), analyses_(corpus_->rings.size()) {}

RingAnalysis const& CorpusAnalysis::at(std::size_t i) {
  if (!analyses_.at(i)) {
    analyses_[i] = std::make_unique<RingAnalysis>(corpus_->rings[i].ring);
  }
  return *analyses_[i];
}

namespace {

bool additive_map(std::vector<Element> const& map, HyperRing const& s, HyperRing const& t) {
  auto const n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (map[s.add(x, y)] != t.add(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<HomRecord> const& CorpusAnalysis::homs() {
  if (homs_) {
    return *homs_;
  }
  std::vector<HomRecord> out;
  std::set<std::tuple<std::size_t, std::size_t, std::vector<Element>>> seen;
  auto consider = [&](std::size_t s, std::size_t t, char const* origin, std::vector<Element> map) {
    if (!seen.emplace(s, t, map).second) {
      return;
    }
    HomMap theta = check_good_hom(std::move(map), ring(s), ring(t));
    if (theta.good()) {
      out.push_back({s, t, origin, std::move(theta)});
    }
  };

  for (QuotientRecord const& q : corpus_->quotients) {
    consider(q.parent, q.ring, "quotient projection", q.projection);
  }
  for (ProductRecord const& p : corpus_->products) {
    HyperRing const& h1 = ring(p.left);
    HyperRing const& h2 = ring(p.right);
    auto const n1 = static_cast<Element>(h1.order());
    auto const n2 = static_cast<Element>(h2.order());
    std::vector<Element> pi1(n1 * n2);
    std::vector<Element> pi2(n1 * n2);
    for (Element x = 0; x < n1 * n2; ++x) {
      pi1[x] = x / n2;
      pi2[x] = x % n2;
    }
    std::vector<Element> in1(n1);
    std::vector<Element> in2(n2);
    for (Element a = 0; a < n1; ++a) {
      in1[a] = a * n2 + h2.zero();
    }
    for (Element b = 0; b < n2; ++b) {
      in2[b] = h1.zero() * n2 + b;
    }
    consider(p.ring, p.left, "product projection", std::move(pi1));
    consider(p.ring, p.right, "product projection", std::move(pi2));
    consider(p.left, p.ring, "product injection", std::move(in1));
    consider(p.right, p.ring, "product injection", std::move(in2));
  }

  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < size(); ++i) {
    if (ring(i).order() <= small_order) {
      small.push_back(i);
    }
  }
  for (std::size_t s : small) {
    for (std::size_t t : small) {
      HyperRing const& src = ring(s);
      HyperRing const& dst = ring(t);
      std::vector<Element> map(src.order(), 0);
      // odometer over all maps
      while (true) {
        if (map[src.zero()] == dst.zero() && additive_map(map, src, dst)) {
          consider(s, t, "enumerated", map);
        }
        std::size_t k = 0;
        while (k < map.size() && ++map[k] == dst.order()) {
          map[k++] = 0;
        }
        if (k == map.size()) {
          break;
        }
      }
    }
  }
  homs_ = std::move(out);
  return *homs_;
}

// --- checking machinery ----------------------------------------------------

namespace {

using Outcome = std::optional<bool>;  // nullopt: the part's premise failed

template <typename F>
Outcome when(bool premise, F&& conclusion) {
  if (!premise) {
    return std::nullopt;
  }
  return static_cast<bool>(conclusion());
}

Outcome when(bool premise, bool conclusion) {
  return premise ? Outcome(conclusion) : std::nullopt;
}

std::string show(Subset const& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    out += (first ? "" : ",") + std::to_string(e);
    first = false;
  });
  return out + "}";
}

class Recorder {
 public:
  Recorder(TheoremVerdict& verdict, CheckOptions options) : v_(verdict), options_(options) {}

  [[nodiscard]] bool stopped() const noexcept { return stopped_; }

  void inapplicable(std::size_t n = 1) {
    v_.instances_scanned += n;
    v_.inapplicable += n;
  }

  template <typename Describe>
  void record(std::vector<Outcome> const& parts, Describe&& describe) {
    std::size_t const ordinal = v_.instances_scanned++;
    bool fired = false;
    std::vector<std::string> failed;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i]) {
        continue;
      }
      fired = true;
      ++v_.parts[i].premises;
      if (*parts[i]) {
        ++v_.parts[i].held;
      } else {
        failed.push_back(v_.parts[i].name);
      }
    }
    if (!fired) {
      return;
    }
    ++v_.premises_satisfied;
    if (failed.empty()) {
      ++v_.conclusions_held;
      return;
    }
    Counterexample c = describe();
    c.instance = ordinal;
    c.failed_parts = std::move(failed);
    v_.counterexamples.push_back(std::move(c));
    if (options_.stop_at_first) {
      stopped_ = true;
    }
  }

  void bump(std::string const& name, std::size_t by = 1) {
    for (auto& [key, value] : v_.extras) {
      if (key == name) {
        value += by;
        return;
      }
    }
    v_.extras.emplace_back(name, by);
  }

 private:
  TheoremVerdict& v_;
  CheckOptions options_;
  bool stopped_ = false;
};

Counterexample::Ring ring_replay(std::string role, std::string label, HyperRing const& ring) {
  return {std::move(role), std::move(label), serialize_ring(ring)};
}

Counterexample::Ring ring_replay(std::string role, CorpusAnalysis& a, std::size_t i) {
  return ring_replay(std::move(role), a.label(i), a.ring(i));
}

Counterexample::Set set_replay(std::string role, Subset const& s) {
  return {std::move(role), s.elements()};
}

using Parts = std::vector<Outcome>;
using IdealRule = std::function<Parts(RingAnalysis const&, ClassificationReport const&)>;
using RingRule = std::function<Parts(RingAnalysis const&)>;

// Every proper hyperideal of every ring.
void scan_ideals(CorpusAnalysis& a, Recorder& rec, IdealRule const& rule) {
  for (std::size_t i = 0; i < a.size() && !rec.stopped(); ++i) {
    RingAnalysis const& ra = a.at(i);
    for (ClassificationReport const& r : ra.ideals()) {
      if (!r.is_proper) {
        continue;
      }
      if (!ra.has_identity()) {
        rec.inapplicable();
        continue;
      }
      rec.record(rule(ra, r), [&] {
        Counterexample c;
        c.descriptor = a.label(i) + " with P=" + show(r.members);
        c.rings.push_back(ring_replay("H", a, i));
        c.sets.push_back(set_replay("P", r.members));
        return c;
      });
      if (rec.stopped()) {
        return;
      }
    }
  }
}

void scan_rings(CorpusAnalysis& a, Recorder& rec, RingRule const& rule) {
  for (std::size_t i = 0; i < a.size() && !rec.stopped(); ++i) {
    RingAnalysis const& ra = a.at(i);
    if (!ra.has_identity()) {
      rec.inapplicable();
      continue;
    }
    rec.record(rule(ra), [&] {
      Counterexample c;
      c.descriptor = a.label(i);
      c.rings.push_back(ring_replay("H", a, i));
      return c;
    });
  }
}

bool radical_fixed(ClassificationReport const& r) { return r.radical == r.members; }

// --- ideal-level theorems --------------------------------------------------

void check_p0(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const&, ClassificationReport const& r) {
    return Parts{when(r.is_nonzero && r.is_prime && r.is_strong_c_hyperideal, r.is_sdf)};
  });
}

void check_t1(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const&, ClassificationReport const& r) {
    return Parts{when(r.is_nonzero && r.is_sdf && r.is_c_hyperideal, radical_fixed(r))};
  });
}

void check_t2(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const& ra, ClassificationReport const& r) {
    return Parts{
        when(ra.characteristic() == 2 && r.is_strong_c_hyperideal && radical_fixed(r), r.is_sdf)};
  });
}

void check_t3(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const&, ClassificationReport const& r) {
    bool const base = r.is_sdf && r.is_strong_c_hyperideal;
    bool const two_in = r.one_plus_one_in.value_or(false);
    return Parts{when(base && r.is_sdf_both, two_in), when(base && two_in, r.is_sdf_both),
                 when(base, two_in == (r.quotient_characteristic == 2))};
  });
}

// No nonzero a, b with a-b and a+b outside P and (a-b) o (a+b) inside P.
bool no_factor_solutions(HyperRing const& ring, Subset const& p) {
  auto const n = static_cast<Element>(ring.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == ring.zero() || b == ring.zero()) {
        continue;
      }
      Element const x = ring.sub(a, b);
      Element const y = ring.add(a, b);
      if (!p.contains(x) && !p.contains(y) && ring.mul(x, y).is_subset_of(p)) {
        return false;
      }
    }
  }
  return true;
}

void check_t4(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const& ra, ClassificationReport const& r) {
    bool const base = r.is_strong_c_hyperideal;
    bool const phi = base && no_factor_solutions(ra.ring(), r.members);
    return Parts{when(base && r.is_sdf, phi), when(base && phi, r.is_sdf)};
  });
}

void check_c6(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const& ra, ClassificationReport const& r) {
    return Parts{when(ra.characteristic() == 2 && ra.regular() && r.is_nonzero
                          && r.is_strong_c_hyperideal,
                      r.is_sdf)};
  });
}

void check_t15(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const& ra, ClassificationReport const& r) {
    return Parts{
        when(r.is_nonzero && r.is_sdf && r.is_strong_c_hyperideal && ra.two_is_unit(), r.is_prime)};
  });
}

void check_w1(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const& ra, ClassificationReport const& r) {
    return Parts{when(r.is_strong_c_hyperideal && r.is_weakly_sdf && !r.is_sdf,
                      r.members.is_subset_of(ra.nilpotents()))};
  });
}

void check_w2_conj(CorpusAnalysis& a, Recorder& rec) {
  scan_ideals(a, rec, [](RingAnalysis const& ra, ClassificationReport const& r) {
    return Parts{when(r.is_nonzero && r.is_weakly_sdf && r.is_strong_c_hyperideal
                          && ra.two_is_unit(),
                      r.is_weakly_prime)};
  });
}

// --- ring-level theorems ---------------------------------------------------

template <typename Pred>
bool all_ideals(RingAnalysis const& ra, Pred&& pred) {
  return std::all_of(ra.ideals().begin(), ra.ideals().end(), pred);
}

bool nonzero_proper(ClassificationReport const& r) { return r.is_nonzero && r.is_proper; }

void check_l5(CorpusAnalysis& a, Recorder& rec) {
  scan_rings(a, rec, [](RingAnalysis const& ra) {
    bool const base = ra.all_c();
    bool const radicals = all_ideals(ra, radical_fixed);
    return Parts{when(base && ra.regular(), radicals), when(base && radicals, ra.regular())};
  });
}

void check_t7(CorpusAnalysis& a, Recorder& rec) {
  scan_rings(a, rec, [](RingAnalysis const& ra) {
    bool const base = all_ideals(ra, [](ClassificationReport const& r) {
      return !nonzero_proper(r) || (r.is_sdf && r.is_c_hyperideal);
    });
    Outcome quotient_regular;
    if (base && ra.nilpotents_form_ideal()) {
      try {
        QuotientRing const q = quotient_ring(ra.ring(), ra.nilpotents());
        quotient_regular = regular_elements(q.ring).is_full();
      } catch (ConstructionError const&) {
        quotient_regular = std::nullopt;  // H/Y ill-defined: nothing to check
      }
    }
    auto const& primes = ra.lattice().primes();
    auto no_chain = [&] {
      for (Subset const& p : primes) {
        for (Subset const& q : primes) {
          if (p != q && p.is_subset_of(q)) {
            return false;
          }
        }
      }
      return true;
    };
    return Parts{quotient_regular, when(base, no_chain)};
  });
}

void check_t8(CorpusAnalysis& a, Recorder& rec) {
  scan_rings(a, rec, [](RingAnalysis const& ra) {
    auto const& maximals = ra.lattice().maximals();
    bool const base = maximals.size() == 1 && ra.all_nonzero_proper_c();
    if (!base) {
      return Parts{std::nullopt, std::nullopt};
    }
    Subset const& p = maximals.front();
    HyperRing const& ring = ra.ring();
    bool const lhs = all_ideals(
        ra, [](ClassificationReport const& r) { return !nonzero_proper(r) || r.is_sdf; });
    auto const& primes = ra.lattice().primes();
    bool const rhs = primes.size() == 1 && primes.front() == p && ra.find(p)->is_principal
                     && ring.product(p, p) == ring.singleton(ring.zero());
    return Parts{when(lhs, rhs), when(rhs, lhs)};
  });
}

void check_t9(CorpusAnalysis& a, Recorder& rec) {
  scan_rings(a, rec, [](RingAnalysis const& ra) {
    std::vector<ClassificationReport const*> odd;
    for (Subset const& m : ra.lattice().maximals()) {
      ClassificationReport const* r = ra.find(m);
      if (r->quotient_characteristic != 2) {
        odd.push_back(r);
      }
    }
    bool const base = ra.regular() && ra.all_c() && odd.size() == 1;
    return Parts{when(base,
                      [&] {
                        return all_ideals(ra, [](ClassificationReport const& r) {
                          return !r.is_proper || r.is_sdf;
                        });
                      }),
                 when(base, [&] { return odd.front()->is_sdf; })};
  });
}

// --- families of hyperideals -----------------------------------------------

// Calls visit(family) for every subset of `members` with at least two
// elements, in which every pair satisfies `compatible`, in lexicographic
// index order.
void for_each_family(std::vector<ClassificationReport const*> const& members,
                     std::function<bool(ClassificationReport const*, ClassificationReport const*)> const& compatible,
                     std::function<bool(std::vector<ClassificationReport const*> const&)> const& visit) {
  std::vector<ClassificationReport const*> current;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t i = from; i < members.size(); ++i) {
      bool ok = true;
      for (auto const* c : current) {
        ok = ok && compatible(c, members[i]);
      }
      if (!ok) {
        continue;
      }
      current.push_back(members[i]);
      if (current.size() >= 2 && !visit(current)) {
        return false;
      }
      if (!grow(i + 1)) {
        return false;
      }
      current.pop_back();
    }
    return true;
  };
  grow(0);
}

Subset intersect_all(std::vector<ClassificationReport const*> const& family, std::size_t skip) {
  Subset out;
  bool first = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i == skip) {
      continue;
    }
    if (first) {
      out = family[i]->members;
      first = false;
    } else {
      out &= family[i]->members;
    }
  }
  return out;
}

void check_family(CorpusAnalysis& a, Recorder& rec, bool primes_only) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < a.size() && !rec.stopped(); ++i) {
    RingAnalysis const& ra = a.at(i);
    HyperRing const& ring = ra.ring();
    std::vector<ClassificationReport const*> members;
    for (ClassificationReport const& r : ra.ideals()) {
      if (r.is_proper && r.is_strong_c_hyperideal && (!primes_only || r.is_prime)) {
        members.push_back(&r);
      }
    }
    auto compatible = [&](ClassificationReport const* p, ClassificationReport const* q) {
      return primes_only || are_coprime(ring, p->members, q->members);
    };
    for_each_family(members, compatible, [&](std::vector<ClassificationReport const*> const& family) {
      if (!ra.has_identity()) {
        rec.inapplicable();
        return true;
      }
      Subset const meet = intersect_all(family, none);
      ClassificationReport const* p = ra.find(meet);
      bool irredundant = true;
      if (primes_only) {
        for (std::size_t k = 0; k < family.size(); ++k) {
          irredundant = irredundant && intersect_all(family, k) != meet;
        }
      }
      std::size_t const odd = static_cast<std::size_t>(
          std::count_if(family.begin(), family.end(),
                        [](auto const* r) { return r->quotient_characteristic != 2; }));
      rec.record(Parts{when(irredundant && p->is_sdf, odd <= 1), when(irredundant && odd <= 1, p->is_sdf)},
                 [&] {
                   Counterexample c;
                   c.descriptor = a.label(i) + " with family";
                   c.rings.push_back(ring_replay("H", a, i));
                   for (std::size_t k = 0; k < family.size(); ++k) {
                     c.descriptor += " " + show(family[k]->members);
                     c.sets.push_back(set_replay("P" + std::to_string(k + 1), family[k]->members));
                   }
                   c.sets.push_back(set_replay("P", meet));
                   return c;
                 });
      return !rec.stopped();
    });
  }
}

// --- homomorphisms ---------------------------------------------------------

void check_t11(CorpusAnalysis& a, Recorder& rec) {
  std::vector<HomRecord> const& homs = a.homs();
  for (HomRecord const& h : homs) {
    RingAnalysis const& src = a.at(h.source);
    RingAnalysis const& dst = a.at(h.target);
    bool const identity = src.has_identity() && dst.has_identity();
    auto describe = [&](char const* role, Subset const& s) {
      Counterexample c;
      c.descriptor = h.origin + " " + a.label(h.source) + " -> " + a.label(h.target) + " with "
                     + role + "=" + show(s);
      c.rings.push_back(ring_replay("H1", a, h.source));
      c.rings.push_back(ring_replay("H2", a, h.target));
      c.sets.push_back(set_replay(role, s));
      c.map = h.theta.map;
      return c;
    };
    for (ClassificationReport const& p2 : dst.ideals()) {
      if (!p2.is_proper) {
        continue;
      }
      if (!identity) {
        rec.inapplicable();
        continue;
      }
      Subset const pre = hom_preimage(h.theta, p2.members);
      ClassificationReport const* q = src.find(pre);
      bool const proper = q != nullptr && q->is_proper;
      bool const sdf = proper && q->is_sdf;
      rec.record(Parts{when(p2.is_strong_c_hyperideal && p2.is_nonzero && p2.is_sdf && proper, sdf),
                       when(h.theta.injective() && p2.is_strong_c_hyperideal && p2.is_sdf && proper,
                            sdf),
                       std::nullopt},
                 [&] { return describe("P2", p2.members); });
      if (rec.stopped()) {
        return;
      }
    }
    for (ClassificationReport const& p1 : src.ideals()) {
      if (!p1.is_proper) {
        continue;
      }
      if (!identity) {
        rec.inapplicable();
        continue;
      }
      bool const premise = h.theta.surjective() && p1.is_strong_c_hyperideal && p1.is_sdf
                           && h.theta.kernel.is_subset_of(p1.members);
      rec.record(Parts{std::nullopt, std::nullopt,
                       when(premise,
                            [&] {
                              ClassificationReport const* image =
                                  dst.find(hom_image(h.theta, p1.members));
                              return image != nullptr && image->is_proper && image->is_sdf;
                            })},
                 [&] { return describe("P1", p1.members); });
      if (rec.stopped()) {
        return;
      }
    }
  }
}

// --- sub-hyperrings and quotients ------------------------------------------

std::vector<Subset> closed_subgroups(HyperRing const& ring) {
  std::vector<Subset> out;
  for (Subset const& k : enumerate_additive_subgroups(ring)) {
    bool closed = true;
    k.for_each([&](Element x) {
      k.for_each([&](Element y) { closed = closed && ring.mul(x, y).is_subset_of(k); });
    });
    if (closed) {
      out.push_back(k);
    }
  }
  return out;
}

void check_t12(CorpusAnalysis& a, Recorder& rec) {
  for (std::size_t i = 0; i < a.size() && !rec.stopped(); ++i) {
    RingAnalysis const& ra = a.at(i);
    HyperRing const& ring = ra.ring();
    std::vector<ClassificationReport const*> proper;
    for (ClassificationReport const& r : ra.ideals()) {
      if (r.is_proper) {
        proper.push_back(&r);
      }
    }

    // (i) sub-hyperrings
    for (Subset const& k : closed_subgroups(ring)) {
      std::optional<SubHyperRing> sub;
      try {
        sub.emplace(sub_hyperring(ring, k));
      } catch (ConstructionError const&) {
        sub.reset();
      }
      for (ClassificationReport const* p : proper) {
        Subset const meet = p->members & k;
        if (!ra.has_identity() || !sub || meet == k) {
          rec.inapplicable();
          continue;
        }
        auto conclusion = [&] {
          Subset inside = sub->ring.empty();
          for (std::size_t j = 0; j < sub->embedding.size(); ++j) {
            if (meet.contains(sub->embedding[j])) {
              inside.insert(static_cast<Element>(j));
            }
          }
          return is_proper_hyperideal(sub->ring, inside) && is_sdf_absorbing(sub->ring, inside).holds;
        };
        rec.record(Parts{when(p->is_strong_c_hyperideal && p->is_sdf, conclusion), std::nullopt,
                         std::nullopt, std::nullopt},
                   [&] {
                     Counterexample c;
                     c.descriptor = a.label(i) + " with K=" + show(k) + " P=" + show(p->members);
                     c.rings.push_back(ring_replay("H", a, i));
                     c.sets.push_back(set_replay("K", k));
                     c.sets.push_back(set_replay("P", p->members));
                     return c;
                   });
        if (rec.stopped()) {
          return;
        }
      }
    }

    // (ii), (iii) quotients by Q inside P
    for (ClassificationReport const* q : proper) {
      std::optional<QuotientRing> quotient;
      bool failed = false;
      for (ClassificationReport const* p : proper) {
        if (!q->members.is_subset_of(p->members)) {
          continue;
        }
        if (!ra.has_identity() || failed) {
          rec.inapplicable();
          continue;
        }
        bool const strict = q->members != p->members;
        bool const base = p->is_strong_c_hyperideal;
        bool const needs_quotient = base && (p->is_sdf || strict);
        if (needs_quotient && !quotient) {
          try {
            quotient.emplace(quotient_ring(ring, q->members));
          } catch (ConstructionError const&) {
            failed = true;
            rec.inapplicable();
            continue;
          }
        }
        std::optional<bool> quotient_sdf;
        auto image_sdf = [&] {
          if (!quotient_sdf) {
            Subset image = quotient->ring.empty();
            p->members.for_each([&](Element x) { image.insert(quotient->projection[x]); });
            quotient_sdf = is_sdf_absorbing(quotient->ring, image).holds;
          }
          return *quotient_sdf;
        };
        rec.record(Parts{std::nullopt, when(base && p->is_sdf, image_sdf),
                         when(base && strict && p->is_sdf, image_sdf),
                         when(base && strict && image_sdf(), p->is_sdf)},
                   [&] {
                     Counterexample c;
                     c.descriptor = a.label(i) + " with Q=" + show(q->members) + " P="
                                    + show(p->members);
                     c.rings.push_back(ring_replay("H", a, i));
                     c.sets.push_back(set_replay("Q", q->members));
                     c.sets.push_back(set_replay("P", p->members));
                     if (quotient) {
                       c.rings.push_back(ring_replay("H/Q", a.label(i) + "/" + show(q->members),
                                                     quotient->ring));
                     }
                     return c;
                   });
        if (rec.stopped()) {
          return;
        }
      }
    }
  }
}

// --- matrices --------------------------------------------------------------

std::optional<std::size_t> checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) {
      return std::nullopt;
    }
    out *= base;
  }
  return out;
}

void check_t14(CorpusAnalysis& a, Recorder& rec) {
  std::size_t const m = a.corpus().matrix_dimension();
  std::size_t const cap = a.corpus().matrix_cap();
  for (std::size_t i = 0; i < a.size() && !rec.stopped(); ++i) {
    RingAnalysis const& ra = a.at(i);
    auto const order = checked_power(ra.ring().order(), m * m, cap);
    std::size_t const proper = static_cast<std::size_t>(std::count_if(
        ra.ideals().begin(), ra.ideals().end(), [](auto const& r) { return r.is_proper; }));
    if (!ra.has_identity() || !order) {
      rec.inapplicable(proper);
      continue;
    }
    MatrixRing const matrices(ra.ring(), m, cap);
    for (ClassificationReport const& r : ra.ideals()) {
      if (!r.is_proper) {
        continue;
      }
      bool const full = scan_matrix_sdf(matrices, r.members, SdfVariant::sdf).holds;
      bool const corner = scan_corner_sdf(matrices, r.members, SdfVariant::sdf).holds;
      bool const base = r.is_sdf;
      rec.bump("matrixInstances");
      rec.bump("routesAgree", ((!full || base) == (!corner || base)) ? 1 : 0);
      rec.bump("cornerMatchesBase", corner == base ? 1 : 0);
      rec.bump("fullImpliesCorner", (!full || corner) ? 1 : 0);
      rec.record(Parts{when(full, base), when(corner, base)}, [&] {
        Counterexample c;
        c.descriptor = a.label(i) + " with P=" + show(r.members) + " in M_" + std::to_string(m);
        c.rings.push_back(ring_replay("H", a, i));
        c.sets.push_back(set_replay("P", r.members));
        return c;
      });
      if (rec.stopped()) {
        return;
      }
    }
  }
}

// --- products --------------------------------------------------------------

struct ProductView {
  std::size_t index;
  ProductRecord record;
  RingAnalysis const& h1;
  RingAnalysis const& h2;
  RingAnalysis const& h;

  [[nodiscard]] Subset pair(Subset const& left, Subset const& right) const {
    Subset out = h.ring().empty();
    auto const n2 = static_cast<Element>(h2.ring().order());
    left.for_each([&](Element x) { right.for_each([&](Element y) { out.insert(x * n2 + y); }); });
    return out;
  }
  [[nodiscard]] bool identity() const { return h1.has_identity() && h2.has_identity(); }
};

using ProductRule = std::function<void(ProductView const&)>;

void scan_products(CorpusAnalysis& a, Recorder& rec, ProductRule const& rule) {
  auto const& products = a.corpus().products;
  for (std::size_t k = 0; k < products.size() && !rec.stopped(); ++k) {
    ProductRecord const& p = products[k];
    ProductView const view{k, p, a.at(p.left), a.at(p.right), a.at(p.ring)};
    rule(view);
  }
}

Counterexample describe_product(CorpusAnalysis& a, ProductView const& v,
                                std::vector<Counterexample::Set> sets) {
  Counterexample c;
  c.descriptor = a.label(v.record.left) + " x " + a.label(v.record.right);
  for (auto const& s : sets) {
    std::string elements;
    for (Element e : s.elements) {
      elements += (elements.empty() ? "" : ",") + std::to_string(e);
    }
    c.descriptor += " " + s.role + "={" + elements + "}";
  }
  c.rings.push_back(ring_replay("H1", a, v.record.left));
  c.rings.push_back(ring_replay("H2", a, v.record.right));
  c.rings.push_back(ring_replay("H1xH2", a, v.record.ring));
  c.sets = std::move(sets);
  return c;
}

std::vector<ClassificationReport const*> select(RingAnalysis const& ra,
                                                std::function<bool(ClassificationReport const&)> const& pred) {
  std::vector<ClassificationReport const*> out;
  for (ClassificationReport const& r : ra.ideals()) {
    if (pred(r)) {
      out.push_back(&r);
    }
  }
  return out;
}

void check_t16(CorpusAnalysis& a, Recorder& rec) {
  auto chosen = [](ClassificationReport const& r) {
    return nonzero_proper(r) && r.is_strong_c_hyperideal;
  };
  scan_products(a, rec, [&](ProductView const& v) {
    for (auto const* p1 : select(v.h1, chosen)) {
      for (auto const* p2 : select(v.h2, chosen)) {
        if (!v.identity()) {
          rec.inapplicable();
          continue;
        }
        Subset const x = v.pair(p1->members, p2->members);
        bool const lhs = v.h.find(x)->is_sdf;
        bool const rhs = p1->is_sdf && p2->is_sdf
                         && (p1->one_plus_one_in.value_or(false) || p2->one_plus_one_in.value_or(false));
        rec.record(Parts{when(lhs, rhs), when(rhs, lhs)}, [&] {
          return describe_product(a, v, {set_replay("P1", p1->members), set_replay("P2", p2->members),
                                         set_replay("P1xP2", x)});
        });
        if (rec.stopped()) {
          return;
        }
      }
    }
  });
}

void check_t17(CorpusAnalysis& a, Recorder& rec) {
  scan_products(a, rec, [&](ProductView const& v) {
    for (auto const* p1 : select(v.h1, [](ClassificationReport const& r) {
           return nonzero_proper(r) && r.is_strong_c_hyperideal;
         })) {
      if (!v.identity()) {
        rec.inapplicable();
        continue;
      }
      Subset const x = v.pair(p1->members, v.h2.ring().full());
      bool const lhs = p1->is_sdf;
      bool const rhs = v.h.find(x)->is_sdf;
      rec.record(Parts{when(lhs, rhs), when(rhs, lhs)}, [&] {
        return describe_product(a, v, {set_replay("P1", p1->members), set_replay("P1xH2", x)});
      });
      if (rec.stopped()) {
        return;
      }
    }
  });
}

void check_t18(CorpusAnalysis& a, Recorder& rec) {
  scan_products(a, rec, [&](ProductView const& v) {
    HyperRing const& h1 = v.h1.ring();
    Subset const zero = h1.singleton(h1.zero());
    ClassificationReport const* r0 = v.h1.find(zero);
    if (!v.identity() || h1.order() < 2 || r0 == nullptr) {
      rec.inapplicable();
      return;
    }
    Subset const z = v.pair(zero, v.h2.ring().full());
    ClassificationReport const* rz = v.h.find(z);
    bool const premise = rz->is_strong_c_hyperideal;
    bool const lhs = r0->is_sdf && v.h1.nilpotents() == zero;
    bool const rhs = rz->is_sdf;
    rec.record(Parts{when(premise && lhs, rhs), when(premise && rhs, lhs)},
               [&] { return describe_product(a, v, {set_replay("{0}xH2", z)}); });
  });
}

void check_w3(CorpusAnalysis& a, Recorder& rec) {
  scan_products(a, rec, [&](ProductView const& v) {
    for (auto const* p1 : select(v.h1, [](ClassificationReport const& r) {
           return nonzero_proper(r) && r.is_strong_c_hyperideal && r.is_weakly_sdf;
         })) {
      if (!v.identity()) {
        rec.inapplicable();
        continue;
      }
      Subset const x = v.pair(p1->members, v.h2.ring().full());
      ClassificationReport const* rx = v.h.find(x);
      bool const i = p1->is_sdf;
      bool const ii = rx->is_sdf;
      bool const iii = rx->is_weakly_sdf;
      rec.record(Parts{when(i, ii), when(ii, iii), when(iii, i)}, [&] {
        return describe_product(a, v, {set_replay("P1", p1->members), set_replay("P1xH2", x)});
      });
      if (rec.stopped()) {
        return;
      }
    }
  });
}

// x^2 - y^2 inside P forces 0 into x^2 - y^2, for all x, y (zero included).
bool squares_difference_meets_zero(HyperRing const& ring, Subset const& p) {
  auto const n = static_cast<Element>(ring.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Subset const d = diff_of_squares(ring, x, y);
      if (d.is_subset_of(p) && !d.contains(ring.zero())) {
        return false;
      }
    }
  }
  return true;
}

void check_w4(CorpusAnalysis& a, Recorder& rec) {
  auto chosen = [](ClassificationReport const& r) {
    return r.is_proper && r.is_strong_c_hyperideal && r.is_weakly_sdf && !r.is_sdf;
  };
  scan_products(a, rec, [&](ProductView const& v) {
    for (auto const* p1 : select(v.h1, chosen)) {
      for (auto const* p2 : select(v.h2, chosen)) {
        if (!v.identity()) {
          rec.inapplicable();
          continue;
        }
        Subset const x = v.pair(p1->members, p2->members);
        ClassificationReport const* rx = v.h.find(x);
        bool const i = rx->is_weakly_sdf && !rx->is_sdf;
        bool const ii = rx->is_weakly_sdf;
        bool const iii = squares_difference_meets_zero(v.h1.ring(), p1->members)
                         && squares_difference_meets_zero(v.h2.ring(), p2->members);
        bool const iv = rx->weak_firing_pairs == 0;
        rec.record(Parts{when(i, ii), when(ii, iii), when(iii, iv), when(iv, i)}, [&] {
          return describe_product(a, v, {set_replay("P1", p1->members), set_replay("P2", p2->members),
                                         set_replay("P1xP2", x)});
        });
        if (rec.stopped()) {
          return;
        }
      }
    }
  });
}

using CheckFn = void (*)(CorpusAnalysis&, Recorder&);

CheckFn dispatch(std::string_view id) {
  static std::map<std::string, CheckFn, std::less<>> const table = {
      {"P0", check_p0},
      {"T1", check_t1},
      {"T2", check_t2},
      {"T3", check_t3},
      {"T4", check_t4},
      {"L5", check_l5},
      {"C6", check_c6},
      {"T7", check_t7},
      {"T8", check_t8},
      {"T9", check_t9},
      {"T10", [](CorpusAnalysis& a, Recorder& r) { check_family(a, r, true); }},
      {"T11", check_t11},
      {"T12", check_t12},
      {"T13", [](CorpusAnalysis& a, Recorder& r) { check_family(a, r, false); }},
      {"T14", check_t14},
      {"T15", check_t15},
      {"T16", check_t16},
      {"T17", check_t17},
      {"T18", check_t18},
      {"W1", check_w1},
      {"W2", check_t15},
      {"W3", check_w3},
      {"W4", check_w4},
      {"W2-conj", check_w2_conj},
  };
  auto it = table.find(id);
  return it == table.end() ? nullptr : it->second;
}

}  // namespace

TheoremVerdict check_theorem(std::string_view id, CorpusAnalysis& analysis, CheckOptions options) {
  TheoremCase const& entry = find_theorem(id);
  TheoremVerdict verdict;
  verdict.id = entry.id;
  verdict.statement = entry.statement;
  verdict.gating = entry.gating;
  for (std::string const& part : entry.parts) {
    verdict.parts.push_back({part, 0, 0});
  }
  Recorder recorder(verdict, options);
  dispatch(entry.id)(analysis, recorder);
  return verdict;
}

std::vector<TheoremVerdict> run_all(CorpusAnalysis& analysis) {
  std::vector<TheoremVerdict> out;
  for (TheoremCase const& entry : theorem_registry()) {
    out.push_back(check_theorem(entry.id, analysis));
  }
  return out;
}

SearchResult search_counterexample(std::string_view id, CorpusSpec const& family) {
  find_theorem(id);
  CorpusAnalysis analysis(generate_corpus(family));
  SearchResult result{check_theorem(id, analysis, CheckOptions{true}), std::nullopt};
  if (result.verdict.has_counterexample()) {
    result.found = result.verdict.counterexamples.front();
  }
  return result;
}

}  // namespace hypersdf
