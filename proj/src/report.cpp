#include "hypersdf/report.hpp"

#include <sstream>

namespace hypersdf {

namespace {

std::string braces(std::vector<Element> const& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(elements[i]);
  }
  return out + "}";
}

char const* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

nlohmann::json elements_json(Subset const& s) { return s.elements(); }

nlohmann::json to_json(AxiomReport const& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (AxiomViolation const& v : report.violations) {
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  }
  return {
      {"ok", report.ok()},
      {"abelianGroup", report.abelian_group},
      {"semihypergroup", report.semihypergroup},
      {"distributiveInclusion", report.distributive_inclusion},
      {"signRule", report.sign_rule},
      {"commutative", report.commutative},
      {"stronglyDistributive", report.strongly_distributive},
      {"identityWitnesses", elements_json(report.identity_witnesses)},
      {"violations", violations},
  };
}

nlohmann::json to_json(ClassificationReport const& r) {
  nlohmann::json j = {
      {"members", elements_json(r.members)},
      {"isHyperideal", r.is_hyperideal},
      {"isProper", r.is_proper},
      {"isPrime", r.is_prime},
      {"isWeaklyPrime", r.is_weakly_prime},
      {"isMaximal", r.is_maximal},
      {"isCHyperideal", r.is_c_hyperideal},
      {"isStrongCHyperideal", r.is_strong_c_hyperideal},
      {"isPrincipal", r.is_principal},
      {"isSdf", r.is_sdf},
      {"isWeaklySdf", r.is_weakly_sdf},
      {"isSdfBoth", r.is_sdf_both},
      {"sdfFiringPairs", r.sdf_firing_pairs},
      {"weakFiringPairs", r.weak_firing_pairs},
      {"witnesses", r.witnesses},
  };
  if (r.is_hyperideal) {
    j["radical"] = elements_json(r.radical);
    j["dSet"] = elements_json(r.d_set);
    j["quotientCharacteristic"] = r.quotient_characteristic;
  }
  if (r.generator) {
    j["generator"] = *r.generator;
  }
  if (r.one_plus_one_in) {
    j["onePlusOneIn"] = *r.one_plus_one_in;
  }
  return j;
}

nlohmann::json to_json(SdfResult const& result) {
  nlohmann::json violations = nlohmann::json::array();
  for (SdfWitness const& w : result.violations) {
    violations.push_back({{"x", w.x},
                          {"y", w.y},
                          {"diffSet", elements_json(w.diff_set)},
                          {"containsZero", w.contains_zero},
                          {"minusIn", w.minus_in},
                          {"plusIn", w.plus_in}});
  }
  nlohmann::json firing = nlohmann::json::array();
  for (auto const& [x, y] : result.firing) {
    firing.push_back({x, y});
  }
  return {{"holds", result.holds},
          {"firingPairs", result.firing_pairs},
          {"vacuous", result.firing_pairs == 0},
          {"firing", firing},
          {"violations", violations}};
}

nlohmann::json to_json(Counterexample const& c) {
  nlohmann::json rings = nlohmann::json::array();
  for (auto const& r : c.rings) {
    rings.push_back({{"role", r.role}, {"label", r.label}, {"document", r.document}});
  }
  nlohmann::json sets = nlohmann::json::object();
  for (auto const& s : c.sets) {
    sets[s.role] = s.elements;
  }
  nlohmann::json j = {{"instance", c.instance},
                      {"descriptor", c.descriptor},
                      {"failedParts", c.failed_parts},
                      {"rings", rings},
                      {"sets", sets}};
  if (!c.map.empty()) {
    j["map"] = c.map;
  }
  return j;
}

nlohmann::json to_json(TheoremVerdict const& v, std::size_t max_counterexamples) {
  nlohmann::json parts = nlohmann::json::array();
  for (PartTally const& p : v.parts) {
    parts.push_back({{"name", p.name}, {"premisesSatisfied", p.premises}, {"conclusionsHeld", p.held}});
  }
  nlohmann::json cex = nlohmann::json::array();
  for (std::size_t i = 0; i < v.counterexamples.size() && i < max_counterexamples; ++i) {
    cex.push_back(to_json(v.counterexamples[i]));
  }
  nlohmann::json extras = nlohmann::json::object();
  for (auto const& [k, n] : v.extras) {
    extras[k] = n;
  }
  return {{"id", v.id},
          {"statement", v.statement},
          {"gating", v.gating},
          {"instancesScanned", v.instances_scanned},
          {"inapplicable", v.inapplicable},
          {"premisesSatisfied", v.premises_satisfied},
          {"conclusionsHeld", v.conclusions_held},
          {"counterexampleCount", v.counterexamples.size()},
          {"vacuous", v.vacuous()},
          {"parts", parts},
          {"extras", extras},
          {"counterexamples", cex}};
}

nlohmann::json envelope(std::string const& command) {
  return {{"tool", tool_name},
          {"version", tool_version},
          {"command", command},
          {"verdicts", nlohmann::json::array()},
          {"diagnostics", nlohmann::json::array()}};
}

std::string verdict_text(TheoremVerdict const& v, std::size_t max_counterexamples) {
  std::ostringstream out;
  out << v.id << (v.gating ? "" : " (non-gating)") << ": scanned " << v.instances_scanned
      << ", inapplicable " << v.inapplicable << ", premises " << v.premises_satisfied << ", held "
      << v.conclusions_held << ", counterexamples " << v.counterexamples.size()
      << (v.vacuous() ? ", vacuous" : "") << '\n';
  out << "  " << v.statement << '\n';
  for (PartTally const& p : v.parts) {
    out << "  part " << p.name << ": premises " << p.premises << ", held " << p.held << '\n';
  }
  for (auto const& [k, n] : v.extras) {
    out << "  " << k << ": " << n << '\n';
  }
  for (std::size_t i = 0; i < v.counterexamples.size() && i < max_counterexamples; ++i) {
    Counterexample const& c = v.counterexamples[i];
    out << "  counterexample #" << c.instance << ": " << c.descriptor << " (failed:";
    for (auto const& f : c.failed_parts) {
      out << ' ' << f;
    }
    out << ")\n";
  }
  if (v.counterexamples.size() > max_counterexamples) {
    out << "  ... " << v.counterexamples.size() - max_counterexamples << " more\n";
  }
  return out.str();
}

std::string classification_text(ClassificationReport const& r) {
  std::ostringstream out;
  out << "members: " << braces(r.members.elements()) << '\n';
  out << "hyperideal=" << yes_no(r.is_hyperideal) << " proper=" << yes_no(r.is_proper)
      << " prime=" << yes_no(r.is_prime) << " weaklyPrime=" << yes_no(r.is_weakly_prime)
      << " maximal=" << yes_no(r.is_maximal) << '\n';
  out << "cHyperideal=" << yes_no(r.is_c_hyperideal)
      << " strongCHyperideal=" << yes_no(r.is_strong_c_hyperideal)
      << " principal=" << yes_no(r.is_principal) << '\n';
  out << "sdf=" << yes_no(r.is_sdf) << " (premise pairs " << r.sdf_firing_pairs << ")"
      << " weaklySdf=" << yes_no(r.is_weakly_sdf) << " (premise pairs " << r.weak_firing_pairs
      << ")"
      << " sdfBoth=" << yes_no(r.is_sdf_both) << '\n';
  if (r.is_hyperideal) {
    out << "radical: " << braces(r.radical.elements()) << " D: " << braces(r.d_set.elements())
        << " char(H/P): " << r.quotient_characteristic << '\n';
  }
  if (r.generator) {
    out << "generator: " << *r.generator << '\n';
  }
  for (auto const& [name, witness] : r.witnesses) {
    out << "witness " << name << ": " << braces(witness) << '\n';
  }
  return out.str();
}

std::string axiom_text(AxiomReport const& r) {
  std::ostringstream out;
  out << "abelianGroup=" << yes_no(r.abelian_group) << " semihypergroup=" << yes_no(r.semihypergroup)
      << " distributiveInclusion=" << yes_no(r.distributive_inclusion)
      << " signRule=" << yes_no(r.sign_rule) << " commutative=" << yes_no(r.commutative) << '\n';
  out << "stronglyDistributive=" << yes_no(r.strongly_distributive)
      << " identityWitnesses=" << braces(r.identity_witnesses.elements()) << '\n';
  for (AxiomViolation const& v : r.violations) {
    out << "violation " << v.axiom << ": " << braces(v.witness) << '\n';
  }
  out << (r.ok() ? "valid hyperring" : "not a hyperring") << '\n';
  return out.str();
}

}  // namespace hypersdf
