#include "hypersdf/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "hypersdf/analysis.hpp"
#include "hypersdf/constructors.hpp"
#include "hypersdf/corpus.hpp"
#include "hypersdf/harness.hpp"
#include "hypersdf/ideals.hpp"
#include "hypersdf/report.hpp"
#include "hypersdf/ring_format.hpp"
#include "hypersdf/sdf.hpp"

namespace hypersdf {

namespace {

// Raised for bad user input; carries ready-made diagnostics.
struct InputError {
  nlohmann::json diagnostics = nlohmann::json::array();
  std::string text;
};

InputError input_error(std::string message, std::string file = {}, std::size_t line = 0,
                       std::size_t column = 0) {
  InputError e;
  nlohmann::json d = {{"message", message}};
  std::string text;
  if (!file.empty()) {
    d["file"] = file;
    text = file + ":";
    if (line > 0) {
      d["line"] = line;
      d["column"] = column;
      text += std::to_string(line) + ":" + std::to_string(column) + ":";
    }
    text += " ";
  }
  e.diagnostics.push_back(d);
  e.text = text + "error: " + message;
  return e;
}

HyperRing load(std::string const& path) {
  RingDocument doc = load_ring_file(path);
  if (!doc.ok()) {
    Diagnostic const d = doc.diagnostics.empty() ? Diagnostic{0, 0, "no ring parsed"}
                                                 : doc.diagnostics.front();
    throw input_error(d.message, path, d.line, d.column);
  }
  return std::move(*doc.ring);
}

std::vector<long long> parse_list(std::string_view text, std::string_view what) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw input_error(std::string(what) + ": '" + std::string(item) + "' is not an integer");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

Subset parse_ideal(HyperRing const& ring, std::string const& text) {
  Subset s = ring.empty();
  for (long long v : parse_list(text, "--ideal")) {
    if (v < 0 || static_cast<std::size_t>(v) >= ring.order()) {
      throw input_error("--ideal: element " + std::to_string(v) + " is outside 0.."
                        + std::to_string(ring.order() - 1));
    }
    s.insert(static_cast<Element>(v));
  }
  return s;
}

std::string braces(std::vector<Element> const& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(elements[i]);
  }
  return out + "}";
}

std::string pairs_text(std::vector<std::pair<Element, Element>> const& pairs) {
  std::string out;
  for (auto const& [x, y] : pairs) {
    out += (out.empty() ? "" : " ") + ("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return out.empty() ? "none" : out;
}

char const* variant_label(SdfVariant v) {
  switch (v) {
    case SdfVariant::sdf: return "sdf-absorbing";
    case SdfVariant::weakly: return "weakly sdf-absorbing";
    case SdfVariant::both: return "sdf-both";
  }
  return "";
}

char const* variant_key(SdfVariant v) {
  switch (v) {
    case SdfVariant::sdf: return "sdf";
    case SdfVariant::weakly: return "weaklySdf";
    case SdfVariant::both: return "sdfBoth";
  }
  return "";
}

std::string sdf_text(SdfVariant variant, SdfResult const& r) {
  std::string out = std::string(variant_label(variant)) + ": " + (r.holds ? "true" : "false")
                    + ", premise pairs: " + std::to_string(r.firing_pairs)
                    + (r.firing_pairs == 0 ? " (vacuous)" : "") + "\n";
  out += "  firing: " + pairs_text(r.firing) + "\n";
  if (!r.violations.empty()) {
    SdfWitness const& w = r.violations.front();
    out += "  witness: (" + std::to_string(w.x) + "," + std::to_string(w.y) + ") x^2-y^2="
           + braces(w.diff_set.elements()) + " x-y in P: " + (w.minus_in ? "true" : "false")
           + " x+y in P: " + (w.plus_in ? "true" : "false") + "\n";
    if (r.violations.size() > 1) {
      out += "  violating pairs: " + std::to_string(r.violations.size()) + "\n";
    }
  }
  return out;
}

struct Options {
  std::string format = "text";
  std::size_t max_cex = 5;
  std::string ring;
  std::string ideal;
  std::string id;
  std::string corpus = "fixtures";
  std::string family;
  bool weak = false;
  bool both = false;
  std::size_t n = 0;
  std::string omega;
};

class Runner {
 public:
  Runner(Options const& o, std::string command, std::ostream& out)
      : o_(o), json_(o.format == "json"), command_(std::move(command)), out_(out),
        report_(envelope(command_)) {}

  int run() {
    int code = exit_ok;
    if (command_ == "validate") code = validate();
    else if (command_ == "ideals") code = ideals();
    else if (command_ == "classify") code = classify_cmd();
    else if (command_ == "sdf") code = sdf();
    else if (command_ == "theorem") code = theorem();
    else if (command_ == "run-all") code = run_all_cmd();
    else if (command_ == "search") code = search();
    else if (command_ == "zomega") code = zomega_cmd();
    if (json_) {
      out_ << report_.dump(2) << '\n';
    } else {
      out_ << text_;
    }
    return code;
  }

 private:
  int validate() {
    HyperRing const ring = load(o_.ring);
    AxiomReport const r = validate_hyperring(ring);
    report_["result"] = to_json(r);
    text_ = axiom_text(r);
    return r.ok() ? exit_ok : exit_violation;
  }

  HyperRing load_valid() {
    HyperRing ring = load(o_.ring);
    AxiomReport const r = validate_hyperring(ring);
    if (!r.ok()) {
      throw input_error("not a hyperring: " + r.violations.front().axiom + " fails at "
                            + braces(r.violations.front().witness),
                        o_.ring);
    }
    return ring;
  }

  int ideals() {
    HyperRing const ring = load_valid();
    RingAnalysis const a(ring);
    nlohmann::json list = nlohmann::json::array();
    text_ = ring.name() + ": " + std::to_string(a.ideals().size()) + " hyperideals\n";
    for (ClassificationReport const& r : a.ideals()) {
      list.push_back(to_json(r));
      std::string flags;
      auto flag = [&](bool on, char const* name) {
        if (on) flags += std::string(" ") + name;
      };
      flag(!r.is_proper, "improper");
      flag(r.is_prime, "prime");
      flag(r.is_weakly_prime, "weaklyPrime");
      flag(r.is_maximal, "maximal");
      flag(r.is_c_hyperideal, "C");
      flag(r.is_strong_c_hyperideal, "strongC");
      flag(r.is_principal, "principal");
      flag(r.is_sdf, "sdf");
      flag(r.is_weakly_sdf, "weaklySdf");
      flag(r.is_sdf_both, "sdfBoth");
      text_ += braces(r.members.elements()) + flags + "\n";
    }
    nlohmann::json facts = {
        {"nilpotents", elements_json(a.nilpotents())},
        {"nilpotentsFormIdeal", a.nilpotents_form_ideal()},
        {"regular", a.regular()},
        {"characteristic", a.characteristic()},
        {"jacobson", elements_json(a.lattice().jacobson())},
    };
    if (a.has_identity()) {
      facts["units"] = elements_json(a.units());
    }
    report_["result"] = {{"ring", ring.name()}, {"ideals", list}, {"facts", facts}};
    text_ += "nilpotents: " + braces(a.nilpotents().elements())
             + " characteristic: " + std::to_string(a.characteristic())
             + " jacobson: " + braces(a.lattice().jacobson().elements()) + "\n";
    return exit_ok;
  }

  int classify_cmd() {
    HyperRing const ring = load_valid();
    Subset const s = parse_ideal(ring, o_.ideal);
    ClassificationReport const r = classify(ring, s);
    report_["result"] = to_json(r);
    text_ = classification_text(r);
    return exit_ok;
  }

  int sdf() {
    HyperRing const ring = load_valid();
    Subset const p = parse_ideal(ring, o_.ideal);
    if (!is_proper_hyperideal(ring, p)) {
      throw input_error("--ideal " + braces(p.elements()) + " is not a proper hyperideal");
    }
    SdfVariant const primary = o_.both ? SdfVariant::both
                               : o_.weak ? SdfVariant::weakly
                                         : SdfVariant::sdf;
    SdfResult const r = scan_sdf(ring, p, primary, ScanMode::exhaustive);
    nlohmann::json result = {{"ideal", elements_json(p)}, {"variant", variant_key(primary)}};
    result[variant_key(primary)] = to_json(r);
    text_ = sdf_text(primary, r);
    if (primary != SdfVariant::sdf) {
      SdfResult const plain = scan_sdf(ring, p, SdfVariant::sdf, ScanMode::exhaustive);
      result["sdf"] = to_json(plain);
      text_ += sdf_text(SdfVariant::sdf, plain);
    }
    report_["result"] = result;
    return r.holds ? exit_ok : exit_violation;
  }

  void emit(TheoremVerdict const& v) {
    report_["verdicts"].push_back(to_json(v, o_.max_cex));
    text_ += verdict_text(v, o_.max_cex);
  }

  int theorem() {
    TheoremCase const& entry = find_theorem(o_.id);
    CorpusAnalysis analysis(generate_corpus(o_.corpus));
    TheoremVerdict const v = check_theorem(entry.id, analysis);
    emit(v);
    return v.has_counterexample() ? exit_violation : exit_ok;
  }

  int run_all_cmd() {
    CorpusAnalysis analysis(generate_corpus(o_.corpus));
    std::size_t failing = 0;
    for (TheoremVerdict const& v : run_all(analysis)) {
      emit(v);
      failing += v.has_counterexample() ? 1 : 0;
    }
    Corpus const& c = analysis.corpus();
    report_["corpus"] = {{"spec", c.spec.text},
                         {"rings", c.rings.size()},
                         {"products", c.products.size()},
                         {"quotients", c.quotients.size()},
                         {"skipped", c.skipped}};
    text_ += "corpus: " + std::to_string(c.rings.size()) + " rings, "
             + std::to_string(c.skipped.size()) + " skipped\n";
    text_ += "entries with counterexamples: " + std::to_string(failing) + "\n";
    return failing > 0 ? exit_violation : exit_ok;
  }

  int search() {
    TheoremCase const& entry = find_theorem(o_.id);
    SearchResult const r = search_counterexample(entry.id, parse_corpus_spec(o_.family));
    emit(r.verdict);
    report_["result"] = {{"found", r.found ? to_json(*r.found) : nlohmann::json(nullptr)}};
    if (r.found) {
      text_ += "counterexample found: " + r.found->descriptor + "\n";
      for (auto const& ring : r.found->rings) {
        text_ += "# " + ring.role + " " + ring.label + "\n" + ring.document;
      }
      for (auto const& set : r.found->sets) {
        text_ += "# " + set.role + " = " + braces(set.elements) + "\n";
      }
    } else {
      text_ += "no counterexample in the family\n";
    }
    return r.found ? exit_violation : exit_ok;
  }

  int zomega_cmd() {
    std::vector<long long> const omega = parse_list(o_.omega, "--omega");
    HyperRing const ring = zomega(o_.n, omega);
    std::string const doc = serialize_ring(ring);
    report_["result"] = {{"document", doc}};
    text_ = doc;
    return exit_ok;
  }

  Options const& o_;
  bool json_;
  std::string command_;
  std::ostream& out_;
  nlohmann::json report_;
  std::string text_;
};

}  // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite multiplicative hyperrings: validation, ideals and sdf-absorbing checks",
               tool_name};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-counterexamples", o.max_cex, "Counterexamples listed per verdict");

  auto ring_cmd = [&](char const* name, char const* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("RING", o.ring, "Ring file")->required();
    return sub;
  };
  ring_cmd("validate", "Check the hyperring axioms");
  ring_cmd("ideals", "List the hyperideals with their flags");
  ring_cmd("classify", "Classify one subset")
      ->add_option("--ideal", o.ideal, "Comma-separated elements")
      ->required();
  CLI::App* sdf = ring_cmd("sdf", "Decide the sdf-absorbing condition");
  sdf->add_option("--ideal", o.ideal, "Comma-separated elements")->required();
  sdf->add_flag("--weak", o.weak, "Weakly sdf-absorbing variant");
  sdf->add_flag("--both", o.both, "Both x-y and x+y in P")->excludes("--weak");

  CLI::App* theorem = app.add_subcommand("theorem", "Check one registry entry over a corpus");
  theorem->fallthrough();
  theorem->add_option("ID", o.id, "Registry id")->required();
  theorem->add_option("--corpus", o.corpus, "Corpus spec");
  CLI::App* all = app.add_subcommand("run-all", "Check every registry entry");
  all->fallthrough();
  all->add_option("--corpus", o.corpus, "Corpus spec");
  CLI::App* search = app.add_subcommand("search", "Stop at the first counterexample");
  search->fallthrough();
  search->add_option("ID", o.id, "Registry id")->required();
  search->add_option("--family", o.family, "Corpus spec")->required();
  CLI::App* zom = app.add_subcommand("zomega", "Print the ring Z_n with hyperoperation x Omega y");
  zom->fallthrough();
  zom->add_option("N", o.n, "Modulus")->required();
  zom->add_option("--omega", o.omega, "Comma-separated residues")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  std::string const command = app.get_subcommands().front()->get_name();
  bool const json = o.format == "json";
  auto fail = [&](InputError const& e) {
    err << e.text << '\n';
    if (json) {
      nlohmann::json report = envelope(command);
      report["diagnostics"] = e.diagnostics;
      out << report.dump(2) << '\n';
    }
    return exit_input_error;
  };
  try {
    return Runner(o, command, out).run();
  } catch (InputError const& e) {
    return fail(e);
  } catch (Error const& e) {
    // Spec, unknown id, precondition and construction errors all stem from input.
    return fail(input_error(e.what()));
  }
}

}  // namespace hypersdf
