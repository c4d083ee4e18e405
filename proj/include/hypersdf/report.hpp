#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypersdf/analysis.hpp"
#include "hypersdf/harness.hpp"
#include "hypersdf/hyperring.hpp"
#include "hypersdf/sdf.hpp"

namespace hypersdf {

inline constexpr char const* tool_name = "hypersdf";
inline constexpr char const* tool_version = "0.1.0";

nlohmann::json elements_json(Subset const& s);

nlohmann::json to_json(AxiomReport const& report);
nlohmann::json to_json(ClassificationReport const& report);
nlohmann::json to_json(SdfResult const& result);
nlohmann::json to_json(Counterexample const& c);
// At most `max_counterexamples` are listed; the count is always exact.
nlohmann::json to_json(TheoremVerdict const& verdict, std::size_t max_counterexamples);

// {tool, version, command, verdicts, diagnostics}
nlohmann::json envelope(std::string const& command);

std::string verdict_text(TheoremVerdict const& verdict, std::size_t max_counterexamples);
std::string classification_text(ClassificationReport const& report);
std::string axiom_text(AxiomReport const& report);

}  // namespace hypersdf
