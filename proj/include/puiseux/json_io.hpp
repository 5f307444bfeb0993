#pragma once

#include "puiseux/bounds.hpp"
#include "puiseux/solver.hpp"

#include "json.hpp"

namespace puiseux {

using json = nlohmann::json;

std::string rat_text(const Rat& r);
Rat rat_from_text(const std::string& text);

json to_json(const SupportElement& e);
json to_json(const StepRecord& r);
json to_json(const Trace& t);
json to_json(const BranchJet& j);
json to_json(const VerifyReport& r);
json to_json(const BoundReport& r);
json to_json(const FoliationReport& r);
json to_json(const CharacteristicData& cd);
json to_json(const ValidationReport& r);
json operator_to_json(const OperatorSpec& op);

OperatorSpec operator_from_json(const json& j);

// equation + declared solution + expected characteristic data
struct Fixture {
    OperatorSpec op;
    std::string equation_text;
    std::string solution_text;
    long long k_last = 0; // 0: use the solution's top index
    std::optional<CharacteristicData> expected;
};

json fixture_to_json(const Fixture& f);
Fixture fixture_from_json(const json& j);

} // namespace puiseux
