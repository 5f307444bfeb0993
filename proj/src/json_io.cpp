#include "puiseux/json_io.hpp"

#include "puiseux/parser.hpp"

namespace puiseux {

std::string rat_text(const Rat& r) { return rat_str(r); }

Rat rat_from_text(const std::string& text) {
    Scalar s = parse_scalar(text);
    if (!s.is_rational())
        throw scalar_error("expected a rational, got " + text);
    return s.rat();
}

namespace {
json scalar_json(const Scalar& s) { return s.str(); }

json opt_scalar_json(const std::optional<Scalar>& s) {
    if (!s)
        return "inf";
    return scalar_json(*s);
}
} // namespace

json to_json(const SupportElement& e) {
    json pts = json::array();
    for (const auto& p : e.points) {
        std::string src = std::string(p.from_a ? "A" : "") + (p.from_b ? "B" : "");
        pts.push_back(json{{"i", rat_text(p.iota)}, {"j", p.j}, {"sources", src}});
    }
    return json{{"mu", rat_text(e.mu)},
                {"alpha", rat_text(e.alpha)},
                {"top", e.top},
                {"bot", e.bot},
                {"points", pts}};
}

json to_json(const StepRecord& r) {
    json out{{"k", r.k},
             {"n", r.n},
             {"coslope", rat_text(r.coslope)},
             {"element_before", to_json(r.element_before)},
             {"phi", r.phi.str()},
             {"dicritical", r.dicritical},
             {"root", scalar_json(r.root)},
             {"root_multiplicity", r.root_multiplicity},
             {"alpha", r.alpha.str()},
             {"beta", r.beta.str()},
             {"element_after", to_json(r.element_after)},
             {"rho", r.rho},
             {"is_characteristic", r.is_characteristic},
             {"tres", opt_scalar_json(r.tres)},
             {"bres", opt_scalar_json(r.bres)},
             {"grid_before", r.grid_before},
             {"grid_after", r.grid_after}};
    if (r.dicritical_margin)
        out["dicritical_margin"] = r.dicritical_margin->str(20, std::ios::scientific);
    return out;
}

json to_json(const CharacteristicData& cd) {
    return json{{"genus", cd.genus},
                {"exponents", cd.exponents},
                {"factors", cd.factors},
                {"p", cd.p}};
}

json to_json(const Trace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back(to_json(s));
    return json{{"characteristic", to_json(t.characteristic)}, {"steps", steps}};
}

json to_json(const BranchJet& j) {
    json out{{"series", j.series.str()},
             {"certified_order", rat_text(j.certified_order)},
             {"trace_length", j.trace.size()}};
    switch (j.status) {
    case JetStatus::certified_extends: out["status"] = "certified-extends"; break;
    case JetStatus::jet_only: out["status"] = "jet-only"; break;
    case JetStatus::dicritical_free_parameter:
        out["status"] = "dicritical-free-parameter";
        out["parameter_position"] = rat_text(j.parameter_position);
        out["excluded"] = json::array();
        for (const auto& e : j.excluded)
            out["excluded"].push_back(scalar_json(e));
        break;
    }
    return out;
}

json to_json(const VerifyReport& r) {
    json out{{"pass", r.pass},
             {"exact_zero", r.exact_zero},
             {"threshold", rat_text(r.threshold)},
             {"horizontal_height", r.horizontal_height}};
    if (r.failed_k)
        out["failed_k"] = *r.failed_k;
    if (!r.message.empty())
        out["message"] = r.message;
    if (r.residual_order)
        out["residual_order"] = rat_text(*r.residual_order);
    return out;
}

json to_json(const BoundReport& r) {
    json reas{{"basis", r.reasonableness.basis}};
    switch (r.reasonableness.verdict) {
    case Reasonable::reasonable: reas["verdict"] = "reasonable"; break;
    case Reasonable::unreasonable:
        reas["verdict"] = "unreasonable";
        reas["witness"] = r.reasonableness.witness.str();
        reas["witness_rhos"] = r.reasonableness.witness_rhos;
        break;
    case Reasonable::unknown: reas["verdict"] = "unknown"; break;
    }
    json dicr = json::array();
    for (const auto& mu : r.dicritical_exponents)
        dicr.push_back(rat_text(mu));
    return json{{"H", r.h_p},
                {"H_rel", r.h_ps},
                {"nu0", rat_text(r.nu0)},
                {"ord_at_least_one", r.ord_at_least_one},
                {"one_covered", r.one_covered},
                {"characteristic", to_json(r.characteristic)},
                {"dicritical_characteristic_indices", r.dicritical_char_indices},
                {"terminally_dicritical_indices", r.terminally_dicritical_indices},
                {"dicritical_exponents", dicr},
                {"rhs_theorem_main", r.rhs_theorem_main},
                {"rhs_corollary_a", r.rhs_corollary_a},
                {"rhs_theorem_reasonable", r.rhs_theorem_reasonable},
                {"reasonableness", reas},
                {"pass",
                 json{{"h_vs_h_rel", r.pass_h_vs_hps},
                      {"nu0_vs_h_rel", r.pass_nu0_vs_hps},
                      {"theorem_main", r.pass_theorem_main},
                      {"corollary_a", r.pass_corollary_a},
                      {"theorem_reasonable", r.pass_theorem_reasonable},
                      {"nu0_theorem_main", r.pass_nu0_theorem_main},
                      {"nu0_corollary_a", r.pass_nu0_corollary_a},
                      {"nu0_theorem_reasonable", r.pass_nu0_theorem_reasonable},
                      {"genus_log", r.pass_genus_log},
                      {"strictness_consistent", r.strictness_consistent}}},
                {"strictness_checked", r.strictness_checked},
                {"notes", r.notes},
                {"all_pass", r.all_pass()}};
}

json to_json(const FoliationReport& r) {
    return json{{"pass", r.pass},       {"nu0", r.nu0},
                {"genus", r.genus},     {"rhs", r.rhs},
                {"tries", r.tries},     {"changed_coordinates", r.changed_coordinates},
                {"reexpanded", r.reexpanded}, {"notes", r.notes}};
}

json to_json(const ValidationReport& r) {
    return json{{"a00_zero", r.a00_zero}, {"b00_zero", r.b00_zero}, {"warnings", r.warnings}};
}

json operator_to_json(const OperatorSpec& op) {
    if (op.is_differential())
        return json{{"kind", "differential"}};
    json out{{"kind", "q-difference"}, {"q", op.q.str()}};
    if (op.root_den > 0) {
        out["q_root"] = op.q_root.str();
        out["root_den"] = op.root_den;
    }
    return out;
}

OperatorSpec operator_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "differential" || kind == "diff")
        return differential_op();
    if (kind != "q-difference" && kind != "q")
        throw scalar_error("unknown operator kind '" + kind + "'");
    Scalar q = parse_scalar(j.at("q").get<std::string>());
    if (j.contains("numeric") && j["numeric"].get<bool>())
        q = q.to_numeric();
    if (j.contains("q_root")) {
        Scalar root = parse_scalar(j.at("q_root").get<std::string>());
        long long den = j.at("root_den").get<long long>();
        return q_difference_op(q, root, den);
    }
    return q_difference_op(q);
}

json fixture_to_json(const Fixture& f) {
    json out{{"operator", operator_to_json(f.op)},
             {"equation", f.equation_text},
             {"solution", f.solution_text}};
    if (f.k_last > 0)
        out["k_last"] = f.k_last;
    if (f.expected)
        out["characteristic"] = to_json(*f.expected);
    return out;
}

Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.op = operator_from_json(j.at("operator"));
    f.equation_text = j.at("equation").get<std::string>();
    f.solution_text = j.value("solution", std::string());
    f.k_last = j.value("k_last", 0LL);
    if (j.contains("characteristic")) {
        CharacteristicData cd;
        const json& c = j["characteristic"];
        cd.genus = c.at("genus").get<long long>();
        cd.exponents = c.value("exponents", std::vector<long long>{});
        cd.factors = c.value("factors", std::vector<long long>{});
        cd.p = c.value("p", std::vector<long long>{});
        f.expected = cd;
    }
    return f;
}

} // namespace puiseux
