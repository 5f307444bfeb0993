#include "CLI11.hpp"

#include "puiseux/json_io.hpp"
#include "puiseux/parser.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace puiseux;

namespace {

struct CommonFlags {
    std::string eq_text;
    std::string eq_file;
    std::string op_kind = "diff";
    std::string q_text;
    std::string q_root_text;
    long long q_root_den = 0;
    std::string backend = "exact";
    unsigned precision = 256;
    int epsilon_log2 = -128;

    void attach_operator(CLI::App* cmd) {
        cmd->add_option("--op", op_kind, "operator: diff | q")
            ->check(CLI::IsMember({"diff", "q"}));
        cmd->add_option("--q", q_text, "q value for the q-difference operator");
        cmd->add_option("--q-root", q_root_text, "fixed determination of q^(1/N)");
        cmd->add_option("--q-root-den", q_root_den, "the N of the fixed root q^(1/N)");
    }
    void attach_equation(CLI::App* cmd) {
        cmd->add_option("--eq", eq_text, "equation text");
        cmd->add_option("--eq-file", eq_file, "file containing the equation text");
    }
    void attach_backend(CLI::App* cmd) {
        cmd->add_option("--backend", backend,
                        "exact | rational | quadratic:<d> | numeric");
        cmd->add_option("--precision", precision, "numeric precision in bits");
        cmd->add_option("--epsilon-log2", epsilon_log2, "zero threshold exponent");
    }

    void apply_numeric_config() const {
        numeric::set_precision_bits(precision);
        numeric::set_epsilon_log2(epsilon_log2);
    }

    bool numeric_backend() const { return backend == "numeric"; }

    OperatorSpec make_op() const {
        if (op_kind == "diff")
            return differential_op();
        if (q_text.empty())
            throw scalar_error("--q is required with --op q");
        Scalar q = parse_scalar(q_text);
        if (numeric_backend())
            q = q.to_numeric();
        if (!q_root_text.empty()) {
            Scalar root = parse_scalar(q_root_text);
            if (numeric_backend())
                root = root.to_numeric();
            if (q_root_den <= 0)
                throw scalar_error("--q-root needs --q-root-den");
            return q_difference_op(q, root, q_root_den);
        }
        return q_difference_op(q);
    }

    CoveredEquation load_equation() const {
        std::string text = eq_text;
        if (!eq_file.empty()) {
            std::ifstream in(eq_file);
            if (!in)
                throw scalar_error("cannot open " + eq_file);
            std::getline(in, text, '\0');
        }
        if (text.empty())
            throw scalar_error("no equation given (--eq or --eq-file)");
        auto p = parse_equation(text, make_op());
        return numeric_backend() ? to_numeric(p) : p;
    }
};

std::vector<Rat> parse_lines(const std::string& csv) {
    std::vector<Rat> out;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos)
            comma = csv.size();
        out.push_back(rat_from_text(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

PuiseuxPoly load_series(const std::string& text, const std::string& file) {
    std::string t = text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw scalar_error("cannot open " + file);
        std::getline(in, t, '\0');
    }
    if (t.empty())
        throw scalar_error("no series given");
    return parse_series(t);
}

// returns 0 on pass, 1 on failure
int run_verify_one(const json& jfix, bool strictness, json& out) {
    Fixture fix = fixture_from_json(jfix);
    CoveredEquation p = parse_equation(fix.equation_text, fix.op);
    PuiseuxPoly s = parse_series(fix.solution_text);
    auto vr = verify_solution(p, s, fix.k_last);
    Trace tr = trace_solution(p, s, fix.k_last);
    BoundReport br = bound_report(p, s, tr, strictness);
    out = json{{"verify", to_json(vr)}, {"bounds", to_json(br)}};
    bool ok = vr.pass && br.all_pass();
    if (fix.expected) {
        bool match = fix.expected->genus == tr.characteristic.genus &&
                     fix.expected->factors == tr.characteristic.factors &&
                     fix.expected->exponents == tr.characteristic.exponents;
        out["characteristic_match"] = match;
        ok = ok && match;
    }
    out["pass"] = ok;
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton polygon machinery for first-order differential and "
                 "q-difference equations"};
    app.require_subcommand(1);
    CommonFlags flags;

    auto* cmd_parse = app.add_subcommand("parse", "parse an equation and print its data");
    auto* cmd_polygon = app.add_subcommand("polygon", "Newton polygon and elements as JSON");
    auto* cmd_render = app.add_subcommand("render", "draw the polygon (svg/ascii/json)");
    auto* cmd_expand = app.add_subcommand("expand", "enumerate Puiseux solution jets");
    auto* cmd_trace = app.add_subcommand("trace", "replay a declared solution step by step");
    auto* cmd_verify = app.add_subcommand("verify", "check the height bounds on fixtures");
    auto* cmd_corpus = app.add_subcommand("corpus-gen", "write seeded solution fixtures");

    for (auto* cmd : {cmd_parse, cmd_polygon, cmd_render, cmd_expand, cmd_trace}) {
        flags.attach_equation(cmd);
        flags.attach_operator(cmd);
        flags.attach_backend(cmd);
    }
    flags.attach_backend(cmd_verify);

    std::string lines_csv;
    cmd_polygon->add_option("--lines", lines_csv, "co-slopes of supporting lines, e.g. 1/2,2");

    std::string format = "svg", out_file;
    cmd_render->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii", "json"}));
    cmd_render->add_option("--lines", lines_csv, "co-slopes of supporting lines");
    cmd_render->add_option("--out", out_file, "output file (default stdout)");

    std::string order_text = "4";
    long long max_ram = 24;
    std::string dicritical_policy = "param";
    cmd_expand->add_option("--order", order_text, "largest exponent explored");
    cmd_expand->add_option("--max-ram", max_ram, "ramification bound");
    cmd_expand->add_option("--dicritical", dicritical_policy, "param | sample:N");

    std::string solution_text, solution_file;
    long long k_last = 0;
    cmd_trace->add_option("--solution", solution_text, "declared solution series");
    cmd_trace->add_option("--solution-file", solution_file);
    cmd_trace->add_option("--k-last", k_last, "last index to trace");

    std::string fixture_path, fixture_dir;
    bool strictness = false;
    cmd_verify->add_option("--fixture", fixture_path, "fixture JSON file");
    cmd_verify->add_option("--fixture-dir", fixture_dir, "directory of fixture JSON files");
    cmd_verify->add_flag("--strictness", strictness,
                         "audit the equality characterization of the reasonable bound");

    unsigned long long seed = 1;
    long long genus = 2, count = 1, ram_bound = 12;
    std::string out_dir = ".";
    cmd_corpus->add_option("--seed", seed);
    cmd_corpus->add_option("--genus", genus);
    cmd_corpus->add_option("--count", count);
    cmd_corpus->add_option("--ram-bound", ram_bound);
    cmd_corpus->add_option("--out", out_dir);
    flags.attach_operator(cmd_corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        flags.apply_numeric_config();

        if (cmd_parse->parsed()) {
            auto p = flags.load_equation();
            json cloud = json::array();
            for (const auto& c : p.cloud()) {
                std::string src = std::string(c.from_a ? "A" : "") + (c.from_b ? "B" : "");
                cloud.push_back(json{{"i", rat_text(c.iota)}, {"j", c.j}, {"sources", src}});
            }
            json out{{"equation", p.str()},
                     {"m", p.ramification()},
                     {"nu0", rat_text(p.nu0())},
                     {"height", height(p)},
                     {"cloud", cloud},
                     {"validation", to_json(validate_covered(p))}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_polygon->parsed()) {
            auto p = flags.load_equation();
            RenderOptions opts;
            if (!lines_csv.empty())
                opts.lines = parse_lines(lines_csv);
            std::cout << render(p, RenderFormat::json, opts);
            return 0;
        }
        if (cmd_render->parsed()) {
            auto p = flags.load_equation();
            RenderOptions opts;
            if (!lines_csv.empty())
                opts.lines = parse_lines(lines_csv);
            RenderFormat f = format == "svg"     ? RenderFormat::svg
                             : format == "ascii" ? RenderFormat::ascii
                                                 : RenderFormat::json;
            std::string doc = render(p, f, opts);
            if (out_file.empty()) {
                std::cout << doc;
            } else {
                std::ofstream out(out_file);
                out << doc;
                std::cerr << "wrote " << out_file << "\n";
            }
            return 0;
        }
        if (cmd_expand->parsed()) {
            auto p = flags.load_equation();
            ExpandOptions opts;
            opts.max_ramification = max_ram;
            if (dicritical_policy.rfind("sample:", 0) == 0)
                opts.dicritical_samples = std::stoi(dicritical_policy.substr(7));
            else if (dicritical_policy != "param")
                throw scalar_error("--dicritical expects param or sample:N");
            auto jets = expand(p, rat_from_text(order_text), opts);
            json out = json::array();
            for (const auto& j : jets)
                out.push_back(to_json(j));
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_trace->parsed()) {
            auto p = flags.load_equation();
            PuiseuxPoly s = load_series(solution_text, solution_file);
            if (flags.numeric_backend())
                s = to_numeric(s);
            Trace tr = trace_solution(p, s, k_last);
            for (const auto& st : tr.steps)
                std::cout << to_json(st).dump() << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            std::vector<fs::path> files;
            if (!fixture_path.empty())
                files.push_back(fixture_path);
            if (!fixture_dir.empty())
                for (const auto& e : fs::directory_iterator(fixture_dir))
                    if (e.path().extension() == ".json")
                        files.push_back(e.path());
            std::sort(files.begin(), files.end());
            json out = json::array();
            int failures = 0;
            for (const auto& f : files) {
                std::ifstream in(f);
                if (!in)
                    throw scalar_error("cannot open " + f.string());
                json jf = json::parse(in);
                json one;
                failures += run_verify_one(jf, strictness, one);
                one["fixture"] = f.string();
                out.push_back(one);
                std::cerr << (one["pass"].get<bool>() ? "pass " : "FAIL ") << f.string()
                          << "\n";
            }
            std::cout << out.dump(2) << "\n";
            return failures == 0 ? 0 : 1;
        }
        if (cmd_corpus->parsed()) {
            fs::create_directories(out_dir);
            OperatorSpec op = flags.op_kind == "q" ? flags.make_op() : differential_op();
            for (long long i = 0; i < count; ++i) {
                CorpusSpec spec;
                spec.seed = seed + static_cast<unsigned long long>(i);
                spec.genus_bound = genus;
                spec.ramification_bound = ram_bound;
                spec.op_kind = op.kind;
                PuiseuxPoly s = gen_random_branch(spec);
                if (s.is_zero())
                    continue;
                Fixture fix;
                fix.op = op;
                if (op.is_differential()) {
                    fix.equation_text = gen_differential_from_branch(s).str();
                } else {
                    // keep q^{k/n} inside the quadratic tower
                    if (s.reduce().ramification() > 2)
                        s = gen_random_branch(spec, {2});
                    XYPoly b = XYPoly::monomial(Scalar(1), Rat(0), 1) +
                               XYPoly::monomial(Scalar(1), Rat(1), 0);
                    XYPoly d = XYPoly::monomial(Scalar(1), Rat(1), 0);
                    fix.equation_text =
                        gen_covered_with_solution(s, b, d, PuiseuxPoly(1), op).str();
                }
                fix.solution_text = s.str();
                fix.expected = characteristic_data(s);
                fs::path file = fs::path(out_dir) /
                                ("fixture_" + std::to_string(spec.seed) + ".json");
                std::ofstream outf(file);
                outf << fixture_to_json(fix).dump(2) << "\n";
                std::cerr << "wrote " << file.string() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
