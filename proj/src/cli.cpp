#include "claims/cli.hpp"

#include "claims/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace claims {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream oss;
        oss << in.rdbuf();
        return oss.str();
    }
    std::ifstream file(path);
    if (!file)
        throw ParseError("cannot open input file: " + path);
    std::ostringstream oss;
    oss << file.rdbuf();
    return oss.str();
}

void write_output(const std::string& path, std::ostream& out,
                  const std::string& payload) {
    if (path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw ParseError("cannot open output file: " + path);
    file << payload;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int emit_error(std::ostream& out, const std::string& code,
               const std::string& message) {
    Json payload;
    payload["error"]["code"] = code;
    payload["error"]["message"] = message;
    out << payload.dump(2) << "\n";
    return 2;
}

// "fixture:label=expected" replaces one frozen expectation; used to verify
// that the fixture gate actually trips on mismatches.
void apply_overrides(std::vector<FixtureResult>& report,
                     const std::vector<std::string>& overrides) {
    for (const auto& spec : overrides) {
        const auto colon = spec.find(':');
        const auto equals = spec.find('=', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || equals == std::string::npos)
            throw ParseError("override must look like fixture:label=value");
        const std::string fixture = spec.substr(0, colon);
        const std::string label = spec.substr(colon + 1, equals - colon - 1);
        const std::string value = spec.substr(equals + 1);
        bool found = false;
        for (auto& fx : report) {
            if (fx.name != fixture)
                continue;
            for (auto& [l, expected, computed] : fx.values) {
                if (l == label) {
                    expected = value;
                    found = true;
                }
            }
            fx.match = true;
            for (const auto& [l, expected, computed] : fx.values)
                if (expected != computed)
                    fx.match = false;
        }
        if (!found)
            throw ParseError("override target not found: " + spec);
    }
}

struct Options {
    std::string rule;
    std::string op = "phi";
    std::string axiom;
    std::string input = "-";
    std::string output = "-";
    std::string format = "json";
    std::string samples = "exact";
    long budget = 10000;
    std::uint64_t seed = 0;
    std::vector<std::string> overrides;
};

std::optional<int> parse_samples(const std::string& text) {
    if (text == "exact")
        return std::nullopt;
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw ParseError("--samples must be an integer or 'exact'");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for claims problems with history"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "input file or '-' for stdin");
        cmd->add_option("--output", opt.output, "output file or '-' for stdout");
    };

    auto* solve = app.add_subcommand("solve", "apply a standard rule");
    solve->add_option("--rule", opt.rule)->required();
    add_io(solve);

    auto* solve_hist =
        app.add_subcommand("solve-hist", "apply an extension operator");
    solve_hist->add_option("--rule", opt.rule)->required();
    solve_hist->add_option("--operator", opt.op);
    add_io(solve_hist);

    auto* check = app.add_subcommand("axioms-check",
                                     "check one axiom on one instance");
    check->add_option("--rule", opt.rule)->required();
    check->add_option("--axiom", opt.axiom)->required();
    check->add_option("--operator", opt.op,
                      "extension operator, or 'none' for the bare rule");
    add_io(check);

    auto* search = app.add_subcommand(
        "axioms-search", "randomized counterexample search");
    search->add_option("--rule", opt.rule)->required();
    search->add_option("--axiom", opt.axiom)->required();
    search->add_option("--operator", opt.op);
    search->add_option("--budget", opt.budget);
    search->add_option("--seed", opt.seed);
    add_io(search);

    auto* fixtures =
        app.add_subcommand("fixtures", "replay the curated counterexamples");
    fixtures->add_option("--override", opt.overrides,
                         "fixture:label=value expectation override");
    add_io(fixtures);

    auto* trace = app.add_subcommand("trace", "path of awards");
    trace->add_option("--rule", opt.rule)->required();
    trace->add_option("--samples", opt.samples,
                      "sample count or 'exact' (default)");
    trace->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv"}));
    add_io(trace);

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("claims");
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed()) {
            const RuleHandle rule = make_rule(opt.rule);
            const ClaimsProblem p =
                problem_from_json(parse_json(read_input(opt.input, in)));
            if (auto error = validate_problem(p))
                return emit_error(out, validation_code_name(error->code),
                                  error->message);
            Json payload;
            payload["rule"] = rule.name;
            payload["awards"] = amounts_to_json(rule(p).awards);
            write_output(opt.output, out, payload.dump(2) + "\n");
            return 0;
        }

        if (solve_hist->parsed()) {
            const RuleHandle rule = make_rule(opt.rule);
            const HistoricalProblem hp =
                historical_from_json(parse_json(read_input(opt.input, in)));
            if (auto error = validate_historical(hp))
                return emit_error(out, validation_code_name(error->code),
                                  error->message);
            Json payload;
            payload["rule"] = rule.name;
            payload["operator"] = opt.op;
            if (opt.op == "phi") {
                payload.update(
                    to_json(apply_historical(rule, hp), hp.problem));
            } else {
                const OperatorHandle op = make_operator(opt.op);
                payload["awards"] = amounts_to_json(op(rule, hp).awards);
            }
            write_output(opt.output, out, payload.dump(2) + "\n");
            return 0;
        }

        if (check->parsed() || search->parsed()) {
            const RuleHandle rule = make_rule(opt.rule);
            const Axiom axiom = axiom_from_name(opt.axiom);
            std::optional<OperatorHandle> op;
            if (opt.op != "none")
                op = make_operator(opt.op);

            CheckResult result;
            if (check->parsed()) {
                const AxiomInstance instance =
                    instance_from_json(parse_json(read_input(opt.input, in)));
                result = op ? check_general(axiom, rule, *op, instance)
                            : check_standard(axiom, rule, instance);
            } else {
                result = search_counterexample(
                    axiom, rule, op ? &*op : nullptr, opt.budget, opt.seed);
            }
            Json payload = to_json(result);
            payload["axiom"] = opt.axiom;
            payload["rule"] = rule.name;
            payload["operator"] = opt.op;
            write_output(opt.output, out, payload.dump(2) + "\n");
            return result.holds ? 0 : 3;
        }

        if (fixtures->parsed()) {
            std::vector<FixtureResult> report = run_curated_fixtures();
            apply_overrides(report, opt.overrides);
            const Json payload = to_json(report);
            write_output(opt.output, out, payload.dump(2) + "\n");
            return payload.at("all_match").get<bool>() ? 0 : 3;
        }

        if (trace->parsed()) {
            const RuleHandle rule = make_rule(opt.rule);
            const Json input = parse_json(read_input(opt.input, in));
            const HistoricalProblem hp = historical_from_json(input);
            const auto samples = parse_samples(opt.samples);
            const AwardPath path =
                hp.history.empty()
                    ? trace_standard(rule, hp.problem.claims, samples)
                    : trace_historical(rule, hp.problem.claims, hp.history,
                                       samples);
            if (opt.format == "csv")
                write_output(opt.output, out, path_to_csv(path));
            else
                write_output(opt.output, out, to_json(path).dump(2) + "\n");
            return 0;
        }
    } catch (const ParseError& e) {
        return emit_error(out, "ParseError", e.what());
    } catch (const UnknownName& e) {
        return emit_error(out, "UnknownName", e.what());
    } catch (const ValidationFailure& e) {
        return emit_error(out, validation_code_name(e.error.code),
                          e.error.message);
    } catch (const SignatureMismatch& e) {
        return emit_error(out, "SignatureMismatch", e.what());
    } catch (const ExactModeUnsupported& e) {
        return emit_error(out, "ExactModeUnsupported", e.what());
    } catch (const SolveError& e) {
        return emit_error(out, "SolveError", e.what());
    }
    err << "no subcommand executed\n";
    return 2;
}

}  // namespace claims
