// equindex: equivariant index calculator.
//
// Subcommands: validate, index, chern, conserve. Input is a JSON problem
// document; output is line-oriented text or, with --json, a single JSON
// report. Exit codes: 0 ok, 1 I/O, 2 validation or parse, 3 non-isolated,
// 4 genericity failure, 5 budget exceeded.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "equindex/errors.hpp"
#include "equindex/indices.hpp"
#include "equindex/macaulay.hpp"
#include "equindex/problem_io.hpp"

namespace {

using namespace equindex;

Json monomials_json(const std::vector<Monomial>& monomials) {
    Json out = Json::array();
    for (const auto& m : monomials) out.push_back(m);
    return out;
}

Json polys_json(const std::vector<Polynomial>& polys,
                const std::vector<std::string>& variables) {
    Json out = Json::array();
    for (const auto& p : polys) out.push_back(p.to_string(variables));
    return out;
}

Json report_json(const IndexReport& report) {
    Json j;
    j["value"] = report.value;
    j["fixed_variables"] = report.fixed_variables;
    j["ideal_generators"] = polys_json(report.ideal_generators, report.fixed_variables);
    j["leading_exponents"] = monomials_json(report.leading_exponents);
    j["standard_monomial_count"] = report.standard_monomial_count;
    j["oracle"] = to_string(report.oracle);
    if (report.oracle_value.has_value()) j["oracle_value"] = *report.oracle_value;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_validate(const std::string& path, bool json) {
    ProblemDocument doc = load_document(path);
    ValidationReport report = validate(doc.problem);
    if (json) {
        Json j;
        j["command"] = "validate";
        j["valid"] = report.valid();
        j["violations"] = report.violations;
        j["notes"] = report.notes;
        j["document"] = problem_to_json(doc.problem);
        emit(j);
    } else {
        if (report.valid()) {
            std::cout << "VALID\n";
        } else {
            for (const auto& v : report.violations) std::cout << "VIOLATION " << v << "\n";
        }
        for (const auto& n : report.notes) std::cout << "NOTE " << n << "\n";
    }
    return report.valid() ? 0 : 2;
}

int run_index(const std::string& path, bool json, bool oracle, int max_degree,
              std::uint64_t budget) {
    ProblemDocument doc = load_document(path);
    BasisOptions opts;
    opts.max_steps = budget;
    IndexReport report = gsv_index(doc.problem, opts);

    std::vector<std::int64_t> q_values;
    if (oracle) {
        CrossCheckReport cc = cross_check(doc.problem, MacaulayOptions{max_degree});
        switch (cc.verdict) {
            case CrossCheckVerdict::AGREE: report.oracle = OracleStatus::AGREE; break;
            case CrossCheckVerdict::DISAGREE: report.oracle = OracleStatus::DISAGREE; break;
            case CrossCheckVerdict::ORACLE_INCONCLUSIVE:
                report.oracle = OracleStatus::INCONCLUSIVE;
                break;
        }
        report.oracle_value = cc.oracle;
        q_values = cc.q_values;
    }

    if (json) {
        Json j;
        j["command"] = "index";
        Json body = report_json(report);
        j.update(body);
        if (oracle) j["oracle_q_values"] = q_values;
        emit(j);
    } else {
        std::cout << "INDEX " << report.value << "\n";
        if (oracle) std::cout << "ORACLE " << to_string(report.oracle) << "\n";
    }
    return 0;
}

int run_chern(const std::string& path, bool json, std::uint64_t seed,
              std::uint64_t budget) {
    ProblemDocument doc = load_document(path);
    BasisOptions opts;
    opts.max_steps = budget;
    ChernReport report = chern_obstruction(doc.problem, seed, opts);

    if (json) {
        Json j;
        j["command"] = "chern";
        j["chern"] = report.value;
        j["seed_a"] = report.seed_a;
        j["seed_b"] = report.seed_b;
        j["form_term"] = report_json(report.form_term);
        j["generic_term"] = report_json(report.generic_term);
        emit(j);
    } else {
        std::cout << "CHERN " << report.value << "\n";
        std::cout << "SEEDS " << report.seed_a << " " << report.seed_b << "\n";
    }
    return 0;
}

int run_conserve(const std::string& path, bool json, const std::string& epsilon,
                 std::uint64_t seed, std::uint64_t budget) {
    ProblemDocument doc = load_document(path);
    DeformationSpec spec = doc.deformation.value_or(DeformationSpec{});
    if (!epsilon.empty()) spec.epsilon = rational_from_string(epsilon);
    if (spec.epsilon == 0) throw validation_error("epsilon must be nonzero");
    spec.seed = seed;
    BasisOptions opts;
    opts.max_steps = budget;
    ConservationReport report = conserve(doc.problem, spec, opts);

    const bool conserved = report.verdict == ConservationReport::Verdict::CONSERVED;
    if (json) {
        Json j;
        j["command"] = "conserve";
        j["local"] = report.local;
        j["global_deformed"] = *report.global_deformed;
        j["verdict"] = conserved ? "CONSERVED" : "ESCAPED";
        j["note"] = report.note;
        j["epsilon"] = to_string(report.epsilon);
        j["seed"] = report.seed;
        j["fixed_variables"] = report.fixed_variables;
        j["deformed_generators"] =
            polys_json(report.deformed_generators, report.fixed_variables);
        emit(j);
    } else {
        std::cout << "LOCAL " << report.local << "  GLOBAL_DEFORMED "
                  << *report.global_deformed << "\n";
        std::cout << "VERDICT " << (conserved ? "CONSERVED" : "ESCAPED") << "\n";
        std::cout << "NOTE " << report.note << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant index calculator"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    bool oracle = false;
    std::uint64_t seed = 0;
    std::string epsilon;
    int max_degree = 12;
    std::uint64_t budget = 1'000'000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "problem document (JSON)")->required();
        cmd->add_flag("--json", json, "emit a JSON report");
    };

    CLI::App* cmd_validate = app.add_subcommand("validate", "check a problem document");
    add_common(cmd_validate);

    CLI::App* cmd_index = app.add_subcommand("index", "index of the form collection");
    add_common(cmd_index);
    cmd_index->add_flag("--oracle", oracle, "cross-check against the truncation oracle");
    cmd_index->add_option("--max-degree", max_degree, "oracle truncation degree bound")
        ->check(CLI::Range(2, 64));
    cmd_index->add_option("--budget", budget, "reduction step budget");

    CLI::App* cmd_chern = app.add_subcommand("chern", "obstruction via a generic collection");
    add_common(cmd_chern);
    cmd_chern->add_option("--seed", seed, "sampling seed");
    cmd_chern->add_option("--budget", budget, "reduction step budget");

    CLI::App* cmd_conserve =
        app.add_subcommand("conserve", "local index vs deformed global count");
    add_common(cmd_conserve);
    cmd_conserve->add_option("--epsilon", epsilon, "deformation scale, rational p/q");
    cmd_conserve->add_option("--seed", seed, "shift sampling seed");
    cmd_conserve->add_option("--budget", budget, "reduction step budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_validate)) return run_validate(file, json);
        if (app.got_subcommand(cmd_index))
            return run_index(file, json, oracle, max_degree, budget);
        if (app.got_subcommand(cmd_chern)) return run_chern(file, json, seed, budget);
        if (app.got_subcommand(cmd_conserve))
            return run_conserve(file, json, epsilon, seed, budget);
    } catch (const equindex::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const equindex::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const equindex::non_isolated_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const equindex::genericity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const equindex::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const equindex::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
