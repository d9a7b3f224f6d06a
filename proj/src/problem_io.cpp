#include "equindex/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "equindex/errors.hpp"

namespace equindex {

namespace {

const Json& member(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw validation_error(std::string("document is missing \"") + key + "\"");
    }
    return *it;
}

std::vector<int> int_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw validation_error(what + " must be an array of integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

Character character_from_json(const AbelianGroup& group, const Json& j,
                              const std::string& what) {
    return Character(group, int_array(j, what));
}

}  // namespace

ProblemDocument document_from_json(const Json& j) {
    if (!j.is_object()) throw validation_error("document root must be an object");

    const Json& jgroup = member(j, "group");
    AbelianGroup group(int_array(member(jgroup, "orders"), "group orders"));

    const Json& jvars = member(j, "variables");
    if (!jvars.is_array() || jvars.empty()) {
        throw validation_error("\"variables\" must be a nonempty array");
    }
    std::vector<std::string> names;
    std::vector<Character> weights;
    for (const auto& v : jvars) {
        const Json& jname = member(v, "name");
        if (!jname.is_string()) throw validation_error("variable name must be a string");
        names.push_back(jname.get<std::string>());
        weights.push_back(character_from_json(group, member(v, "weight"),
                                              "weight of " + names.back()));
    }
    DiagonalRepresentation rep(group, std::move(weights), names);
    const int nvars = rep.num_coordinates();

    std::vector<EquivariantFunction> equations;
    if (auto it = j.find("equations"); it != j.end()) {
        if (!it->is_array()) throw validation_error("\"equations\" must be an array");
        for (const auto& e : *it) {
            EquivariantFunction f;
            f.character = character_from_json(group, member(e, "character"),
                                              "equation character");
            const Json& jpoly = member(e, "poly");
            if (!jpoly.is_string()) throw validation_error("equation poly must be a string");
            f.poly = Polynomial::parse(jpoly.get<std::string>(), names);
            equations.push_back(std::move(f));
        }
    }

    KProfile profile;
    std::vector<std::vector<EquivariantOneForm>> forms;
    const Json& jprofile = member(j, "profile");
    if (!jprofile.is_array()) throw validation_error("\"profile\" must be an array");
    for (const auto& p : jprofile) {
        ProfilePair pair;
        pair.character = character_from_json(group, member(p, "character"),
                                             "profile character");
        const Json& jk = member(p, "k");
        if (!jk.is_number_integer()) throw validation_error("profile k must be an integer");
        pair.k = jk.get<int>();

        std::vector<EquivariantOneForm> pair_forms;
        const Json& jforms = member(p, "forms");
        if (!jforms.is_array()) throw validation_error("profile forms must be an array");
        for (const auto& f : jforms) {
            if (!f.is_object()) {
                throw validation_error("a form must be an object of coefficient strings");
            }
            EquivariantOneForm form;
            form.character = pair.character;
            form.coefficients.assign(nvars, Polynomial(nvars));
            for (const auto& [key, value] : f.items()) {
                auto slot = std::find(names.begin(), names.end(), key);
                if (slot == names.end()) {
                    throw validation_error("form names unknown variable \"" + key + "\"");
                }
                if (!value.is_string()) {
                    throw validation_error("coefficient of d" + key + " must be a string");
                }
                form.coefficients[slot - names.begin()] =
                    Polynomial::parse(value.get<std::string>(), names);
            }
            pair_forms.push_back(std::move(form));
        }
        profile.pairs.push_back(pair);
        forms.push_back(std::move(pair_forms));
    }

    ProblemDocument doc{
        IndexProblem{std::move(rep), EquationSystem(std::move(equations)),
                     std::move(profile), std::move(forms)},
        std::nullopt};

    if (auto it = j.find("deformation"); it != j.end()) {
        DeformationSpec spec;
        const Json& jd = *it;
        if (auto eps = jd.find("epsilon"); eps != jd.end()) {
            if (!eps->is_string()) throw validation_error("epsilon must be a string \"p/q\"");
            spec.epsilon = rational_from_string(eps->get<std::string>());
        }
        if (auto mode = jd.find("mode"); mode != jd.end()) {
            const std::string m = mode->get<std::string>();
            if (m == "constant_shift") {
                spec.mode = DeformationSpec::Mode::CONSTANT_SHIFT;
            } else if (m == "user") {
                spec.mode = DeformationSpec::Mode::USER;
            } else {
                throw validation_error("deformation mode must be \"constant_shift\" or \"user\"");
            }
        }
        if (spec.mode == DeformationSpec::Mode::USER) {
            const Json& jgens = member(jd, "generators");
            if (!jgens.is_array()) {
                throw validation_error("deformation generators must be an array of strings");
            }
            std::vector<std::string> fixed = doc.problem.rep.fixed_variable_names();
            for (const auto& g : jgens) {
                if (!g.is_string()) {
                    throw validation_error("deformation generators must be an array of strings");
                }
                spec.user_generators.push_back(Polynomial::parse(g.get<std::string>(), fixed));
            }
        }
        doc.deformation = std::move(spec);
    }
    return doc;
}

ProblemDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw io_error("cannot read " + path);

    Json j;
    try {
        j = Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
    return document_from_json(j);
}

Json problem_to_json(const IndexProblem& problem) {
    const auto& rep = problem.rep;
    const auto& names = rep.coordinate_names();
    Json j;
    j["group"] = Json{{"orders", rep.group().orders()}};
    j["variables"] = Json::array();
    for (int s = 0; s < rep.num_coordinates(); ++s) {
        j["variables"].push_back(
            Json{{"name", names[s]}, {"weight", rep.weights()[s].exponents()}});
    }
    j["equations"] = Json::array();
    for (const auto& eq : problem.equations.equations()) {
        j["equations"].push_back(Json{{"character", eq.character.exponents()},
                                      {"poly", eq.poly.to_string(names)}});
    }
    j["profile"] = Json::array();
    for (std::size_t p = 0; p < problem.profile.pairs.size(); ++p) {
        const ProfilePair& pair = problem.profile.pairs[p];
        Json jforms = Json::array();
        for (const auto& form : problem.forms[p]) {
            Json jform = Json::object();
            for (int s = 0; s < rep.num_coordinates(); ++s) {
                if (!form.coefficients[s].is_zero()) {
                    jform[names[s]] = form.coefficients[s].to_string(names);
                }
            }
            jforms.push_back(std::move(jform));
        }
        j["profile"].push_back(Json{{"character", pair.character.exponents()},
                                    {"k", pair.k},
                                    {"forms", std::move(jforms)}});
    }
    return j;
}

namespace {

/// splitmix64, same stream shape as the generic sampler but an independent
/// consumer; draws nonzero shift constants.
struct ShiftStream {
    std::uint64_t state;

    explicit ShiftStream(std::uint64_t seed) : state(seed) {}

    long next_nonzero(int bound) {
        for (;;) {
            std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            z ^= z >> 31;
            long c = static_cast<long>(z % (2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
            if (c != 0) return c;
        }
    }
};

}  // namespace

ConservationReport conserve(const IndexProblem& problem, const DeformationSpec& spec,
                            const BasisOptions& opts) {
    require_valid(problem);
    if (spec.epsilon == 0) throw validation_error("epsilon must be nonzero");
    if (spec.bound < 1) throw validation_error("shift bound must be positive");

    ConservationReport report;
    report.epsilon = spec.epsilon;
    report.seed = spec.seed;
    report.fixed_variables = problem.rep.fixed_variable_names();

    std::vector<Polynomial> generators = assemble_ideal(problem);
    if (generators.empty()) {
        throw non_isolated_error("assembled ideal is zero; the special locus is not isolated");
    }
    StandardBasis local_basis =
        standard_basis(generators, MonomialOrder::LOCAL_NEGDEGREVLEX, opts);
    std::optional<std::int64_t> local = colength(local_basis);
    if (!local.has_value()) {
        throw non_isolated_error("local colength is infinite; deformation totals undefined");
    }
    report.local = *local;

    const int nvars = static_cast<int>(report.fixed_variables.size());
    switch (spec.mode) {
        case DeformationSpec::Mode::CONSTANT_SHIFT: {
            ShiftStream stream(spec.seed);
            for (const Polynomial& g : generators) {
                Rational shift = spec.epsilon * Rational(stream.next_nonzero(spec.bound));
                report.deformed_generators.push_back(
                    g - Polynomial::constant(nvars, shift));
            }
            break;
        }
        case DeformationSpec::Mode::USER: {
            if (spec.user_generators.empty()) {
                throw validation_error("user deformation needs replacement generators");
            }
            for (const Polynomial& g : spec.user_generators) {
                if (g.num_vars() != nvars) {
                    throw validation_error(
                        "user deformation generators must use the fixed variables");
                }
            }
            report.deformed_generators = spec.user_generators;
            break;
        }
    }

    report.global_deformed = global_colength(report.deformed_generators, opts);
    if (!report.global_deformed.has_value()) {
        throw non_isolated_error("deformed ideal has infinite global colength");
    }
    if (*report.global_deformed == report.local) {
        report.verdict = ConservationReport::Verdict::CONSERVED;
        report.note = "deformed special points account for the full local index";
    } else {
        report.verdict = ConservationReport::Verdict::ESCAPED;
        report.note =
            "totals differ: the deformed collection has special points away from the "
            "origin or at infinity, which local conservation does not count";
    }
    return report;
}

}  // namespace equindex
