#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "equindex/errors.hpp"
#include "equindex/indices.hpp"
#include "test_support.hpp"

using namespace equindex;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

EquivariantOneForm form_from_map(const DiagonalRepresentation& rep, const Character& chi,
                                 const std::vector<std::pair<int, std::string>>& entries) {
    EquivariantOneForm form;
    form.character = chi;
    form.coefficients.assign(rep.num_coordinates(), Polynomial(rep.num_coordinates()));
    for (const auto& [s, text] : entries) {
        form.coefficients[s] = Polynomial::parse(text, rep.coordinate_names());
    }
    return form;
}

DiagonalRepresentation plane_rep() {
    return DiagonalRepresentation(AbelianGroup{}, {Character{}, Character{}}, XY);
}

IndexProblem node_problem(const std::vector<std::pair<int, std::string>>& form_entries) {
    DiagonalRepresentation rep = plane_rep();
    return IndexProblem{rep,
                        EquationSystem({{Character{}, Polynomial::parse("x^2+y^2", XY)}}),
                        KProfile{{{Character{}, 1}}},
                        {{form_from_map(rep, Character{}, form_entries)}}};
}

DiagonalRepresentation involution_rep() {
    AbelianGroup g({2});
    return DiagonalRepresentation(
        g, {Character::trivial(g), Character::trivial(g), Character(g, {1})}, XYZ);
}

IndexProblem involution_sphere(bool sign_pair) {
    DiagonalRepresentation rep = involution_rep();
    Character triv = Character::trivial(rep.group());
    Character sign(rep.group(), {1});
    EquationSystem eqs({{triv, Polynomial::parse("x^2+y^2+z^2", XYZ)}});
    if (sign_pair) {
        return IndexProblem{rep, eqs, KProfile{{{sign, 1}}},
                            {{form_from_map(rep, sign, {{2, "x"}})}}};
    }
    return IndexProblem{rep, eqs, KProfile{{{triv, 1}}},
                        {{form_from_map(rep, triv, {{0, "x"}, {1, "-y"}})}}};
}

}  // namespace

TEST_CASE("node indices") {
    SUBCASE("dx on the node") {
        IndexReport r = gsv_index(node_problem({{0, "1"}}));
        CHECK(r.value == 2);
    }
    SUBCASE("x dx - y dy on the node") {
        IndexReport r = gsv_index(node_problem({{0, "x"}, {1, "-y"}}));
        CHECK(r.value == 4);
    }
    SUBCASE("constant section") {
        IndexReport r = gsv_index(node_problem({{0, "3"}, {1, "-2"}}));
        CHECK(r.value == 2);
    }
}

TEST_CASE("involution sphere indices") {
    CHECK(gsv_index(involution_sphere(true)).value == 2);
    CHECK(gsv_index(involution_sphere(false)).value == 4);
}

TEST_CASE("report invariants") {
    IndexReport r = gsv_index(node_problem({{0, "x"}, {1, "-y"}}));
    CHECK(r.value == r.standard_monomial_count);
    CHECK(r.fixed_variables == XY);
    REQUIRE(r.ideal_generators.size() == 2);
    CHECK(r.ideal_generators[0] == Polynomial::parse("x^2+y^2", XY));
    CHECK(r.ideal_generators[1] == Polynomial::parse("-4*x*y", XY));
    CHECK(!r.leading_exponents.empty());
    CHECK(r.oracle == OracleStatus::SKIPPED);
    CHECK(!r.oracle_value.has_value());

    IndexReport s = gsv_index(involution_sphere(true));
    CHECK(s.fixed_variables == XY);
}

TEST_CASE("degenerate collection is rejected") {
    // omega = df: the determinant vanishes identically, leaving only the
    // curve equation, whose colength is infinite.
    CHECK_THROWS_AS(gsv_index(node_problem({{0, "2*x"}, {1, "2*y"}})), non_isolated_error);
}

TEST_CASE("smooth one-variable indices") {
    DiagonalRepresentation rep(AbelianGroup{}, {Character{}}, {"x"});
    KProfile profile{{{Character{}, 1}}};
    for (int m = 1; m <= 5; ++m) {
        std::string text = m == 1 ? "x" : "x^" + std::to_string(m);
        auto forms = std::vector<std::vector<EquivariantOneForm>>{
            {form_from_map(rep, Character{}, {{0, text}})}};
        CHECK(smooth_index(rep, profile, forms).value == m);
    }
}

TEST_CASE("smooth index with a character shift") {
    // Z/2 on (x, y), weights (0, 1); omega = x dy has character (1).
    AbelianGroup g({2});
    DiagonalRepresentation rep(g, {Character::trivial(g), Character(g, {1})}, XY);
    Character sign(g, {1});
    KProfile profile{{{sign, 1}}};
    auto forms = std::vector<std::vector<EquivariantOneForm>>{
        {form_from_map(rep, sign, {{1, "x"}})}};
    CHECK(smooth_index(rep, profile, forms).value == 1);
}

TEST_CASE("smooth index equals gsv index without equations") {
    DiagonalRepresentation rep = plane_rep();
    KProfile profile{{{Character{}, 2}}};
    auto forms = std::vector<std::vector<EquivariantOneForm>>{
        {form_from_map(rep, Character{}, {{0, "x^2"}, {1, "y"}})}};
    IndexReport via_smooth = smooth_index(rep, profile, forms);
    IndexReport via_gsv = gsv_index(IndexProblem{rep, EquationSystem{}, profile, forms});
    CHECK(via_smooth.value == 2);
    CHECK(via_smooth.value == via_gsv.value);
    CHECK(via_smooth.ideal_generators == via_gsv.ideal_generators);
    CHECK(via_smooth.leading_exponents == via_gsv.leading_exponents);
}

TEST_CASE("generic sampler") {
    IndexProblem p = involution_sphere(true);
    GenericSample sample = sample_generic_linear(p.rep, p.equations, p.profile, 7);

    SUBCASE("shape and support") {
        REQUIRE(sample.forms.size() == 1);
        REQUIRE(sample.forms[0].size() == 1);
        const EquivariantOneForm& form = sample.forms[0][0];
        CHECK(form.character == p.profile.pairs[0].character);
        REQUIRE(form.coefficients.size() == 3);
        // Support confined to the weight block {z}; entries are constants.
        CHECK(form.coefficients[0].is_zero());
        CHECK(form.coefficients[1].is_zero());
        CHECK(!form.coefficients[2].is_zero());
        for (const auto& [mono, coeff] : form.coefficients[2].terms()) {
            (void)coeff;
            CHECK(total_degree(mono) == 0);
        }
    }
    SUBCASE("bound respected and nonzero") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            GenericSample s = sample_generic_linear(p.rep, p.equations, p.profile, seed, 5);
            bool some_nonzero = false;
            for (const auto& form : s.forms[0]) {
                for (const auto& c : form.coefficients) {
                    if (c.is_zero()) continue;
                    some_nonzero = true;
                    Rational v = c.coefficient(Monomial(3, 0));
                    CHECK(v != 0);
                    CHECK(v.get_den() == 1);
                    CHECK(v.get_num() <= 5);
                    CHECK(v.get_num() >= -5);
                }
            }
            CHECK(some_nonzero);
        }
    }
    SUBCASE("deterministic in the seed") {
        GenericSample a = sample_generic_linear(p.rep, p.equations, p.profile, 11);
        GenericSample b = sample_generic_linear(p.rep, p.equations, p.profile, 11);
        CHECK(a.forms == b.forms);
        GenericSample c = sample_generic_linear(p.rep, p.equations, p.profile, 12);
        CHECK(a.forms != c.forms);
    }
    SUBCASE("sampled problem validates") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            IndexProblem q = p;
            q.forms = sample_generic_linear(p.rep, p.equations, p.profile, seed).forms;
            CHECK(validate(q).valid());
        }
    }
}

TEST_CASE("sampler covers multi-pair profiles") {
    DiagonalRepresentation rep = plane_rep();
    KProfile profile{{{Character{}, 1}, {Character{}, 1}}};
    GenericSample s = sample_generic_linear(rep, EquationSystem{}, profile, 3);
    REQUIRE(s.forms.size() == 2);
    CHECK(s.forms[0].size() == 2);
    CHECK(s.forms[1].size() == 2);
    IndexProblem q{rep, EquationSystem{}, profile, s.forms};
    CHECK(validate(q).valid());
}

TEST_CASE("chern obstruction on the node") {
    IndexProblem p = involution_sphere(false);
    // The trivial pair of the sphere is the node with x dx - y dy.
    std::set<std::int64_t> values;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ChernReport r = chern_obstruction(p, seed);
        values.insert(r.value);
        CHECK(r.value == r.form_term.value - r.generic_term.value);
        CHECK(r.form_term.value == 4);
        CHECK(r.seed_b > r.seed_a);
        CHECK(r.seed_a % 2 == seed % 2);
    }
    CHECK(values == std::set<std::int64_t>{2});
}

TEST_CASE("chern obstruction of a constant section vanishes") {
    ChernReport r = chern_obstruction(node_problem({{0, "3"}, {1, "-2"}}), 1);
    CHECK(r.value == 0);
    CHECK(r.form_term.value == 2);
    CHECK(r.generic_term.value == 2);
}

TEST_CASE("chern obstruction equals the index on smooth germs") {
    // A generic constant form never vanishes near the origin, so its index
    // is 0 and the obstruction of x^m dx is the full m.
    DiagonalRepresentation rep(AbelianGroup{}, {Character{}}, {"x"});
    KProfile profile{{{Character{}, 1}}};
    for (int m : {1, 3, 5}) {
        std::string text = m == 1 ? "x" : "x^" + std::to_string(m);
        IndexProblem p{rep, EquationSystem{}, profile,
                       {{form_from_map(rep, Character{}, {{0, text}})}}};
        ChernReport r = chern_obstruction(p, 2);
        CHECK(r.value == m);
        CHECK(r.generic_term.value == 0);
    }
}

TEST_CASE("chern obstruction respects the sign pair") {
    ChernReport r = chern_obstruction(involution_sphere(true), 1);
    CHECK(r.form_term.value == 2);
    CHECK(r.value == r.form_term.value - r.generic_term.value);
}

TEST_CASE("oracle status strings") {
    CHECK(std::string(to_string(OracleStatus::SKIPPED)) == "SKIPPED");
    CHECK(std::string(to_string(OracleStatus::AGREE)) == "AGREE");
    CHECK(std::string(to_string(OracleStatus::DISAGREE)) == "DISAGREE");
    CHECK(std::string(to_string(OracleStatus::INCONCLUSIVE)) == "INCONCLUSIVE");
}

TEST_CASE("index is stable under form scaling and reordering") {
    testsupport::Rng rng(5);
    for (int scenario = 0; scenario < 6; ++scenario) {
        IndexProblem p = testsupport::random_problem(rng, scenario, 3);
        std::int64_t base;
        try {
            base = gsv_index(p).value;
        } catch (const non_isolated_error&) {
            continue;  // a degenerate draw carries no invariant to compare
        }
        IndexProblem scaled = p;
        for (auto& pair_forms : scaled.forms) {
            for (auto& form : pair_forms) {
                for (auto& c : form.coefficients) c = c * Rational(3, 5);
            }
        }
        CHECK(gsv_index(scaled).value == base);

        IndexProblem reversed = p;
        for (auto& pair_forms : reversed.forms) {
            std::reverse(pair_forms.begin(), pair_forms.end());
        }
        CHECK(gsv_index(reversed).value == base);
    }
}
