#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equindex/errors.hpp"
#include "equindex/polynomial.hpp"
#include "equindex/rational.hpp"
#include "test_support.hpp"

using namespace equindex;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = XY) {
    return Polynomial::parse(text, vars);
}

}  // namespace

TEST_CASE("rational literals") {
    CHECK(rational_from_string("3/6") == Rational(1, 2));
    CHECK(rational_from_string("-2/4") == Rational(-1, 2));
    CHECK(rational_from_string("7") == 7);
    CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rational_from_string("a"), parse_error);
    CHECK_THROWS_AS(rational_from_string(""), parse_error);
    CHECK(to_string(Rational(-3, 9)) == "-1/3");
}

TEST_CASE("parser basics") {
    Polynomial p = P("x^2+y^2");
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 2}) == 1);
    CHECK(p.degree() == 2);

    Polynomial q = P("-3/2*x*y + y^3");
    CHECK(q.term_count() == 2);
    CHECK(q.coefficient({1, 1}) == Rational(-3, 2));
    CHECK(q.coefficient({0, 3}) == 1);

    CHECK(P("x^2 - x^2").is_zero());
    CHECK(P("(x+y)^2") == P("x^2+2*x*y+y^2"));
    CHECK(P("-(x-y)") == P("y-x"));
    CHECK(P("2*-x") == P("-2*x"));
    CHECK(P("1/2*x") * Rational(2) == P("x"));
}

TEST_CASE("parser rejections carry positions") {
    CHECK_THROWS_AS(P("2x"), parse_error);         // implicit multiplication
    CHECK_THROWS_AS(P("x y"), parse_error);
    CHECK_THROWS_AS(P("w+1"), parse_error);        // unknown variable
    CHECK_THROWS_AS(P("x^"), parse_error);
    CHECK_THROWS_AS(P("x^y"), parse_error);
    CHECK_THROWS_AS(P(""), parse_error);
    CHECK_THROWS_AS(P("(x+y"), parse_error);
    CHECK_THROWS_AS(P("x+"), parse_error);
    CHECK_THROWS_AS(P("x^999999"), parse_error);   // exponent cap

    try {
        P("x+*y");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("printing is canonical and parse round-trips") {
    CHECK(P("x^2+y^2").to_string(XY) == "x^2+y^2");
    CHECK(P("y^2+x^2").to_string(XY) == "x^2+y^2");
    CHECK(P("-x").to_string(XY) == "-x");
    CHECK(P("0").to_string(XY) == "0");
    CHECK(P("x*y*2-3").to_string(XY) == "2*x*y-3");

    testsupport::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = testsupport::random_polynomial(rng, 3, 4, 6, 9);
        CHECK(Polynomial::parse(p.to_string(XYZ), XYZ) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = testsupport::random_polynomial(rng, 2, 3, 4, 5);
        Polynomial b = testsupport::random_polynomial(rng, 2, 3, 4, 5);
        Polynomial c = testsupport::random_polynomial(rng, 2, 3, 4, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("derivatives") {
    CHECK(P("x^2+y^2").partial_derivative(0) == P("2*x"));
    CHECK(P("x*y^3").partial_derivative(1) == P("3*x*y^2"));
    CHECK(P("5").partial_derivative(0).is_zero());
    CHECK(P("x^3*y").partial_derivative(0) == P("3*x^2*y"));
}

TEST_CASE("substitution to zero") {
    Polynomial p = Polynomial::parse("x^2+y^2+z^2", XYZ);
    Polynomial restricted = p.substitute_zero({2});
    CHECK(restricted.num_vars() == 2);
    CHECK(restricted == P("x^2+y^2"));

    Polynomial q = Polynomial::parse("x*z+z^3", XYZ);
    CHECK(q.substitute_zero({2}).is_zero());

    Polynomial r = P("x");
    Polynomial kept = r.substitute_zero({1});
    CHECK(kept.num_vars() == 1);
    CHECK(kept == Polynomial::parse("x", {"x"}));
}

TEST_CASE("monomial orders") {
    const Monomial one = {0, 0};
    const Monomial x = {1, 0};
    const Monomial y2 = {0, 2};

    CHECK(monomial_less(one, x, MonomialOrder::GLOBAL_DEGREVLEX));
    CHECK(monomial_less(x, one, MonomialOrder::LOCAL_NEGDEGREVLEX));
    CHECK(monomial_less(x, y2, MonomialOrder::GLOBAL_DEGREVLEX));
    CHECK(monomial_less(y2, x, MonomialOrder::LOCAL_NEGDEGREVLEX));

    // degrevlex tie-break: among equal degrees the one with the smaller
    // trailing exponent is larger.
    CHECK(monomial_less(Monomial{0, 2}, Monomial{2, 0}, MonomialOrder::GLOBAL_DEGREVLEX));
    CHECK(monomial_less(Monomial{0, 2}, Monomial{2, 0}, MonomialOrder::LOCAL_NEGDEGREVLEX));

    testsupport::Rng rng(13);
    for (MonomialOrder order :
         {MonomialOrder::GLOBAL_DEGREVLEX, MonomialOrder::LOCAL_NEGDEGREVLEX}) {
        for (int trial = 0; trial < 200; ++trial) {
            Monomial a = testsupport::random_monomial(rng, 3, 5);
            Monomial b = testsupport::random_monomial(rng, 3, 5);
            Monomial c = testsupport::random_monomial(rng, 3, 5);
            // totality
            int relations = int(monomial_less(a, b, order)) +
                            int(monomial_less(b, a, order)) + int(a == b);
            CHECK(relations == 1);
            // multiplicativity
            if (monomial_less(a, b, order)) {
                CHECK(monomial_less(monomial_mul(c, a), monomial_mul(c, b), order));
            }
        }
    }
}

TEST_CASE("leading terms under both orders") {
    Polynomial p = P("x^2+y^3");
    CHECK(p.leading_term(MonomialOrder::GLOBAL_DEGREVLEX).monomial == Monomial{0, 3});
    CHECK(p.leading_term(MonomialOrder::LOCAL_NEGDEGREVLEX).monomial == Monomial{2, 0});

    Polynomial u = P("1+x");
    CHECK(u.leading_term(MonomialOrder::LOCAL_NEGDEGREVLEX).monomial == Monomial{0, 0});
    CHECK(u.leading_term(MonomialOrder::GLOBAL_DEGREVLEX).monomial == Monomial{1, 0});
}

TEST_CASE("monomial helpers") {
    CHECK(total_degree({2, 3}) == 5);
    CHECK(monomial_mul({1, 0}, {2, 3}) == Monomial{3, 3});
    CHECK(monomial_divides({1, 1}, {2, 1}));
    CHECK(!monomial_divides({1, 2}, {2, 1}));
    CHECK(monomial_quotient({2, 1}, {1, 1}) == Monomial{1, 0});
    CHECK(monomial_lcm({2, 0}, {1, 1}) == Monomial{2, 1});
    CHECK(monomials_coprime({2, 0}, {0, 3}));
    CHECK(!monomials_coprime({1, 1}, {0, 3}));
}

TEST_CASE("determinant worked examples") {
    PolyMatrix m = {{P("2*x"), P("x")}, {P("2*y"), P("-y")}};
    CHECK(determinant(m) == P("-4*x*y"));

    PolyMatrix id = {{P("1"), P("0")}, {P("0"), P("1")}};
    CHECK(determinant(id) == P("1"));

    PolyMatrix dx = {{P("2*x"), P("1")}, {P("2*y"), P("0")}};
    CHECK(determinant(dx) == P("-2*y"));
}

TEST_CASE("determinant matches permutation expansion up to size 4") {
    testsupport::Rng rng(31);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(2)));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    m[i][j] = testsupport::random_polynomial(rng, 2, 2, 3, 3);
                }
            }
            CHECK(determinant(m) == testsupport::permutation_determinant(m));
        }
    }
}
