#include "equindex/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "equindex/errors.hpp"

namespace equindex {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    assert(monomial_divides(a, b));
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool monomials_coprime(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {

// Reverse-lexicographic tie break shared by both orders: among monomials of
// equal total degree, a < b iff the last index where they differ has
// a[i] > b[i].
int revlex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    assert(a.size() == b.size());
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) {
        if (order == MonomialOrder::GLOBAL_DEGREVLEX) return da < db;
        return da > db;  // local: smaller degree is larger
    }
    return revlex_cmp(a, b) < 0;
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
    assert(index >= 0 && index < num_vars);
    Monomial m(num_vars, 0);
    m[index] = 1;
    return from_term(std::move(m), Rational(1));
}

Polynomial Polynomial::from_term(Monomial m, const Rational& c) {
    Polynomial p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Term Polynomial::leading_term(MonomialOrder order) const {
    assert(!terms_.empty());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (monomial_less(best->first, it->first, order)) best = it;
    }
    return {best->first, best->second};
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    assert(static_cast<int>(m.size()) == nvars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    assert(nvars_ == other.nvars_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    assert(nvars_ == other.nvars_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    assert(nvars_ == other.nvars_);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            r.add_term(monomial_mul(ma, mb), ca * cb);
    *this = std::move(r);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::partial_derivative(int coordinate) const {
    assert(coordinate >= 0 && coordinate < nvars_);
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[coordinate] == 0) continue;
        Monomial d = m;
        d[coordinate] -= 1;
        r.add_term(d, c * m[coordinate]);
    }
    return r;
}

Polynomial Polynomial::substitute_zero(const std::vector<int>& coordinates) const {
    std::vector<bool> dropped(nvars_, false);
    for (int i : coordinates) {
        assert(i >= 0 && i < nvars_);
        dropped[i] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < nvars_; ++i)
        if (!dropped[i]) keep.push_back(i);

    Polynomial r(static_cast<int>(keep.size()));
    for (const auto& [m, c] : terms_) {
        bool kill = false;
        for (int i : coordinates)
            if (m[i] > 0) { kill = true; break; }
        if (kill) continue;
        Monomial reduced(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) reduced[j] = m[keep[j]];
        r.add_term(reduced, c);
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& variables) const {
    assert(static_cast<int>(variables.size()) == nvars_);
    if (terms_.empty()) return "0";

    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
        return monomial_less(b->first, a->first, MonomialOrder::GLOBAL_DEGREVLEX);
    });

    std::ostringstream out;
    bool first = true;
    for (const auto* t : sorted) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? "-" : "+");
        }
        first = false;
        Rational a = negative ? Rational(-c) : c;

        std::vector<std::string> factors;
        if (a != 1 || total_degree(m) == 0) factors.push_back(a.get_str());
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (m[i] == 1)
                factors.push_back(variables[i]);
            else
                factors.push_back(variables[i] + "^" + std::to_string(m[i]));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

Polynomial determinant(const PolyMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m) {
        assert(row.size() == n);
        (void)row;
    }
    if (n == 0) return Polynomial::constant(0, 1);
    int nvars = m[0][0].num_vars();
    if (n == 1) return m[0][0];

    // Laplace expansion along the first column; exact and small enough for
    // the minor sizes that occur here.
    Polynomial det(nvars);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        PolyMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Polynomial contrib = m[i][0] * determinant(sub);
        if (i % 2 == 1) contrib = -contrib;
        det += contrib;
    }
    return det;
}

}  // namespace equindex
