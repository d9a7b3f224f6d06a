#include "equindex/standard_basis.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

#include "equindex/errors.hpp"

namespace equindex {

namespace {

struct StepCounter {
    std::uint64_t remaining;

    void charge() {
        if (remaining == 0) throw budget_error("reduction step budget exceeded");
        --remaining;
    }
};

// ecart(f) = deg(f) - deg(LM(f)); for the local order the leading monomial
// has minimal degree, so this measures how far the tail climbs.
int ecart(const Polynomial& p, const Term& lead) {
    return p.degree() - total_degree(lead.monomial);
}

Polynomial make_monic(Polynomial p, MonomialOrder order) {
    Term lt = p.leading_term(order);
    p *= Rational(1) / lt.coefficient;
    return p;
}

// h -= (LC(h)/LC(g)) * x^(LM(h)-LM(g)) * g; cancels the leading term of h.
void reduce_step(Polynomial& h, const Term& lt_h, const Polynomial& g, const Term& lt_g) {
    Monomial q = monomial_quotient(lt_h.monomial, lt_g.monomial);
    Rational c = lt_h.coefficient / lt_g.coefficient;
    h -= Polynomial::from_term(std::move(q), c) * g;
}

Polynomial ordinary_normal_form(Polynomial h, const std::vector<Polynomial>& basis,
                                const std::vector<Term>& leads, MonomialOrder order,
                                StepCounter& steps) {
    while (!h.is_zero()) {
        Term lt_h = h.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!monomial_divides(leads[i].monomial, lt_h.monomial)) continue;
            steps.charge();
            reduce_step(h, lt_h, basis[i], leads[i]);
            reduced = true;
            break;
        }
        if (!reduced) break;
    }
    return h;
}

// Mora's tangent-cone normal form. The reducer set T grows: whenever the
// chosen reducer has strictly larger ecart than the current remainder, the
// remainder itself is stored and becomes available as a reducer. This is
// what makes division terminate for local orders.
Polynomial mora_normal_form(Polynomial h, const std::vector<Polynomial>& basis,
                            const std::vector<Term>& basis_leads, MonomialOrder order,
                            StepCounter& steps) {
    std::vector<const Polynomial*> reducers;
    std::vector<Term> leads;
    std::vector<int> ecarts;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        reducers.push_back(&basis[i]);
        leads.push_back(basis_leads[i]);
        ecarts.push_back(ecart(basis[i], basis_leads[i]));
    }
    std::deque<Polynomial> stored;  // stable addresses for appended remainders

    while (!h.is_zero()) {
        Term lt_h = h.leading_term(order);
        int best = -1;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!monomial_divides(leads[i].monomial, lt_h.monomial)) continue;
            if (best < 0 || ecarts[i] < ecarts[best]) best = static_cast<int>(i);
        }
        if (best < 0) break;
        if (ecarts[best] > ecart(h, lt_h)) {
            stored.push_back(h);
            reducers.push_back(&stored.back());
            leads.push_back(lt_h);
            ecarts.push_back(ecart(stored.back(), lt_h));
        }
        steps.charge();
        reduce_step(h, lt_h, *reducers[best], leads[best]);
    }
    return h;
}

Polynomial normal_form_impl(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const std::vector<Term>& leads, MonomialOrder order,
                            StepCounter& steps) {
    if (order == MonomialOrder::LOCAL_NEGDEGREVLEX)
        return mora_normal_form(p, basis, leads, order, steps);
    return ordinary_normal_form(p, basis, leads, order, steps);
}

Polynomial spoly(const Polynomial& f, const Term& lf, const Polynomial& g,
                 const Term& lg) {
    Monomial l = monomial_lcm(lf.monomial, lg.monomial);
    Polynomial a = Polynomial::from_term(monomial_quotient(l, lf.monomial),
                                         Rational(1) / lf.coefficient) * f;
    Polynomial b = Polynomial::from_term(monomial_quotient(l, lg.monomial),
                                         Rational(1) / lg.coefficient) * g;
    return a - b;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       MonomialOrder order) {
    std::vector<Polynomial> nonzero;
    for (const Polynomial& g : basis)
        if (!g.is_zero()) nonzero.push_back(g);
    std::vector<Term> leads;
    for (const Polynomial& g : nonzero) leads.push_back(g.leading_term(order));
    StepCounter steps{~std::uint64_t{0}};
    return normal_form_impl(p, nonzero, leads, order, steps);
}

StandardBasis standard_basis(const std::vector<Polynomial>& generators,
                             MonomialOrder order, const BasisOptions& opts) {
    std::vector<Polynomial> basis;
    int nvars = -1;
    for (const Polynomial& g : generators) {
        if (nvars < 0)
            nvars = g.num_vars();
        else if (g.num_vars() != nvars)
            throw validation_error("generators live in different rings");
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    }
    if (basis.empty())
        throw validation_error("standard_basis needs at least one nonzero generator");

    std::vector<Term> leads;
    for (const Polynomial& g : basis) leads.push_back(g.leading_term(order));

    StepCounter steps{opts.max_steps};

    // Normal strategy: pairs keyed by (deg lcm, i, j), processed ascending.
    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            int d = total_degree(monomial_lcm(leads[i].monomial, leads[j].monomial));
            pairs.emplace(d, i, j);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        auto [d, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        steps.charge();
        if (monomials_coprime(leads[i].monomial, leads[j].monomial))
            continue;  // product criterion
        Polynomial s = spoly(basis[i], leads[i], basis[j], leads[j]);
        Polynomial h = normal_form_impl(s, basis, leads, order, steps);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(std::move(h), order));
        leads.push_back(basis.back().leading_term(order));
        push_pairs_for(basis.size() - 1);
    }

    return StandardBasis(std::move(basis), order, nvars, true);
}

std::vector<Monomial> StandardBasis::minimal_leading_exponents() const {
    std::vector<Monomial> exps;
    for (const Polynomial& g : generators_)
        exps.push_back(g.leading_term(order_).monomial);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Monomial> minimal;
    for (const Monomial& m : exps) {
        bool redundant = false;
        for (const Monomial& other : exps) {
            if (other != m && monomial_divides(other, m)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

Staircase staircase(const StandardBasis& basis) {
    Staircase s;
    s.minimal_exponents = basis.minimal_leading_exponents();
    int nvars = basis.num_vars();

    // Finite colength iff each axis direction meets a pure-power exponent.
    std::vector<int> bound(nvars, -1);
    for (const Monomial& m : s.minimal_exponents) {
        int nonzero_axis = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i) {
            if (m[i] == 0) continue;
            if (nonzero_axis >= 0) { pure = false; break; }
            nonzero_axis = i;
        }
        if (!pure) continue;
        if (nonzero_axis < 0) {
            // The constant monomial leads: unit ideal, no standard monomials.
            for (int i = 0; i < nvars; ++i) bound[i] = 0;
            s.standard_monomials = std::vector<Monomial>{};
            return s;
        }
        if (bound[nonzero_axis] < 0 || m[nonzero_axis] < bound[nonzero_axis])
            bound[nonzero_axis] = m[nonzero_axis];
    }
    for (int i = 0; i < nvars; ++i) {
        if (bound[i] < 0) return s;  // staircase misses this axis: infinite
    }

    long long box = 1;
    for (int i = 0; i < nvars; ++i) {
        box *= bound[i] == 0 ? 1 : bound[i];
        if (box > 20'000'000LL)
            throw budget_error("staircase enumeration too large");
    }

    std::vector<Monomial> standard;
    Monomial current(nvars, 0);
    auto is_standard = [&](const Monomial& m) {
        for (const Monomial& lead : s.minimal_exponents)
            if (monomial_divides(lead, m)) return false;
        return true;
    };
    // Depth-first over the bounding box.
    std::function<void(int)> walk = [&](int axis) {
        if (axis == nvars) {
            if (is_standard(current)) standard.push_back(current);
            return;
        }
        for (int e = 0; e < std::max(bound[axis], 1); ++e) {
            current[axis] = e;
            walk(axis + 1);
        }
        current[axis] = 0;
    };
    walk(0);
    std::sort(standard.begin(), standard.end());
    s.standard_monomials = std::move(standard);
    return s;
}

std::optional<std::int64_t> colength(const StandardBasis& basis) {
    assert(basis.certified());
    Staircase s = staircase(basis);
    if (!s.standard_monomials) return std::nullopt;
    return static_cast<std::int64_t>(s.standard_monomials->size());
}

std::optional<std::int64_t> global_colength(const std::vector<Polynomial>& generators,
                                            const BasisOptions& opts) {
    return colength(standard_basis(generators, MonomialOrder::GLOBAL_DEGREVLEX, opts));
}

bool audit_certification(const StandardBasis& basis) {
    const std::vector<Polynomial>& gens = basis.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Term li = gens[i].leading_term(basis.order());
            Term lj = gens[j].leading_term(basis.order());
            Polynomial s = spoly(gens[i], li, gens[j], lj);
            if (!normal_form(s, gens, basis.order()).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace equindex
