#include "equindex/equivariant.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>

#include "equindex/errors.hpp"

namespace equindex {

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
    return Polynomial::from_term(m, Rational(1)).to_string(names);
}

}  // namespace

int EquationSystem::ell(const Character& alpha) const {
    int count = 0;
    for (const auto& eq : equations_) {
        if (eq.character == alpha) ++count;
    }
    return count;
}

std::vector<const EquivariantFunction*> EquationSystem::with_character(const Character& alpha) const {
    std::vector<const EquivariantFunction*> out;
    for (const auto& eq : equations_) {
        if (eq.character == alpha) out.push_back(&eq);
    }
    return out;
}

int IndexProblem::n(const Character& alpha) const {
    return rep.multiplicity(alpha) - equations.ell(alpha);
}

int IndexProblem::n_fixed() const {
    return n(Character::trivial(rep.group()));
}

int IndexProblem::forms_required(std::size_t pair_index) const {
    const ProfilePair& pair = profile.pairs.at(pair_index);
    return n(pair.character) - pair.k + 1;
}

ValidationReport validate(const IndexProblem& problem) {
    ValidationReport report;
    const DiagonalRepresentation& rep = problem.rep;
    const AbelianGroup& group = rep.group();
    const Character trivial = Character::trivial(group);
    const int nvars = rep.num_coordinates();
    const auto& names = rep.coordinate_names();
    auto complain = [&](const std::string& msg) { report.violations.push_back(msg); };
    auto matches_group = [&](const Character& c) { return c.same_group(trivial); };

    // Equations: arity, germ condition, equivariance, fixed-block vanishing.
    int eq_no = 0;
    for (const auto& eq : problem.equations.equations()) {
        ++eq_no;
        const std::string label = "equation " + std::to_string(eq_no);
        if (!matches_group(eq.character)) {
            complain(label + ": character does not match the group");
            continue;
        }
        if (eq.poly.num_vars() != nvars) {
            complain(label + ": polynomial has " + std::to_string(eq.poly.num_vars()) +
                     " variables, expected " + std::to_string(nvars));
            continue;
        }
        if (eq.poly.is_zero()) {
            complain(label + ": zero polynomial is not a valid equation");
            continue;
        }
        if (eq.poly.coefficient(Monomial(nvars, 0)) != 0) {
            complain(label + ": does not vanish at the origin");
        }
        for (const auto& [mono, coeff] : eq.poly.terms()) {
            (void)coeff;
            Character got = char_of_monomial(rep, mono);
            if (!(got == eq.character)) {
                complain(label + ": monomial " + monomial_text(mono, names) +
                         " has character " + got.to_string() + ", declared " +
                         eq.character.to_string());
            }
        }
        if (!eq.character.is_trivial()) {
            // Equivariance forces vanishing on the fixed block; verified anyway.
            if (!restrict_to_fixed(rep, eq.poly).is_zero()) {
                complain(label + ": nontrivial character but nonzero restriction to the fixed block");
            }
        }
    }

    // Count constraints.
    int total_ell = static_cast<int>(problem.equations.equations().size());
    if (total_ell > nvars) {
        complain("equation count " + std::to_string(total_ell) +
                 " exceeds the ambient dimension " + std::to_string(nvars));
    }
    for (const Character& alpha : rep.characters_present()) {
        int ell = problem.equations.ell(alpha);
        if (ell > rep.multiplicity(alpha)) {
            complain("character " + alpha.to_string() + ": " + std::to_string(ell) +
                     " equations but only " + std::to_string(rep.multiplicity(alpha)) +
                     " coordinates of that weight");
        }
    }
    for (const auto& eq : problem.equations.equations()) {
        if (matches_group(eq.character) && rep.multiplicity(eq.character) == 0) {
            complain("equation of character " + eq.character.to_string() +
                     " but no coordinate has that weight");
            break;
        }
    }

    // Profile constraints.
    if (problem.forms.size() != problem.profile.pairs.size()) {
        complain("profile has " + std::to_string(problem.profile.pairs.size()) +
                 " pairs but " + std::to_string(problem.forms.size()) +
                 " form collections");
    }
    int k_total = 0;
    for (std::size_t p = 0; p < problem.profile.pairs.size(); ++p) {
        const ProfilePair& pair = problem.profile.pairs[p];
        const std::string label = "pair " + std::to_string(p + 1);
        if (!matches_group(pair.character)) {
            complain(label + ": character does not match the group");
            continue;
        }
        k_total += pair.k;
        if (pair.k < 1) {
            complain(label + ": k must be positive");
            continue;
        }
        int n_alpha = problem.n(pair.character);
        if (pair.k > n_alpha) {
            complain(label + ": k = " + std::to_string(pair.k) + " exceeds n = " +
                     std::to_string(n_alpha) + " for character " + pair.character.to_string());
            continue;
        }
        int required = n_alpha - pair.k + 1;
        if (p >= problem.forms.size()) continue;
        const auto& forms = problem.forms[p];
        if (static_cast<int>(forms.size()) != required) {
            complain(label + ": has " + std::to_string(forms.size()) + " forms, requires " +
                     std::to_string(required));
        }
        int form_no = 0;
        for (const auto& form : forms) {
            ++form_no;
            const std::string flabel = label + ", form " + std::to_string(form_no);
            if (!(form.character == pair.character)) {
                complain(flabel + ": character " + form.character.to_string() +
                         " does not match the pair's " + pair.character.to_string());
                continue;
            }
            if (static_cast<int>(form.coefficients.size()) != nvars) {
                complain(flabel + ": " + std::to_string(form.coefficients.size()) +
                         " coefficients, expected " + std::to_string(nvars));
                continue;
            }
            for (int s = 0; s < nvars; ++s) {
                const Polynomial& a = form.coefficients[s];
                if (a.num_vars() != nvars) {
                    complain(flabel + ": coefficient of d" + names[s] +
                             " has the wrong variable count");
                    continue;
                }
                for (const auto& [mono, coeff] : a.terms()) {
                    (void)coeff;
                    Character got = char_add(char_of_monomial(rep, mono), rep.weights()[s]);
                    if (!(got == form.character)) {
                        complain(flabel + ": coefficient of d" + names[s] + ", monomial " +
                                 monomial_text(mono, names) + " gives character " +
                                 got.to_string() + ", needs " + form.character.to_string());
                    }
                }
            }
        }
    }
    int n_fixed = problem.n_fixed();
    if (k_total != n_fixed) {
        complain("profile k values sum to " + std::to_string(k_total) +
                 ", must equal " + std::to_string(n_fixed));
    }

    // Informational: nontrivial-character equations never enter the ideal
    // unless some pair carries their character.
    for (const auto& eq : problem.equations.equations()) {
        if (eq.character.is_trivial() || !matches_group(eq.character)) continue;
        bool used = false;
        for (const auto& pair : problem.profile.pairs) {
            if (pair.character == eq.character) { used = true; break; }
        }
        if (!used) {
            report.notes.push_back("equation of character " + eq.character.to_string() +
                                   " has no profile pair and contributes no generators");
        }
    }
    return report;
}

void require_valid(const IndexProblem& problem) {
    ValidationReport report = validate(problem);
    if (report.valid()) return;
    std::ostringstream msg;
    msg << "invalid problem:";
    for (const auto& v : report.violations) msg << "\n  " << v;
    throw validation_error(msg.str());
}

Polynomial restrict_to_fixed(const DiagonalRepresentation& rep, const Polynomial& p) {
    return p.substitute_zero(rep.nontrivial_block());
}

namespace {

PolyMatrix build_matrix(const IndexProblem& problem, std::size_t pair_index) {
    const DiagonalRepresentation& rep = problem.rep;
    const ProfilePair& pair = problem.profile.pairs.at(pair_index);
    const std::vector<int> rows = rep.block(pair.character);
    const auto eqs = problem.equations.with_character(pair.character);
    const auto& forms = problem.forms.at(pair_index);

    PolyMatrix matrix(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int s = rows[r];
        auto& out = matrix[r];
        out.reserve(eqs.size() + forms.size());
        for (const auto* eq : eqs) {
            out.push_back(restrict_to_fixed(rep, eq->poly.partial_derivative(s)));
        }
        for (const auto& form : forms) {
            out.push_back(restrict_to_fixed(rep, form.coefficients[s]));
        }
    }
    return matrix;
}

/// Row subsets of size `take` from `total` rows, lexicographic order.
void for_each_subset(int total, int take, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset(take);
    std::function<void(int, int)> walk = [&](int pos, int start) {
        if (pos == take) {
            fn(subset);
            return;
        }
        for (int r = start; r <= total - (take - pos); ++r) {
            subset[pos] = r;
            walk(pos + 1, r + 1);
        }
    };
    walk(0, 0);
}

}  // namespace

PolyMatrix schur_matrix(const IndexProblem& problem, std::size_t pair_index) {
    require_valid(problem);
    return build_matrix(problem, pair_index);
}

std::vector<Polynomial> assemble_ideal(const IndexProblem& problem) {
    require_valid(problem);
    const DiagonalRepresentation& rep = problem.rep;
    const Character trivial = Character::trivial(rep.group());

    std::vector<Polynomial> generators;
    auto push = [&](const Polynomial& g) {
        if (g.is_zero()) return;
        Polynomial neg = g * Rational(-1);
        for (const auto& seen : generators) {
            if (seen == g || seen == neg) return;
        }
        generators.push_back(g);
    };

    for (const auto* eq : problem.equations.with_character(trivial)) {
        push(restrict_to_fixed(rep, eq->poly));
    }
    for (std::size_t p = 0; p < problem.profile.pairs.size(); ++p) {
        PolyMatrix matrix = build_matrix(problem, p);
        const int total = static_cast<int>(matrix.size());
        const int take = total == 0 ? 0 : static_cast<int>(matrix[0].size());
        if (take == 0 || take > total) continue;
        for_each_subset(total, take, [&](const std::vector<int>& rows) {
            PolyMatrix sub;
            sub.reserve(rows.size());
            for (int r : rows) sub.push_back(matrix[r]);
            push(determinant(sub));
        });
    }
    return generators;
}

}  // namespace equindex
