#pragma once

// Equivariant input data (equation systems, k-profiles, form collections),
// their validation, the per-pair Schur-component matrices, and the assembly
// of the determinantal ideal in the fixed variables.

#include <cstddef>
#include <string>
#include <vector>

#include "equindex/group.hpp"
#include "equindex/polynomial.hpp"

namespace equindex {

/// A germ f with f(gx) = alpha(g) f(x): every monomial of `poly` has
/// character `character` under the representation.
struct EquivariantFunction {
    Character character;
    Polynomial poly;  // in the N ambient variables

    bool operator==(const EquivariantFunction&) const = default;
};

/// A 1-form omega = sum_s a_s dx_s with values in E_alpha: every monomial m
/// of a_s satisfies char(m) + w_s = character.
struct EquivariantOneForm {
    Character character;
    std::vector<Polynomial> coefficients;  // length N

    bool operator==(const EquivariantOneForm&) const = default;
};

class EquationSystem {
public:
    EquationSystem() = default;
    explicit EquationSystem(std::vector<EquivariantFunction> equations)
        : equations_(std::move(equations)) {}

    const std::vector<EquivariantFunction>& equations() const { return equations_; }
    bool empty() const { return equations_.empty(); }

    /// ell_alpha: number of equations with declared character alpha.
    int ell(const Character& alpha) const;

    /// Equations of character alpha, declaration order.
    std::vector<const EquivariantFunction*> with_character(const Character& alpha) const;

    bool operator==(const EquationSystem&) const = default;

private:
    std::vector<EquivariantFunction> equations_;
};

struct ProfilePair {
    Character character;
    int k = 1;  // positive

    bool operator==(const ProfilePair&) const = default;
};

/// The data {k_{alpha,i}} with sum k = n_1; pair (alpha,i) carries
/// n_alpha - k + 1 forms.
struct KProfile {
    std::vector<ProfilePair> pairs;

    bool operator==(const KProfile&) const = default;
};

/// The complete input of an index computation.
struct IndexProblem {
    DiagonalRepresentation rep;
    EquationSystem equations;
    KProfile profile;
    /// forms[p] are the forms of profile.pairs[p], in order j = 1, 2, ...
    std::vector<std::vector<EquivariantOneForm>> forms;

    /// n_alpha = m_alpha - ell_alpha.
    int n(const Character& alpha) const;
    /// n_1 = m_1 - ell_1, the dimension of the germ all indices live on.
    int n_fixed() const;
    /// Number of forms pair p must carry: n_alpha - k + 1.
    int forms_required(std::size_t pair_index) const;

    bool operator==(const IndexProblem&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    bool valid() const { return violations.empty(); }
};

/// Checks every equivariance invariant, count constraint, and profile
/// constraint; violations carry the offending monomial or coordinate.
ValidationReport validate(const IndexProblem& problem);

/// Throws validation_error listing the first violations if invalid.
void require_valid(const IndexProblem& problem);

/// The m_alpha x (m_alpha - k + 1) matrix of pair `pair_index`, with entries
/// restricted to the fixed subspace and re-expressed in the fixed variables.
/// Columns t < ell_alpha hold the partials d f_{alpha,t} / d x_{alpha,s};
/// the remaining columns hold the form coefficients on the weight-alpha
/// coordinates.
PolyMatrix schur_matrix(const IndexProblem& problem, std::size_t pair_index);

/// Restrictions of the trivial-character equations to the fixed block plus
/// all maximal minors of every pair's matrix (row subsets in lexicographic
/// order); zero generators dropped, sign-normalized duplicates removed.
std::vector<Polynomial> assemble_ideal(const IndexProblem& problem);

/// Projects an ambient polynomial supported on the fixed coordinates down to
/// the m_1 fixed variables.
Polynomial restrict_to_fixed(const DiagonalRepresentation& rep, const Polynomial& p);

}  // namespace equindex
