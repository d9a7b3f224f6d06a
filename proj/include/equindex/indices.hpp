#pragma once

// The headline quantities: the index of a form collection on the germ cut
// out by the equations (colength of the assembled determinantal ideal), its
// smooth-case specialization, and the Chern obstruction as the difference
// against a generic linear collection.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equindex/equivariant.hpp"
#include "equindex/standard_basis.hpp"

namespace equindex {

enum class OracleStatus { SKIPPED, AGREE, DISAGREE, INCONCLUSIVE };

const char* to_string(OracleStatus s);

struct IndexReport {
    std::int64_t value = 0;
    std::vector<std::string> fixed_variables;
    /// Generators of the assembled ideal, in the fixed variables.
    std::vector<Polynomial> ideal_generators;
    /// Minimal staircase corners of the local standard basis.
    std::vector<Monomial> leading_exponents;
    std::int64_t standard_monomial_count = 0;  // always equals value
    OracleStatus oracle = OracleStatus::SKIPPED;
    std::optional<std::int64_t> oracle_value;
};

/// Colength of the assembled ideal under the local order. Throws
/// non_isolated_error when the colength is infinite, budget_error past the
/// step budget, validation_error on invalid input.
IndexReport gsv_index(const IndexProblem& problem, const BasisOptions& opts = {});

/// gsv_index of the same data with an empty equation system.
IndexReport smooth_index(const DiagonalRepresentation& rep, const KProfile& profile,
                         const std::vector<std::vector<EquivariantOneForm>>& forms,
                         const BasisOptions& opts = {});

struct GenericSample {
    std::uint64_t seed = 0;
    int bound = 97;
    /// Parallel to profile.pairs; constant-coefficient equivariant forms.
    std::vector<std::vector<EquivariantOneForm>> forms;
};

/// Deterministic per (input, seed, bound): each form's only nonzero
/// coefficients sit on its pair's weight block and are nonzero-vector
/// constants in [-bound, bound], redrawn whenever a coefficient vector
/// comes out all zero.
GenericSample sample_generic_linear(const DiagonalRepresentation& rep,
                                    const EquationSystem& equations,
                                    const KProfile& profile, std::uint64_t seed,
                                    int bound = 97);

struct ChernReport {
    /// form term minus generic term; may be negative.
    std::int64_t value = 0;
    IndexReport form_term;
    IndexReport generic_term;
    std::uint64_t seed_a = 0;
    std::uint64_t seed_b = 0;
};

/// Difference of gsv_index(problem) and the index of a generic linear
/// collection. Two independent samples (seeds seed, seed + 1) must agree;
/// a sample with infinite index is redrawn up to `max_resamples` times.
/// Throws genericity_error on disagreement or resample exhaustion.
ChernReport chern_obstruction(const IndexProblem& problem, std::uint64_t seed,
                              const BasisOptions& opts = {}, int max_resamples = 8);

}  // namespace equindex
