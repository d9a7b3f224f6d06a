#pragma once

// Brute-force local colength by truncation linear algebra, independent of
// the standard-basis engine. For each degree bound D the quotient by
// I + m^D has dimension q_D = #monomials(< D) - rank of the truncated
// multiples; q_D = q_{D+1} certifies m^D lies in I, so q_D is the germ-ring
// colength. Exact rational elimination throughout.

#include <cstdint>
#include <optional>
#include <vector>

#include "equindex/equivariant.hpp"
#include "equindex/polynomial.hpp"

namespace equindex {

struct MacaulayOptions {
    int max_degree = 12;
};

struct MacaulayResult {
    /// Empty means not stabilized within the degree bound.
    std::optional<std::int64_t> colength;
    /// q_D for D = 2, 3, ... in computation order.
    std::vector<std::int64_t> q_values;
    /// The D with q_D = q_{D+1}, or -1.
    int stabilized_at = -1;
};

MacaulayResult macaulay_colength(const std::vector<Polynomial>& generators,
                                 const MacaulayOptions& options = {});

/// dim_Q of R / (I + m^degree_bound), the single truncation step behind
/// macaulay_colength. Throws validation_error on empty input or a bound
/// below 1.
std::int64_t truncated_quotient_dimension(const std::vector<Polynomial>& generators,
                                          int degree_bound);

enum class CrossCheckVerdict { AGREE, DISAGREE, ORACLE_INCONCLUSIVE };

const char* to_string(CrossCheckVerdict v);

struct CrossCheckReport {
    CrossCheckVerdict verdict = CrossCheckVerdict::ORACLE_INCONCLUSIVE;
    /// Standard-basis colength; empty means infinite.
    std::optional<std::int64_t> primary;
    /// Oracle colength; empty means not stabilized.
    std::optional<std::int64_t> oracle;
    std::vector<std::int64_t> q_values;
};

/// Runs both engines on the assembled ideal of `problem`. AGREE and DISAGREE
/// require a finite oracle value; an unstabilized oracle is inconclusive
/// regardless of the primary result.
CrossCheckReport cross_check(const IndexProblem& problem,
                             const MacaulayOptions& options = {});

}  // namespace equindex
