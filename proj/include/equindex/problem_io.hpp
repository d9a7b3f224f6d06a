#pragma once

// Problem documents (JSON) and the conservation-of-number harness: local
// colength of the assembled ideal versus global colength after a constant
// deformation of its generators.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equindex/equivariant.hpp"
#include "equindex/standard_basis.hpp"

namespace equindex {

using Json = nlohmann::ordered_json;

struct DeformationSpec {
    enum class Mode { CONSTANT_SHIFT, USER };

    Rational epsilon = Rational(1, 7);  // nonzero
    Mode mode = Mode::CONSTANT_SHIFT;
    /// Mode::USER: full replacement generators, in the fixed variables.
    std::vector<Polynomial> user_generators;
    std::uint64_t seed = 0;
    int bound = 97;
};

struct ProblemDocument {
    IndexProblem problem;
    std::optional<DeformationSpec> deformation;
};

/// Builds the problem from a parsed document. Structural defects throw
/// validation_error; polynomial syntax errors throw parse_error.
ProblemDocument document_from_json(const Json& j);

/// Reads and parses `path`. Unreadable file throws io_error; malformed JSON
/// throws parse_error with the byte offset.
ProblemDocument load_document(const std::string& path);

/// Canonical document for the problem (group, variables, equations,
/// profile); document_from_json of the output reproduces the problem.
Json problem_to_json(const IndexProblem& problem);

struct ConservationReport {
    enum class Verdict { CONSERVED, ESCAPED };

    std::int64_t local = 0;
    /// Global colength of the deformed ideal; empty means infinite.
    std::optional<std::int64_t> global_deformed;
    Verdict verdict = Verdict::ESCAPED;
    std::vector<std::string> fixed_variables;
    std::vector<Polynomial> deformed_generators;
    Rational epsilon;
    std::uint64_t seed = 0;
    std::string note;
};

/// Compares the local colength at the origin with the global colength of
/// the deformed generators. CONSERVED when they match; ESCAPED totals are
/// consistent with special points away from the origin or at infinity.
/// Throws non_isolated_error when either colength is infinite.
ConservationReport conserve(const IndexProblem& problem, const DeformationSpec& spec,
                            const BasisOptions& opts = {});

}  // namespace equindex
