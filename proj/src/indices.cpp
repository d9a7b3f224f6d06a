#include "equindex/indices.hpp"

#include <sstream>
#include <utility>

#include "equindex/errors.hpp"

namespace equindex {

const char* to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::SKIPPED: return "SKIPPED";
        case OracleStatus::AGREE: return "AGREE";
        case OracleStatus::DISAGREE: return "DISAGREE";
        case OracleStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "SKIPPED";
}

IndexReport gsv_index(const IndexProblem& problem, const BasisOptions& opts) {
    require_valid(problem);
    IndexReport report;
    report.fixed_variables = problem.rep.fixed_variable_names();
    report.ideal_generators = assemble_ideal(problem);

    if (report.ideal_generators.empty()) {
        if (!report.fixed_variables.empty()) {
            throw non_isolated_error("assembled ideal is zero; the special locus is not isolated");
        }
        // Zero fixed variables: the germ ring is the ground field.
        report.value = 1;
        report.standard_monomial_count = 1;
        return report;
    }

    StandardBasis basis =
        standard_basis(report.ideal_generators, MonomialOrder::LOCAL_NEGDEGREVLEX, opts);
    Staircase stairs = staircase(basis);
    report.leading_exponents = stairs.minimal_exponents;
    if (!stairs.standard_monomials.has_value()) {
        throw non_isolated_error(
            "ideal colength is infinite; the collection has a non-isolated special point");
    }
    report.standard_monomial_count =
        static_cast<std::int64_t>(stairs.standard_monomials->size());
    report.value = report.standard_monomial_count;
    return report;
}

IndexReport smooth_index(const DiagonalRepresentation& rep, const KProfile& profile,
                         const std::vector<std::vector<EquivariantOneForm>>& forms,
                         const BasisOptions& opts) {
    IndexProblem problem{rep, EquationSystem{}, profile, forms};
    return gsv_index(problem, opts);
}

namespace {

/// splitmix64; chosen over std::mt19937 distributions, whose mapping to a
/// range is implementation-defined.
struct SeededStream {
    std::uint64_t state;

    explicit SeededStream(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Integer in [-bound, bound].
    long draw(int bound) {
        std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(next() % span) - bound;
    }
};

}  // namespace

GenericSample sample_generic_linear(const DiagonalRepresentation& rep,
                                    const EquationSystem& equations,
                                    const KProfile& profile, std::uint64_t seed,
                                    int bound) {
    if (bound < 1) throw validation_error("coefficient bound must be positive");
    GenericSample sample;
    sample.seed = seed;
    sample.bound = bound;
    SeededStream stream(seed);
    const int nvars = rep.num_coordinates();

    for (const ProfilePair& pair : profile.pairs) {
        const std::vector<int> block = rep.block(pair.character);
        if (block.empty()) {
            throw validation_error("profile pair character has no coordinates of its weight");
        }
        const int n_alpha = rep.multiplicity(pair.character) - equations.ell(pair.character);
        const int count = n_alpha - pair.k + 1;
        std::vector<EquivariantOneForm> pair_forms;
        pair_forms.reserve(count > 0 ? count : 0);
        for (int j = 0; j < count; ++j) {
            EquivariantOneForm form;
            form.character = pair.character;
            form.coefficients.assign(nvars, Polynomial(nvars));
            bool all_zero = true;
            while (all_zero) {
                for (int s : block) {
                    long c = stream.draw(bound);
                    form.coefficients[s] = Polynomial::constant(nvars, Rational(c));
                    if (c != 0) all_zero = false;
                }
            }
            pair_forms.push_back(std::move(form));
        }
        sample.forms.push_back(std::move(pair_forms));
    }
    return sample;
}

namespace {

/// Index of `problem` with its forms replaced by a fresh sample; redraws on
/// an infinite index, stepping the seed by 2 to keep the two Chern sample
/// streams disjoint.
IndexReport generic_index(const IndexProblem& problem, std::uint64_t seed,
                          const BasisOptions& opts, int max_resamples,
                          std::uint64_t& seed_used) {
    std::uint64_t s = seed;
    for (int attempt = 0;; ++attempt) {
        GenericSample sample = sample_generic_linear(problem.rep, problem.equations,
                                                     problem.profile, s, 97);
        IndexProblem candidate{problem.rep, problem.equations, problem.profile,
                               sample.forms};
        try {
            IndexReport report = gsv_index(candidate, opts);
            seed_used = s;
            return report;
        } catch (const non_isolated_error&) {
            if (attempt + 1 >= max_resamples) {
                std::ostringstream msg;
                msg << "no generic linear sample with finite index after "
                    << max_resamples << " draws (last seed " << s << ")";
                throw genericity_error(msg.str());
            }
            s += 2;
        }
    }
}

}  // namespace

ChernReport chern_obstruction(const IndexProblem& problem, std::uint64_t seed,
                              const BasisOptions& opts, int max_resamples) {
    require_valid(problem);
    ChernReport report;
    report.form_term = gsv_index(problem, opts);

    IndexReport sample_a =
        generic_index(problem, seed, opts, max_resamples, report.seed_a);
    IndexReport sample_b =
        generic_index(problem, seed + 1, opts, max_resamples, report.seed_b);
    if (sample_a.value != sample_b.value) {
        std::ostringstream msg;
        msg << "generic samples disagree: seed " << report.seed_a << " gives "
            << sample_a.value << ", seed " << report.seed_b << " gives "
            << sample_b.value;
        throw genericity_error(msg.str());
    }
    report.generic_term = std::move(sample_a);
    report.value = report.form_term.value - report.generic_term.value;
    return report;
}

}  // namespace equindex
