#include "equindex/macaulay.hpp"

#include <algorithm>
#include <cstddef>
#include <map>

#include "equindex/errors.hpp"
#include "equindex/standard_basis.hpp"

namespace equindex {

namespace {

/// All monomials of total degree < bound, ascending degrevlex.
std::vector<Monomial> monomials_below(int nvars, int bound) {
    std::vector<Monomial> out;
    Monomial current(nvars, 0);
    auto walk = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == nvars) {
            out.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[axis] = e;
            self(self, axis + 1, remaining - e);
        }
        current[axis] = 0;
    };
    walk(walk, 0, bound - 1);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return monomial_less(a, b, MonomialOrder::GLOBAL_DEGREVLEX);
    });
    return out;
}

/// Incremental row-echelon rank over Q. Rows are dense over a fixed column
/// basis; inserted rows are reduced against the stored pivots.
class RowReducer {
public:
    explicit RowReducer(std::size_t width) : width_(width) {}

    void insert(std::vector<Rational> row) {
        for (;;) {
            std::size_t lead = first_nonzero(row);
            if (lead == width_) return;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                Rational inv = 1 / row[lead];
                for (std::size_t c = lead; c < width_; ++c) row[c] *= inv;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            const std::vector<Rational>& pivot = it->second;
            Rational factor = row[lead];
            for (std::size_t c = lead; c < width_; ++c) row[c] -= factor * pivot[c];
        }
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    std::size_t first_nonzero(const std::vector<Rational>& row) const {
        for (std::size_t c = 0; c < width_; ++c) {
            if (row[c] != 0) return c;
        }
        return width_;
    }

    std::size_t width_;
    std::map<std::size_t, std::vector<Rational>> pivots_;
};

std::int64_t quotient_dimension(const std::vector<Polynomial>& generators,
                                int nvars, int bound) {
    std::vector<Monomial> basis = monomials_below(nvars, bound);
    std::map<Monomial, std::size_t> column;
    for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(basis[c], c);

    RowReducer reducer(basis.size());
    for (const Polynomial& g : generators) {
        for (const Monomial& m : basis) {
            std::vector<Rational> row(basis.size(), Rational(0));
            bool nonzero = false;
            for (const auto& [mono, coeff] : g.terms()) {
                Monomial shifted = monomial_mul(mono, m);
                if (total_degree(shifted) >= bound) continue;
                row[column.at(shifted)] += coeff;
                nonzero = true;
            }
            if (nonzero) reducer.insert(std::move(row));
        }
    }
    return static_cast<std::int64_t>(basis.size()) -
           static_cast<std::int64_t>(reducer.rank());
}

}  // namespace

std::int64_t truncated_quotient_dimension(const std::vector<Polynomial>& generators,
                                          int degree_bound) {
    if (generators.empty()) {
        throw validation_error("truncated quotient needs at least one generator");
    }
    if (degree_bound < 1) {
        throw validation_error("truncation degree must be at least 1");
    }
    return quotient_dimension(generators, generators.front().num_vars(), degree_bound);
}

MacaulayResult macaulay_colength(const std::vector<Polynomial>& generators,
                                 const MacaulayOptions& options) {
    MacaulayResult result;
    if (generators.empty()) return result;
    const int nvars = generators.front().num_vars();
    if (nvars < 1 || options.max_degree < 2) return result;

    std::int64_t previous = -1;
    for (int d = 2; d <= options.max_degree + 1; ++d) {
        std::int64_t q = quotient_dimension(generators, nvars, d);
        result.q_values.push_back(q);
        if (previous >= 0 && q == previous) {
            result.colength = previous;
            result.stabilized_at = d - 1;
            return result;
        }
        previous = q;
    }
    return result;
}

const char* to_string(CrossCheckVerdict v) {
    switch (v) {
        case CrossCheckVerdict::AGREE: return "AGREE";
        case CrossCheckVerdict::DISAGREE: return "DISAGREE";
        case CrossCheckVerdict::ORACLE_INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

CrossCheckReport cross_check(const IndexProblem& problem,
                             const MacaulayOptions& options) {
    CrossCheckReport report;
    std::vector<Polynomial> generators = assemble_ideal(problem);
    const int nvars = problem.rep.multiplicity(Character::trivial(problem.rep.group()));

    if (generators.empty()) {
        // Zero ideal: the quotient is the whole germ ring.
        if (nvars == 0) report.primary = 1;
    } else {
        StandardBasis basis = standard_basis(generators, MonomialOrder::LOCAL_NEGDEGREVLEX);
        report.primary = colength(basis);
    }

    MacaulayResult oracle = macaulay_colength(generators, options);
    report.oracle = oracle.colength;
    report.q_values = oracle.q_values;

    if (!report.oracle.has_value()) {
        report.verdict = CrossCheckVerdict::ORACLE_INCONCLUSIVE;
    } else if (report.primary.has_value() && *report.primary == *report.oracle) {
        report.verdict = CrossCheckVerdict::AGREE;
    } else {
        report.verdict = CrossCheckVerdict::DISAGREE;
    }
    return report;
}

}  // namespace equindex
