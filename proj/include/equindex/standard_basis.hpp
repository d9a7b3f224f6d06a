#pragma once

// Standard bases and colength. Buchberger completion drives an ordinary
// division for the global order and Mora's ecart-driven normal form for the
// local one; the quotient dimension is read off the staircase.

#include <cstdint>
#include <optional>
#include <vector>

#include "equindex/polynomial.hpp"

namespace equindex {

struct BasisOptions {
    /// Hard budget on reduction steps (and processed pairs) per completion.
    std::uint64_t max_steps = 1'000'000;
};

/// A generating set certified for normal-form computation: every
/// S-polynomial of pairs reduces to zero, so the leading terms generate the
/// leading ideal in the chosen localization.
class StandardBasis {
public:
    StandardBasis(std::vector<Polynomial> generators, MonomialOrder order,
                  int num_vars, bool certified)
        : generators_(std::move(generators)), order_(order), nvars_(num_vars),
          certified_(certified) {}

    const std::vector<Polynomial>& generators() const { return generators_; }
    MonomialOrder order() const { return order_; }
    int num_vars() const { return nvars_; }
    bool certified() const { return certified_; }

    /// Antichain of minimal leading exponents, sorted for determinism.
    std::vector<Monomial> minimal_leading_exponents() const;

private:
    std::vector<Polynomial> generators_;
    MonomialOrder order_;
    int nvars_;
    bool certified_;
};

struct Staircase {
    std::vector<Monomial> minimal_exponents;
    /// The monomials outside the leading ideal; nullopt when infinite.
    std::optional<std::vector<Monomial>> standard_monomials;
};

/// Remainder whose leading term is divisible by no basis leading term.
/// For the local order this is Mora's normal form: correctness is modulo a
/// unit multiple of p, which suffices for ideal membership and leading
/// ideals. Terminates unconditionally (ecart argument).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       MonomialOrder order);

/// Buchberger completion with the normal pair-selection strategy (ascending
/// lcm degree, then pair indices) and the product criterion. Deterministic
/// for fixed input order. Throws budget_error past opts.max_steps and
/// validation_error if no nonzero generator remains.
StandardBasis standard_basis(const std::vector<Polynomial>& generators,
                             MonomialOrder order, const BasisOptions& opts = {});

Staircase staircase(const StandardBasis& basis);

/// Number of standard monomials, or nullopt when the staircase misses an
/// axis (infinite colength). Pre: basis certified.
std::optional<std::int64_t> colength(const StandardBasis& basis);

/// standard_basis with the global order, then colength: totals the local
/// multiplicities over all affine points when finite.
std::optional<std::int64_t> global_colength(const std::vector<Polynomial>& generators,
                                            const BasisOptions& opts = {});

/// Re-checks that every pairwise S-polynomial normal-forms to zero.
bool audit_certification(const StandardBasis& basis);

}  // namespace equindex
