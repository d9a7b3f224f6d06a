#pragma once

// Finite abelian groups as products of cyclic groups, their characters, and
// diagonal representations on coordinates. Roots of unity are never
// materialized: equivariance is decided by exact congruences of weight
// exponents.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "equindex/polynomial.hpp"

namespace equindex {

/// Product of cyclic groups Z/d1 x ... x Z/dr. Zero factors is the trivial
/// group, which makes the non-equivariant theory a special case with no
/// extra code paths.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int> orders);  // each order >= 2

    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& orders() const { return orders_; }
    std::int64_t cardinality() const;
    bool is_trivial() const { return orders_.empty(); }

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<int> orders_;
};

/// An element of Hom(H, C*), encoded by its exponent tuple with respect to
/// the generators of the cyclic factors: 0 <= c_i < d_i componentwise.
/// Carries the group's orders so mismatched arithmetic is detectable.
class Character {
public:
    Character() = default;  // trivial character of the trivial group
    Character(const AbelianGroup& group, std::vector<int> exponents);
    static Character trivial(const AbelianGroup& group);

    const std::vector<int>& exponents() const { return exponents_; }
    const std::vector<int>& orders() const { return orders_; }
    bool is_trivial() const;
    bool same_group(const Character& other) const { return orders_ == other.orders_; }

    bool operator==(const Character&) const = default;
    auto operator<=>(const Character&) const = default;

    std::string to_string() const;

private:
    std::vector<int> orders_;
    std::vector<int> exponents_;
};

/// Componentwise sum mod orders. Throws validation_error on group mismatch.
Character char_add(const Character& a, const Character& b);

/// e * a for an integer exponent e (e may be any integer; reduced mod orders).
Character char_scale(const Character& a, long e);

/// A finite abelian group acting diagonally on coordinates: one character
/// weight per ambient coordinate.
class DiagonalRepresentation {
public:
    DiagonalRepresentation(AbelianGroup group, std::vector<Character> weights,
                           std::vector<std::string> coordinate_names);

    const AbelianGroup& group() const { return group_; }
    int num_coordinates() const { return static_cast<int>(weights_.size()); }
    const std::vector<Character>& weights() const { return weights_; }
    const std::vector<std::string>& coordinate_names() const { return names_; }

    /// m_alpha: how many coordinates carry weight alpha.
    int multiplicity(const Character& alpha) const;

    /// Coordinates of weight alpha, in declaration order.
    std::vector<int> block(const Character& alpha) const;

    /// Distinct weights present, trivial character first, then ascending.
    std::vector<Character> characters_present() const;

    std::vector<int> nontrivial_block() const;
    std::vector<std::string> fixed_variable_names() const;

    bool operator==(const DiagonalRepresentation&) const = default;

private:
    AbelianGroup group_;
    std::vector<Character> weights_;
    std::vector<std::string> names_;
};

/// Indices of all coordinates with trivial weight, in declaration order.
std::vector<int> fixed_block(const DiagonalRepresentation& rep);

/// Character of a monomial under the diagonal action: the weight-sum
/// sum_s e_s * w_s over the coordinates. Throws on length mismatch.
Character char_of_monomial(const DiagonalRepresentation& rep, const Monomial& m);

}  // namespace equindex
