#include "equindex/group.hpp"

#include <algorithm>
#include <sstream>

#include "equindex/errors.hpp"

namespace equindex {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    for (int d : orders_)
        if (d < 2)
            throw validation_error("cyclic factor order must be >= 2, got " +
                                   std::to_string(d));
}

std::int64_t AbelianGroup::cardinality() const {
    std::int64_t n = 1;
    for (int d : orders_) n *= d;
    return n;
}

Character::Character(const AbelianGroup& group, std::vector<int> exponents)
    : orders_(group.orders()), exponents_(std::move(exponents)) {
    if (exponents_.size() != orders_.size())
        throw validation_error("character has " + std::to_string(exponents_.size()) +
                               " exponents for a group of rank " +
                               std::to_string(orders_.size()));
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] < 0 || exponents_[i] >= orders_[i])
            throw validation_error("character exponent " + std::to_string(exponents_[i]) +
                                   " out of range for order " +
                                   std::to_string(orders_[i]));
}

Character Character::trivial(const AbelianGroup& group) {
    return Character(group, std::vector<int>(group.rank(), 0));
}

bool Character::is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](int c) { return c == 0; });
}

std::string Character::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) out << ",";
        out << exponents_[i];
    }
    out << ")";
    return out.str();
}

Character char_add(const Character& a, const Character& b) {
    if (!a.same_group(b))
        throw validation_error("character group mismatch: " + a.to_string() +
                               " vs " + b.to_string());
    AbelianGroup group(a.orders());
    std::vector<int> sum(a.exponents());
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = (sum[i] + b.exponents()[i]) % a.orders()[i];
    return Character(group, std::move(sum));
}

Character char_scale(const Character& a, long e) {
    AbelianGroup group(a.orders());
    std::vector<int> scaled(a.exponents());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        long d = a.orders()[i];
        long v = (static_cast<long>(scaled[i]) * e) % d;
        scaled[i] = static_cast<int>(v < 0 ? v + d : v);
    }
    return Character(group, std::move(scaled));
}

DiagonalRepresentation::DiagonalRepresentation(AbelianGroup group,
                                               std::vector<Character> weights,
                                               std::vector<std::string> names)
    : group_(std::move(group)), weights_(std::move(weights)), names_(std::move(names)) {
    if (weights_.empty())
        throw validation_error("a representation needs at least one coordinate");
    if (names_.size() != weights_.size())
        throw validation_error("coordinate name count does not match weight count");
    Character probe = Character::trivial(group_);
    for (const Character& w : weights_)
        if (!w.same_group(probe))
            throw validation_error("weight " + w.to_string() +
                                   " does not belong to the declared group");
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw validation_error("coordinate names must be distinct");
}

int DiagonalRepresentation::multiplicity(const Character& alpha) const {
    return static_cast<int>(std::count(weights_.begin(), weights_.end(), alpha));
}

std::vector<int> DiagonalRepresentation::block(const Character& alpha) const {
    std::vector<int> indices;
    for (int i = 0; i < num_coordinates(); ++i)
        if (weights_[i] == alpha) indices.push_back(i);
    return indices;
}

std::vector<Character> DiagonalRepresentation::characters_present() const {
    std::vector<Character> present;
    for (const Character& w : weights_)
        if (std::find(present.begin(), present.end(), w) == present.end())
            present.push_back(w);
    std::sort(present.begin(), present.end());
    // The fixed block comes first in the canonical ordering.
    Character triv = Character::trivial(group_);
    auto it = std::find(present.begin(), present.end(), triv);
    if (it != present.end()) std::rotate(present.begin(), it, it + 1);
    return present;
}

std::vector<int> DiagonalRepresentation::nontrivial_block() const {
    std::vector<int> indices;
    for (int i = 0; i < num_coordinates(); ++i)
        if (!weights_[i].is_trivial()) indices.push_back(i);
    return indices;
}

std::vector<std::string> DiagonalRepresentation::fixed_variable_names() const {
    std::vector<std::string> names;
    for (int i : fixed_block(*this)) names.push_back(names_[i]);
    return names;
}

std::vector<int> fixed_block(const DiagonalRepresentation& rep) {
    std::vector<int> indices;
    for (int i = 0; i < rep.num_coordinates(); ++i)
        if (rep.weights()[i].is_trivial()) indices.push_back(i);
    return indices;
}

Character char_of_monomial(const DiagonalRepresentation& rep, const Monomial& m) {
    if (static_cast<int>(m.size()) != rep.num_coordinates())
        throw validation_error("monomial has " + std::to_string(m.size()) +
                               " exponents but the representation has " +
                               std::to_string(rep.num_coordinates()) + " coordinates");
    Character acc = Character::trivial(rep.group());
    for (std::size_t s = 0; s < m.size(); ++s) {
        if (m[s] == 0) continue;
        acc = char_add(acc, char_scale(rep.weights()[s], m[s]));
    }
    return acc;
}

}  // namespace equindex
