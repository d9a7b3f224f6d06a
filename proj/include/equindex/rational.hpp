#pragma once

#include <gmpxx.h>

#include <string>

#include "equindex/errors.hpp"

namespace equindex {

/// Exact arbitrary-precision rational, the coefficient field everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with optional leading '-'. The result is canonical
/// (reduced, positive denominator). Throws parse_error on malformed input
/// or a zero denominator.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational literal", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok)
            throw parse_error("malformed rational literal '" + text + "'", i);
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw parse_error("malformed rational literal '" + text + "'", 0);
    if (q.get_den() == 0)
        throw parse_error("zero denominator in '" + text + "'", 0);
    q.canonicalize();
    return q;
}

/// Canonical "p" or "p/q" text; tolerates values built with the raw
/// two-argument mpq constructor, which does not reduce.
inline std::string to_string(const Rational& q) {
    Rational canonical = q;
    canonical.canonicalize();
    return canonical.get_str();
}

}  // namespace equindex
