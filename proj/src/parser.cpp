// Recursive-descent parser for the polynomial expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' UINT]
//   atom   := RATIONAL | VARIABLE | '(' expr ')'
//   RATIONAL := UINT ['/' UINT]      (no whitespace inside the literal)
//
// Implicit multiplication is rejected: "2x" fails at 'x'.

#include <cctype>
#include <map>

#include "equindex/errors.hpp"
#include "equindex/polynomial.hpp"

namespace equindex {

namespace {

class ExpressionParser {
public:
    ExpressionParser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), nvars_(static_cast<int>(variables.size())) {
        for (std::size_t i = 0; i < variables.size(); ++i)
            index_[variables[i]] = static_cast<int>(i);
    }

    Polynomial run() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                p += term();
            } else if (peek() == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                p *= factor();
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Polynomial base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (!std::isdigit(peek()))
                fail("expected a non-negative integer exponent after '^'");
            std::size_t exp_pos = pos_;
            std::string digits = parse_digits();
            if (digits.size() > 4) fail_at("exponent too large", exp_pos);
            long e = std::stol(digits);
            Polynomial p = Polynomial::constant(nvars_, 1);
            for (long i = 0; i < e; ++i) p *= base;
            return p;
        }
        return base;
    }

    Polynomial atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(c)) {
            Rational num(Integer(parse_digits(), 10));
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(peek()))
                    fail("expected a denominator after '/'");
                std::size_t denom_pos = pos_;
                Integer den(parse_digits(), 10);
                if (den == 0) fail_at("zero denominator", denom_pos);
                num /= Rational(den);
                num.canonicalize();
            }
            return Polynomial::constant(nvars_, num);
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            auto it = index_.find(name);
            if (it == index_.end())
                fail_at("unknown variable '" + name + "'", start);
            return Polynomial::variable(nvars_, it->second);
        }
        if (c == '\0')
            fail("unexpected end of expression");
        fail("unexpected character '" + std::string(1, c) + "'");
        return Polynomial(nvars_);  // unreachable
    }

    std::string parse_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

    [[noreturn]] void fail_at(const std::string& message, std::size_t where) const {
        throw parse_error(message, where);
    }

    const std::string& text_;
    int nvars_;
    std::size_t pos_ = 0;
    std::map<std::string, int> index_;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text,
                             const std::vector<std::string>& variables) {
    return ExpressionParser(text, variables).run();
}

}  // namespace equindex
