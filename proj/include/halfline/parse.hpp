#pragma once
#include <cctype>
#include <string>
#include <vector>

#include "unipoly.hpp"

// Parsers for command-line input: a minimal polynomial expression grammar
// (integers, one named variable, + - * ^, parentheses, and multiplication by
// juxtaposition, so "-4(1+2n)" works), plus comma-separated lists of
// integers, rationals, and polynomials.
namespace halfline {

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& src, const std::string& var) : src_(src), var_(var) {}

    UniPoly run() {
        UniPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) err("unexpected trailing input");
        return p;
    }

private:
    const std::string& src_;
    const std::string& var_;
    std::size_t pos_ = 0;

    [[noreturn]] void err(const std::string& what) {
        fail("ParseError", what + " at position " + std::to_string(pos_) + " in \"" + src_ + "\"");
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    UniPoly expr() {
        UniPoly acc = term();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                UniPoly t = term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    UniPoly term() {
        UniPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom(c)) { // juxtaposition: 2n, 4(1+2n), n(n+1)
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    UniPoly factor() {
        bool neg = false;
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            if (c == '-') neg = !neg;
            ++pos_;
        }
        UniPoly b = base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ == start) err("exponent must be a nonnegative integer");
            if (pos_ - start > 2) err("exponent too large");
            long long e = std::stoll(src_.substr(start, pos_ - start));
            UniPoly powed(1);
            for (long long i = 0; i < e; ++i) powed = powed * b;
            b = powed;
        }
        return neg ? -b : b;
    }

    UniPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            UniPoly inner = expr();
            if (peek() != ')') err("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            return UniPoly(Rational(BigInt(src_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            if (name != var_) {
                pos_ = start;
                err("unknown variable \"" + name + "\" (expected \"" + var_ + "\")");
            }
            return UniPoly::var();
        }
        err(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c +
                                                        "'");
    }
};

// Split on commas that sit outside parentheses, trimming the pieces.
inline std::vector<std::string> split_top_level(const std::string& s) {
    auto trimmed = [](const std::string& part) {
        std::size_t lo = part.find_first_not_of(" \t");
        if (lo == std::string::npos) return std::string();
        std::size_t hi = part.find_last_not_of(" \t");
        return part.substr(lo, hi - lo + 1);
    };
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trimmed(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trimmed(cur));
    return parts;
}

} // namespace detail

inline UniPoly parse_poly(const std::string& s, const std::string& var = "n") {
    return detail::PolyParser(s, var).run();
}

inline std::vector<UniPoly> parse_poly_list(const std::string& s, const std::string& var = "n") {
    std::vector<UniPoly> out;
    for (const std::string& part : detail::split_top_level(s)) out.push_back(parse_poly(part, var));
    return out;
}

// parse_rational itself lives next to Rational; the list form splits on
// top-level commas so entries read uniformly with the polynomial lists.
inline std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const std::string& part : detail::split_top_level(s)) out.push_back(parse_rational(part));
    return out;
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const Rational& r : parse_rational_list(s)) {
        if (r.den() != 1) fail("ParseError", "expected an integer, got " + r.str());
        out.push_back(static_cast<int>(r.num()));
    }
    return out;
}

inline long long parse_index(const std::string& s) {
    Rational r = parse_rational(s);
    if (r.den() != 1) fail("ParseError", "expected an integer, got " + r.str());
    return static_cast<long long>(r.num());
}

inline std::vector<long long> parse_index_list(const std::string& s) {
    std::vector<long long> out;
    for (const std::string& part : detail::split_top_level(s)) out.push_back(parse_index(part));
    return out;
}

} // namespace halfline
