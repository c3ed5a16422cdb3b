// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/numeric.hpp"

#include <cctype>

#include "intdec/error.hpp"

namespace intdec {

Integer floor(const Rational& q) {
    Integer result;
    mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return result;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

Integer floor_div(const Integer& a, const Integer& b) {
    Integer result;
    mpz_fdiv_q(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer result;
    mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer result;
    mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    Integer d = integer_from(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational q(integer_from(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace intdec
