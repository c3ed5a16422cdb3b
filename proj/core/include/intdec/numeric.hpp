// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace intdec {

/// Arbitrary-precision integer used for every coefficient and constant.
using Integer = mpz_class;
/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Largest integer not greater than q.
Integer floor(const Rational& q);

/// q - floor(q), which always lies in [0,1).
Rational fractional_part(const Rational& q);

/// Floor division for integers (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Parses "7", "-3", "3/2" or "-3/2"; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace intdec
