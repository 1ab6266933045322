#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace superroot {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp for a non-negative exponent.
Integer ipow(const Integer& base, std::uint64_t exp);

/// Residue of `a` modulo `m > 0`, always in [0, m).
Integer floor_mod(const Integer& a, const Integer& m);

/// Exact floor division by a positive divisor.
Integer floor_div(const Integer& a, const Integer& m);

bool is_prime(std::int64_t n);

/// Binomial coefficient binom(n, k) for any integer `n` (the polynomial
/// n(n-1)...(n-k+1)/k!), zero for k < 0.
Integer binomial(const Integer& n, std::int64_t k);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Parses "a" or "a/b" (decimal, optional sign). Throws ParameterError.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

}  // namespace superroot
