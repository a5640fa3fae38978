#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weylhodge {

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form; throws InvalidArgument when den == 0.
Rat make_rat(long num, long den = 1);
Rat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const Rat& x);
std::string to_string(const BigInt& x);

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt factorial(unsigned long n);

/// Converts to int64, throwing ResourceLimit when the value does not fit.
std::int64_t to_int64(const BigInt& x);

} // namespace weylhodge
