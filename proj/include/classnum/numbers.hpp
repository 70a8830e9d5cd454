#ifndef CLASSNUM_NUMBERS_HPP
#define CLASSNUM_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace classnum {

// Arbitrary-precision integers and rationals. Rationals are kept in lowest
// terms with positive denominator (mpq_class canonicalizes on arithmetic).
using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);

/// Euler totient. Requires n >= 1.
Integer euler_phi(const Integer& n);

/// Moebius function. Requires n >= 1.
int moebius(const Integer& n);

/// All positive divisors of n, ascending. Requires n >= 1.
std::vector<Integer> divisors(const Integer& n);

Integer factorial(unsigned long n);

/// Binomial coefficient C(d, k). Rejects k > d.
Integer binomial(unsigned long d, unsigned long k);

/// Gaussian binomial [d choose k]_q: number of k-subspaces of a
/// d-dimensional space over the q-element field. Requires q >= 2, k <= d.
Integer gaussian_binomial(unsigned long d, unsigned long k, const Integer& q);

Integer int_pow(const Integer& base, unsigned long exp);

/// Floor of the k-th root. Requires x >= 0, k >= 1.
Integer iroot(const Integer& x, unsigned long k);

bool is_prime_power(unsigned long q);
bool is_prime_power(unsigned long q, unsigned long& prime, unsigned long& exponent);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace classnum

#endif
