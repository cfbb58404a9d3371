#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace supell {

// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);

unsigned valuation(const mpz_class& n, const mpz_class& p);  // n != 0

// All positive divisors, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

// r with r^k == n exactly, if it exists (sign handled for odd k).
bool exact_root(const mpz_class& n, unsigned k, mpz_class& r);

mpz_class pow(const mpz_class& b, unsigned long e);

}  // namespace supell
