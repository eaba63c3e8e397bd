#pragma once

#include <gmpxx.h>

#include <string>

#include "symchar/errors.hpp"

namespace symchar {

/// Arbitrary-precision signed integer. Everything in this library is exact;
/// there is no floating point anywhere.
using BigInt = mpz_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Exact quotient num/den. A nonzero remainder (or zero divisor) throws
/// IntegralityError rather than truncating; `context` names the computation
/// for the diagnostic.
inline BigInt checked_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0 || mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw IntegralityError(std::string(context) + ": " + num.get_str() +
                               " is not divisible by " + den.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace symchar
