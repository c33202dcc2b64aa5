#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace avalanche {

// Exact arbitrary-precision integer. All counting in this library is exact;
// no floating point is used anywhere in the core.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// base^exp where a negative exponent is only meaningful for base 1
// (Cayley-style counts such as m^{m-2} evaluate to 1 at m = 1).
inline BigInt pow_or_one(long base, long exp) {
    if (exp < 0) {
        if (base != 1) throw std::invalid_argument("negative exponent requires base 1");
        return 1;
    }
    return big_pow(BigInt(base), static_cast<unsigned long>(exp));
}

// Exact quotient; throws if b does not divide a.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("non-exact integer division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace avalanche
