#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aperylab/rational.hpp"

namespace aperylab {

// binom(n, k) for any integer n and k >= 0, by the falling-product definition
// n(n-1)...(n-k+1)/k!.  Zero when 0 <= n < k.
inline BigInt binomial(long n, long k) {
    if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
    BigInt r;
    BigInt nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (2n-1)!! = 1*3*5*...*(2n-1); empty product for n = 0.
inline BigInt odd_double_factorial(unsigned long n) {
    if (n == 0) return BigInt(1);
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), 2 * n - 1);
    return r;
}

// binom(-1/2, j) = (-1)^j binom(2j, j) / 4^j.  Cached; this shows up in every
// inner loop of the normalized-sequence formulas.
inline const Rational& half_binomial(unsigned long j) {
    static thread_local std::vector<Rational> cache{Rational(1)};
    while (cache.size() <= j) {
        const unsigned long n = cache.size();
        // ratio binom(-1/2,n)/binom(-1/2,n-1) = -(2n-1)/(2n)
        Rational next = cache.back() * make_rational(-(2 * static_cast<long>(n) - 1),
                                                     2 * static_cast<long>(n));
        cache.push_back(next);
    }
    return cache[j];
}

// 1 / binom(-1/2, j)^2 = 16^j / binom(2j, j)^2.
inline const Rational& half_binomial_inv_sq(unsigned long j) {
    static thread_local std::vector<Rational> cache;
    while (cache.size() <= j) {
        const unsigned long n = cache.size();
        const Rational& hb = half_binomial(n);
        cache.push_back(make_rational(hb.get_den() * hb.get_den(), hb.get_num() * hb.get_num()));
    }
    return cache[j];
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> odd_primes_upto(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 3; p <= n; p += 2)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

// (-1|p) = (-1)^((p-1)/2) for an odd prime p.
inline int legendre_minus_one(std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre_minus_one: p must be an odd prime");
    return ((p - 1) / 2) % 2 == 0 ? 1 : -1;
}

// Base-p digits of n, least significant first; empty exactly when n = 0 so
// that digit products over the empty list come out as 1.
inline std::vector<std::uint32_t> p_ary_digits(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p_ary_digits: p must be prime");
    std::vector<std::uint32_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    }
    return digits;
}

}  // namespace aperylab
