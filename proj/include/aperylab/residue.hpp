#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "aperylab/arith.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

// Modular inverse for a coprime to m (extended Euclid).
inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        const std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod_u64: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// p^r, rejecting anything that does not comfortably fit in 63 bits.
inline std::uint64_t prime_power_u64(std::uint64_t p, unsigned r) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (m > (std::uint64_t{1} << 62) / p)
            throw std::overflow_error("prime_power_u64: modulus exceeds 2^62");
        m *= p;
    }
    return m;
}

}  // namespace detail

// An element of Z / p^r Z with its modulus carried along.
struct ResidueClass {
    std::uint64_t value = 0;
    std::uint64_t prime = 3;
    unsigned exponent = 1;
    std::uint64_t modulus = 3;

    ResidueClass() = default;
    ResidueClass(std::uint64_t v, std::uint64_t p, unsigned r)
        : prime(p), exponent(r), modulus(detail::prime_power_u64(p, r)) {
        if (p == 2 || !is_prime(p))
            throw std::invalid_argument("ResidueClass: modulus base must be an odd prime");
        if (r < 1) throw std::invalid_argument("ResidueClass: exponent must be >= 1");
        value = v % modulus;
    }

    bool operator==(const ResidueClass&) const = default;

    ResidueClass with_value(std::uint64_t v) const {
        ResidueClass r = *this;
        r.value = v % modulus;
        return r;
    }
};

inline ResidueClass operator+(const ResidueClass& a, const ResidueClass& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("ResidueClass: modulus mismatch");
    return a.with_value((a.value + b.value) % a.modulus);
}

inline ResidueClass operator*(const ResidueClass& a, const ResidueClass& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("ResidueClass: modulus mismatch");
    return a.with_value(detail::mulmod_u64(a.value, b.value, a.modulus));
}

// x mod p^r for p-integral x; nullopt when p divides the (reduced) denominator,
// i.e. the congruence statement simply does not apply to this value.
inline std::optional<ResidueClass> reduce_mod(const Rational& x, std::uint64_t p, unsigned r) {
    ResidueClass out(0, p, r);  // validates p, r
    const std::uint64_t m = out.modulus;
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) return std::nullopt;
    const std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), m);
    const std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), m);
    out.value = detail::mulmod_u64(num, detail::invmod_u64(den, m), m);
    return out;
}

// Same, for integers (always defined).
inline ResidueClass reduce_mod(const BigInt& x, std::uint64_t p, unsigned r) {
    ResidueClass out(0, p, r);
    out.value = mpz_fdiv_ui(x.get_mpz_t(), out.modulus);
    return out;
}

}  // namespace aperylab
