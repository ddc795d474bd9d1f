#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace aperylab {

using BigInt = mpz_class;

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: denominator > 0 and gcd(|num|, den) = 1 after every operation.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline const BigInt& numerator(const Rational& q) { return q.get_num(); }
inline const BigInt& denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Always "num/den", even for integers, so serialized values are identical
// across platforms and library versions.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt pow2(unsigned long e) { return pow_ui(BigInt(2), e); }

// base^e for any integer exponent; e < 0 requires base != 0.
inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_int: 0 to negative power");
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt num = pow_ui(base.get_num(), a);
    BigInt den = pow_ui(base.get_den(), a);
    return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

}  // namespace aperylab
