#pragma once

#include <stdexcept>
#include <vector>

#include "aperylab/arith.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

// The four classical families: A2/B2 prove zeta(2) irrational, A3/B3 zeta(3).
enum class ApFamily { A2, B2, A3, B3 };

inline bool is_zeta2_family(ApFamily f) { return f == ApFamily::A2 || f == ApFamily::B2; }
inline bool is_a_family(ApFamily f) { return f == ApFamily::A2 || f == ApFamily::A3; }

// Direct evaluation of the defining binomial sums.  The B families carry the
// inner harmonic-type sums and are genuinely rational; A values are integers.
inline Rational apery_sum(ApFamily f, long n) {
    if (n < 0) throw std::invalid_argument("apery_sum: n must be >= 0");
    Rational total(0);
    for (long k = 0; k <= n; ++k) {
        const BigInt nk = binomial(n, k);
        const BigInt npk = binomial(n + k, k);
        BigInt weight = nk * nk * npk;            // A2 weight
        if (!is_zeta2_family(f)) weight *= npk;   // A3 squares binom(n+k,k)
        if (is_a_family(f)) {
            total += Rational(weight);
            continue;
        }
        Rational inner(0);
        if (f == ApFamily::B2) {
            for (long m = 1; m <= n; ++m)
                inner += make_rational((m % 2 == 1) ? 2 : -2, m * m);
            for (long m = 1; m <= k; ++m) {
                const long sign = ((n + m - 1) % 2 == 0) ? 1 : -1;
                inner += make_rational(BigInt(sign),
                                       BigInt(m) * m * binomial(n, m) * binomial(n + m, m));
            }
        } else {  // B3
            for (long m = 1; m <= n; ++m)
                inner += make_rational(BigInt(1), BigInt(m) * m * m);
            for (long m = 1; m <= k; ++m) {
                const long sign = (m % 2 == 1) ? 1 : -1;
                inner += make_rational(BigInt(sign),
                                       2 * BigInt(m) * m * m * binomial(n, m) * binomial(n + m, m));
            }
        }
        total += Rational(weight) * inner;
    }
    return total;
}

namespace detail {

// zeta(2) families: n^2 u(n) = (11n^2-11n+3) u(n-1) + (n-1)^2 u(n-2)
// zeta(3) families: n^3 u(n) = (34n^3-51n^2+27n-5) u(n-1) - (n-1)^3 u(n-2)
inline void apery_step_coeffs(bool zeta2, long n, BigInt& lead, BigInt& c1, BigInt& c2) {
    const BigInt nn(n);
    if (zeta2) {
        lead = nn * nn;
        c1 = 11 * nn * nn - 11 * nn + 3;
        c2 = (nn - 1) * (nn - 1);
    } else {
        lead = nn * nn * nn;
        c1 = 34 * nn * nn * nn - 51 * nn * nn + 27 * nn - 5;
        c2 = -(nn - 1) * (nn - 1) * (nn - 1);
    }
}

}  // namespace detail

inline std::pair<long, long> apery_seeds(ApFamily f) {
    switch (f) {
        case ApFamily::A2: return {1, 3};
        case ApFamily::B2: return {0, 5};
        case ApFamily::A3: return {1, 5};
        case ApFamily::B3: return {0, 6};
    }
    throw std::logic_error("apery_seeds: bad family");
}

// Table u(0..n_max) generated by the three-term recurrence, dividing exactly
// by n^2 or n^3 at every step.
inline std::vector<Rational> apery_rec(ApFamily f, long n_max) {
    if (n_max < 1) throw std::invalid_argument("apery_rec: n_max must be >= 1");
    const auto [u0, u1] = apery_seeds(f);
    std::vector<Rational> u;
    u.reserve(n_max + 1);
    u.emplace_back(u0);
    u.emplace_back(u1);
    BigInt lead, c1, c2;
    for (long n = 2; n <= n_max; ++n) {
        detail::apery_step_coeffs(is_zeta2_family(f), n, lead, c1, c2);
        Rational next = (Rational(c1) * u[n - 1] + Rational(c2) * u[n - 2]) / Rational(lead);
        u.push_back(next);
    }
    return u;
}

// Streaming integer recurrence for the A families; keeps only two previous
// values so congruence sweeps can reach indices in the 10^5 range.  Calls
// visit(n, value) for n = 0, 1, ..., n_max in order.
template <class Visitor>
inline void apery_a_stream(ApFamily f, long n_max, Visitor&& visit) {
    if (!is_a_family(f)) throw std::invalid_argument("apery_a_stream: integer families only");
    const bool z2 = is_zeta2_family(f);
    BigInt prev2(1), prev1(z2 ? 3 : 5);
    visit(0L, prev2);
    if (n_max >= 1) visit(1L, prev1);
    BigInt lead, c1, c2, cur;
    for (long n = 2; n <= n_max; ++n) {
        detail::apery_step_coeffs(z2, n, lead, c1, c2);
        cur = c1 * prev1 + c2 * prev2;
        // the quotient must be an integer for the A families; a nonzero
        // remainder means a transcription bug, not a rounding event
        if (!lead.fits_ulong_p()) throw std::overflow_error("apery_a_stream: n_max too large");
        const unsigned long rem =
            mpz_tdiv_q_ui(cur.get_mpz_t(), cur.get_mpz_t(), lead.get_ui());
        if (rem != 0) throw std::logic_error("apery_a_stream: non-exact division");
        visit(n, cur);
        prev2.swap(prev1);
        prev1.swap(cur);
    }
}

}  // namespace aperylab
