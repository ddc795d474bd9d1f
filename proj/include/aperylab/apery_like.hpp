#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "aperylab/arith.hpp"
#include "aperylab/numeric.hpp"
#include "aperylab/rational.hpp"
#include "aperylab/series_ops.hpp"
#include "aperylab/zeta_ring.hpp"

namespace aperylab {

// How a table of J_k values was produced.  The three routes are independent
// and their exact agreement is one of the main verification targets.
enum class JProvenance { ClosedForm, Recurrence, Inductive };

struct JTable {
    int k = 2;
    JProvenance provenance = JProvenance::Recurrence;
    std::vector<ZetaCombination> values;  // index n = 0..n_max

    const ZetaCombination& at(long n) const { return values.at(n); }
    long n_max() const { return static_cast<long>(values.size()) - 1; }
};

// The weight-1 convention J_1(n) = 2^n (n-1)! / (2n-1)!!, defined for n >= 1.
// It is exactly the inhomogeneous term of the weight-3 recurrence, which
// makes the three-term ladder uniform in k.  J_1(0) is deliberately absent.
inline Rational j1_rational(long n) {
    if (n < 1) throw std::domain_error("j1_rational: defined for n >= 1 only");
    return make_rational(pow2(n) * factorial(n - 1), odd_double_factorial(n));
}

// J_2(n) = zeta(2,1/2) * sum_j (-1)^j binom(-1/2,j)^2 binom(n,j)
inline ZetaCombination j2(long n) {
    if (n < 0) throw std::invalid_argument("j2: n must be >= 0");
    Rational c(0);
    for (long j = 0; j <= n; ++j) {
        Rational t = half_binomial(j) * half_binomial(j) * Rational(binomial(n, j));
        c += (j % 2 == 0) ? t : -t;
    }
    return ZetaCombination::hurwitz_half(2, c);
}

// J_3(n) = zeta(3,1/2) * sum_j (-1)^j binom(-1/2,j)^2 binom(n,j)
//          - 2 sum_j (-1)^j binom(-1/2,j)^2 binom(n,j)
//              * sum_{m<j} (2m+1)^-3 binom(-1/2,m)^-2
inline ZetaCombination j3(long n) {
    if (n < 0) throw std::invalid_argument("j3: n must be >= 0");
    Rational zc(0), unit(0), harmonic(0);
    for (long j = 0; j <= n; ++j) {
        Rational t = half_binomial(j) * half_binomial(j) * Rational(binomial(n, j));
        if (j % 2 == 1) t = -t;
        zc += t;
        unit += t * harmonic;  // harmonic = sum over m = 0..j-1 so far
        harmonic += half_binomial_inv_sq(j) / Rational(BigInt(2 * j + 1) * (2 * j + 1) * (2 * j + 1));
    }
    ZetaCombination out = ZetaCombination::hurwitz_half(3, zc);
    out.add_term(ZetaCombination::kUnit, Rational(-2) * unit);
    return out;
}

// (J_k(0), J_k(1)) for k >= 2:
//   J_k(0) = zeta(k, 1/2)
//   J_k(1) = 3/4 sum_{m=0}^{floor(k/2)-1} 4^-m zeta(k-2m, 1/2) + (1-(-1)^k)/2^(k-1)
inline std::pair<ZetaCombination, ZetaCombination> jk_initial(int k) {
    if (k < 2) throw std::invalid_argument("jk_initial: k must be >= 2");
    ZetaCombination j0 = ZetaCombination::hurwitz_half(k);
    ZetaCombination j1;
    Rational w = make_rational(3, 4);
    for (int m = 0; m <= k / 2 - 1; ++m) {
        j1.add_term(k - 2 * m, w);
        w /= 4;
    }
    if (k % 2 == 1) j1.add_term(ZetaCombination::kUnit, make_rational(BigInt(2), pow2(k - 1)));
    return {j0, j1};
}

namespace detail {

// value of the inhomogeneous term J_{k-2}(n) feeding the ladder at weight k
inline ZetaCombination ladder_rhs(int k, long n, const JTable* lower) {
    if (k == 2) return ZetaCombination{};
    if (k == 3) return ZetaCombination::unit(j1_rational(n));
    return lower->at(n);
}

}  // namespace detail

// Extend the weight-k table to n_max with the three-term recurrence
//   4n^2 J(n) - (8n^2-8n+3) J(n-1) + 4(n-1)^2 J(n-2) = J_{k-2}(n),
// seeded by jk_initial.  `lower` is required for k >= 4.
inline JTable jk_recurrence_single(int k, long n_max, const JTable* lower) {
    if (k < 2) throw std::invalid_argument("jk_recurrence_single: k must be >= 2");
    if (n_max < 1) throw std::invalid_argument("jk_recurrence_single: n_max must be >= 1");
    if (k >= 4 && (lower == nullptr || lower->n_max() < n_max))
        throw std::invalid_argument("jk_recurrence_single: lower table missing or too short");
    JTable t{k, JProvenance::Recurrence, {}};
    t.values.reserve(n_max + 1);
    auto [j0, j1] = jk_initial(k);
    t.values.push_back(std::move(j0));
    t.values.push_back(std::move(j1));
    for (long n = 2; n <= n_max; ++n) {
        ZetaCombination next = detail::ladder_rhs(k, n, lower);
        next += t.values[n - 1] * Rational(8 * n * n - 8 * n + 3);
        next -= t.values[n - 2] * Rational(4 * (n - 1) * (n - 1));
        next *= make_rational(1, 4 * n * n);
        t.values.push_back(std::move(next));
    }
    return t;
}

// Tables for the whole parity chain 2,4,...,k or 3,5,...,k, keyed by weight.
inline std::map<int, JTable> jk_recurrence_chain(int k, long n_max) {
    if (k < 2) throw std::invalid_argument("jk_recurrence_chain: k must be >= 2");
    std::map<int, JTable> out;
    const JTable* lower = nullptr;
    for (int kk = (k % 2 == 0) ? 2 : 3; kk <= k; kk += 2) {
        JTable t = jk_recurrence_single(kk, n_max, lower);
        lower = &out.emplace(kk, std::move(t)).first->second;
    }
    return out;
}

inline JTable jk_recurrence(int k, long n_max) {
    auto chain = jk_recurrence_chain(k, n_max);
    return std::move(chain.at(k));
}

// The inductive route for k >= 4:
//   J_k(n) = sum_p (-1)^p binom(-1/2,p)^2 binom(n,p)
//            [ zeta(k,1/2) - sum_{i<p} (2i+1)^-2 binom(-1/2,i)^-2
//                              sum_{j<=i} (-1)^j binom(i,j) J_{k-2}(j+1) ]
inline JTable jk_inductive_table(int k, long n_max, const JTable& lower) {
    if (k < 4) throw std::invalid_argument("jk_inductive_table: k must be >= 4");
    if (lower.k != k - 2) throw std::invalid_argument("jk_inductive_table: lower table has wrong weight");
    if (lower.n_max() < n_max)
        throw std::invalid_argument("jk_inductive_table: lower table too short");

    // inner[i] = sum_{j<=i} (-1)^j binom(i,j) J_{k-2}(j+1)
    std::vector<ZetaCombination> inner(std::max<long>(n_max, 1));
    for (long i = 0; i < static_cast<long>(inner.size()); ++i) {
        ZetaCombination acc;
        for (long j = 0; j <= i; ++j) {
            Rational c(binomial(i, j));
            if (j % 2 == 1) c = -c;
            acc += lower.at(j + 1) * c;
        }
        inner[i] = std::move(acc);
    }

    // bracket[p] = zeta(k,1/2) - sum_{i<p} (2i+1)^-2 binom(-1/2,i)^-2 inner[i]
    std::vector<ZetaCombination> bracket(n_max + 1);
    ZetaCombination partial;
    for (long p = 0; p <= n_max; ++p) {
        bracket[p] = ZetaCombination::hurwitz_half(k) - partial;
        if (p < n_max)
            partial += inner[p] * (half_binomial_inv_sq(p) /
                                   Rational(BigInt(2 * p + 1) * (2 * p + 1)));
    }

    JTable t{k, JProvenance::Inductive, std::vector<ZetaCombination>(n_max + 1)};
    for (long n = 0; n <= n_max; ++n) {
        ZetaCombination acc;
        for (long p = 0; p <= n; ++p) {
            Rational c = half_binomial(p) * half_binomial(p) * Rational(binomial(n, p));
            if (p % 2 == 1) c = -c;
            acc += bracket[p] * c;
        }
        t.values[n] = std::move(acc);
    }
    return t;
}

inline ZetaCombination jk_inductive(int k, long n, const JTable& lower) {
    return jk_inductive_table(k, n, lower).values.at(n);
}

// ---------------------------------------------------------------------------
// Infinite-series oracle
// ---------------------------------------------------------------------------

// Truncation point L such that the dropped tail of the l-series stays below
// eps.  From term bounds: for l >= n(4n-1),
//   |term(l)| <= B (2l)^-k  with  B = 3 * 2^k 4^n n! (k-1)_n / (2n)!,
// so sum_{l>L} |term| <= B 2^-k L^(1-k) / (k-1).
inline long series_truncation_for(int k, long n, double eps) {
    if (k < 2 || n < 0 || !(eps > 0)) throw std::invalid_argument("series_truncation_for");
    double logB = std::log(3.0) + k * std::log(2.0) + n * std::log(4.0);
    for (long t = 1; t <= n; ++t) logB += std::log(static_cast<double>(t));            // n!
    for (long t = 0; t < n; ++t) logB += std::log(static_cast<double>(k - 1 + t));     // (k-1)_n
    for (long t = 1; t <= 2 * n; ++t) logB -= std::log(static_cast<double>(t));        // (2n)!
    const double logL =
        (logB - k * std::log(2.0) - std::log(static_cast<double>(k - 1)) - std::log(eps)) /
        (k - 1);
    const double L = std::exp(std::min(logL, std::log(4e9)));
    return std::max<long>({static_cast<long>(L) + 1, n * (4 * n - 1) + 1, 1});
}

// Partial sum of the first L terms of
//   J_k(n) = 2^k 4^n n!/(2n)! sum_l (l+1)_{2n} / ((2l+1)(2l+5)...(2l+4n+1))
//            * sum_j binom(n,j) (-1)^j / (2l+4j+1)^(k-1),
// evaluated numerically.  Used purely as an independent oracle against the
// exact tables.
//
// The inner alternating sum is an n-th finite difference, exponentially
// smaller than its own terms at large l; summing it in floating point loses
// ~n log(l) bits to cancellation and the noise grows with L.  So: for k = 2
// it is replaced by its exact product form
//   sum_j (-1)^j binom(n,j)/(x+4j) = 4^n n! / (x(x+4)...(x+4n)),  x = 2l+1
// (every factor positive, no cancellation), and for k >= 3 (where the tail
// bound keeps L small) it is evaluated in exact rational arithmetic per l.
inline double jk_series_numeric(int k, long n, long L) {
    if (k < 2) throw std::invalid_argument("jk_series_numeric: k must be >= 2");
    if (n < 0) throw std::invalid_argument("jk_series_numeric: n must be >= 0");
    if (L < 1) throw std::invalid_argument("jk_series_numeric: L must be >= 1");

    long double prefactor = std::pow(2.0L, static_cast<long double>(k));
    for (long t = 1; t <= n; ++t) prefactor *= 4.0L * t;  // 4^n n!
    for (long t = 1; t <= 2 * n; ++t) prefactor /= t;     // / (2n)!

    long double sum = 0.0L, comp = 0.0L;  // Kahan compensation
    std::vector<BigInt> binom_n;
    long double inner2_scale = 1.0L;
    if (k == 2) {
        for (long t = 1; t <= n; ++t) inner2_scale *= 4.0L * t;  // 4^n n!
    } else {
        binom_n.reserve(n + 1);
        for (long j = 0; j <= n; ++j) binom_n.push_back(binomial(n, j));
    }

    for (long l = 0; l < L; ++l) {
        long double ratio = 1.0L;
        for (long t = 1; t <= 2 * n; ++t) ratio *= (l + t);
        for (long i = 0; i <= n; ++i) ratio /= (2 * l + 4 * i + 1);

        long double inner;
        if (k == 2) {
            inner = inner2_scale;
            for (long i = 0; i <= n; ++i) inner /= (2 * l + 4 * i + 1);
        } else {
            Rational exact(0);
            for (long j = 0; j <= n; ++j) {
                const BigInt den = pow_ui(BigInt(2 * l + 4 * j + 1), k - 1);
                exact += make_rational((j % 2 == 0) ? binom_n[j] : BigInt(-binom_n[j]), den);
            }
            inner = static_cast<long double>(mpq_get_d(exact.get_mpq_t()));
        }

        const long double term = ratio * inner;
        const long double y = term - comp;
        const long double t2 = sum + y;
        comp = (t2 - sum) - y;
        sum = t2;
    }
    return static_cast<double>(prefactor * sum);
}

// ---------------------------------------------------------------------------
// Special values of the spectral zeta function at s = 2, 3
// ---------------------------------------------------------------------------

struct ZetaQParams {
    double alpha = 2.0;
    double beta = 2.0;
};

struct ZetaQResult {
    double value = 0.0;          // via the exact-coefficient g series
    double g_series_route = 0.0; // g_s(z): sum binom(-1/2,n) J_s(n) z^n
    double g_closed_route = 0.0; // g_s(z) via the closed hypergeometric forms
    double z = 0.0;              // evaluation point 1/(alpha beta - 1)
    double tol = 0.0;
};

namespace detail {

// 2F1(1/4, 3/4; 1; -x) for x in (0,1): alternating terms, |ratio| < x.
inline double gauss_quarter_numeric(double x, double eps) {
    long double term = 1.0L, sum = 1.0L;
    for (long n = 0;; ++n) {
        term *= -(0.25L + n) * (0.75L + n) / ((1.0L + n) * (1.0L + n)) * x;
        sum += term;
        if (std::fabs(static_cast<double>(term)) < eps * (1.0 - x) && n > 4) break;
        if (n > 2000000) throw std::runtime_error("gauss_quarter_numeric: no convergence");
    }
    return static_cast<double>(sum);
}

inline double tg2_numeric(double x, double eps) {
    const double f = gauss_quarter_numeric(x, eps / 4.0);
    return f * f;
}

// tg3(x) = -2/sqrt(1+x) sum_{n>=1} (-1)^n binom(-1/2,n)^3 y^n c_n,
// y = x/(1+x), c_n = sum_{j<n} (2j+1)^-3 binom(-1/2,j)^-2.
inline double tg3_numeric(double x, double eps) {
    const double y = x / (1.0 + x);
    long double hb = 1.0L;    // binom(-1/2, n)
    long double yn = 1.0L;    // y^n
    long double c = 0.0L;     // c_n
    long double invsq = 1.0L; // binom(-1/2, n)^-2
    long double sum = 0.0L;
    for (long n = 1;; ++n) {
        c += invsq / (static_cast<long double>(2 * n - 1) * (2 * n - 1) * (2 * n - 1));
        hb *= -static_cast<long double>(2 * n - 1) / (2 * n);
        invsq = 1.0L / (hb * hb);
        yn *= y;
        const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
        sum += sign * hb * hb * hb * yn * c;
        // |hb|^3 <= 1 and c_n is bounded, so the tail is geometric in y
        if (2.0 * yn / (1.0 - y) < eps && n > 4) break;
        if (n > 2000000) throw std::runtime_error("tg3_numeric: no convergence");
    }
    return static_cast<double>(-2.0L / std::sqrt(1.0L + x) * sum);
}

}  // namespace detail

// Special value of the spectral zeta function,
//   zeta_Q(s) = 2 ((a+b)/(2 sqrt(ab(ab-1))))^s
//               ( zeta(s,1/2) + c_s ((a-b)/(a+b))^2 g_s(1/(ab-1)) ),
// c_2 = 1, c_3 = 3.  The g factor is computed along two independent routes
// that must agree within tol: the exact-coefficient series, and the closed
// hypergeometric forms g2 = J2(0) tg2, g3 = J3(0) tg2 + tg3.
inline ZetaQResult zeta_q(int s, const ZetaQParams& params, double tol) {
    if (s != 2 && s != 3) throw std::invalid_argument("zeta_q: s must be 2 or 3");
    if (!(tol > 0)) throw std::invalid_argument("zeta_q: tol must be > 0");
    const double ab = params.alpha * params.beta;
    if (!(ab > 2.0))
        throw std::domain_error("zeta_q: requires alpha*beta > 2 (g series diverges otherwise)");

    ZetaQResult out;
    out.tol = tol;
    out.z = 1.0 / (ab - 1.0);
    const double eps = tol / 8.0;

    // route 1: exact J coefficients streamed through the ladder, geometric
    // tail bound from |J_s(n)| <= J_s(0)
    const double zeta2 = riemann_zeta_numeric(2, 1e-13);
    const double zeta3 = riemann_zeta_numeric(3, 1e-13);
    const double js0 = (s == 2) ? 3.0 * zeta2 : 7.0 * zeta3;
    long N = static_cast<long>(std::log(eps * (1.0 - out.z) / js0) / std::log(out.z)) + 1;
    if (N < 4) N = 4;
    if (N > 200000)
        throw std::domain_error("zeta_q: alpha*beta too close to 2 for this tolerance");
    {
        long double acc = 0.0L, zn = 1.0L;
        auto [prev2, prev1] = jk_initial(s);
        const auto add = [&](long n, const ZetaCombination& v) {
            const double cz = mpq_get_d(v.coefficient(s).get_mpq_t());
            const double cu = mpq_get_d(v.coefficient(ZetaCombination::kUnit).get_mpq_t());
            acc += static_cast<long double>(mpq_get_d(half_binomial(n).get_mpq_t())) *
                   (cz * js0 + cu) * zn;
            zn *= out.z;
        };
        add(0, prev2);
        add(1, prev1);
        for (long n = 2; n <= N; ++n) {
            ZetaCombination cur = detail::ladder_rhs(s, n, nullptr);
            cur += prev1 * Rational(8 * n * n - 8 * n + 3);
            cur -= prev2 * Rational(4 * (n - 1) * (n - 1));
            cur *= make_rational(1, 4 * n * n);
            add(n, cur);
            prev2 = std::move(prev1);
            prev1 = std::move(cur);
        }
        out.g_series_route = static_cast<double>(acc);
    }

    // route 2: closed forms
    const double tg2 = detail::tg2_numeric(out.z, eps);
    out.g_closed_route = (s == 2) ? 3.0 * zeta2 * tg2
                                  : 7.0 * zeta3 * tg2 + detail::tg3_numeric(out.z, eps);

    if (std::fabs(out.g_series_route - out.g_closed_route) > tol)
        throw std::runtime_error("zeta_q: dual g-function routes disagree beyond tolerance");

    const double pref = (params.alpha + params.beta) / (2.0 * std::sqrt(ab * (ab - 1.0)));
    const double asym2 = std::pow((params.alpha - params.beta) / (params.alpha + params.beta), 2);
    const double hurwitz = (s == 2) ? 3.0 * zeta2 : 7.0 * zeta3;
    const double cs = (s == 2) ? 1.0 : 3.0;
    out.value = 2.0 * std::pow(pref, s) * (hurwitz + cs * asym2 * out.g_series_route);
    return out;
}

// ---------------------------------------------------------------------------
// Generating-function views (series over ZetaCombination coefficients)
// ---------------------------------------------------------------------------

// w_k(t) = sum J_k(n) t^n
inline TruncatedSeries<ZetaCombination> w_series(const JTable& table, long order) {
    if (table.n_max() < order) throw std::invalid_argument("w_series: table too short");
    TruncatedSeries<ZetaCombination> s(order);
    for (long n = 0; n <= order; ++n) s[n] = table.at(n);
    return s;
}

// g_k(z) = sum binom(-1/2,n) J_k(n) z^n
inline TruncatedSeries<ZetaCombination> g_series(const JTable& table, long order) {
    if (table.n_max() < order) throw std::invalid_argument("g_series: table too short");
    TruncatedSeries<ZetaCombination> s(order);
    for (long n = 0; n <= order; ++n) s[n] = table.at(n) * half_binomial(n);
    return s;
}

}  // namespace aperylab
