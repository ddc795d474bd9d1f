#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aperylab/arith.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

// Power series truncated at a declared order.  Coefficients live in any
// module over Rational: Rational itself, or ZetaCombination.
template <class C>
struct TruncatedSeries {
    std::vector<C> coeffs;  // indices 0..order

    TruncatedSeries() = default;
    explicit TruncatedSeries(long order) : coeffs(order + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }
    explicit TruncatedSeries(std::vector<C> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }

    long order() const { return static_cast<long>(coeffs.size()) - 1; }

    const C& operator[](long n) const { return coeffs.at(n); }
    C& operator[](long n) { return coeffs.at(n); }

    bool is_zero() const {
        for (const C& c : coeffs)
            if (!(c == C{})) return false;
        return true;
    }

    bool operator==(const TruncatedSeries&) const = default;

    // coefficient-wise map z -> -z
    TruncatedSeries alternated() const {
        TruncatedSeries out = *this;
        for (long n = 1; n <= order(); n += 2) out.coeffs[n] = out.coeffs[n] * Rational(-1);
        return out;
    }
};

// A linear ODE operator sum_i poly_i(t) * d^{d_i}/dt^{d_i}, with polynomial
// coefficients given by their (dense, low-to-high) Rational coefficients.
struct OdeOperator {
    struct Term {
        int derivative;
        std::vector<Rational> poly;
    };
    std::vector<Term> terms;

    // Each term with derivative d and lowest surviving power j0 reads input
    // index m - j0 + d; the operator as a whole consumes the max of d - j0.
    int consumed_orders() const {
        int consume = 0;
        for (const auto& t : terms) {
            int j0 = 0;
            while (j0 < static_cast<int>(t.poly.size()) && t.poly[j0] == 0) ++j0;
            if (j0 == static_cast<int>(t.poly.size())) continue;
            consume = std::max(consume, t.derivative - j0);
        }
        return consume;
    }
};

// t(1-t)^2 d^2/dt^2 + (1-3t)(1-t) d/dt + (t - 3/4): the singly confluent
// Heun operator annihilating the weight-2 generating function.
inline const OdeOperator& heun_operator() {
    static const OdeOperator op{{
        {2, {Rational(0), Rational(1), Rational(-2), Rational(1)}},
        {1, {Rational(1), Rational(-4), Rational(3)}},
        {0, {make_rational(-3, 4), Rational(1)}},
    }};
    return op;
}

// 8z^2(1+z)^2 d^3 + 24z(1+z)(1+2z) d^2 + 2(4+27z+27z^2) d + 3(1+2z)
inline const OdeOperator& w_operator() {
    static const OdeOperator op{{
        {3, {Rational(0), Rational(0), Rational(8), Rational(16), Rational(8)}},
        {2, {Rational(0), Rational(24), Rational(72), Rational(48)}},
        {1, {Rational(8), Rational(54), Rational(54)}},
        {0, {Rational(3), Rational(6)}},
    }};
    return op;
}

// z(1-z) d^2 + (1-2z) d - 1/4: the Gauss operator for 2F1(1/2,1/2;1;z).
inline const OdeOperator& gauss_half_operator() {
    static const OdeOperator op{{
        {2, {Rational(0), Rational(1), Rational(-1)}},
        {1, {Rational(1), Rational(-2)}},
        {0, {make_rational(-1, 4)}},
    }};
    return op;
}

// Exact coefficient stream of (op s).  Output order is input order minus
// consumed_orders(); only coefficients in that range are returned.
template <class C>
TruncatedSeries<C> apply_operator(const OdeOperator& op, const TruncatedSeries<C>& s) {
    const long N = s.order();
    const int consume = op.consumed_orders();
    if (N < consume)
        throw std::invalid_argument("apply_operator: series order too small for operator");
    TruncatedSeries<C> out(N - consume);
    for (const auto& term : op.terms) {
        for (long j = 0; j < static_cast<long>(term.poly.size()); ++j) {
            if (term.poly[j] == 0) continue;
            for (long m = j; m <= out.order(); ++m) {
                const long i = m - j;  // index into the derivative stream
                if (i + term.derivative > N) continue;
                // d-th derivative coefficient: (i+1)(i+2)...(i+d) a_{i+d}
                Rational factor = term.poly[j];
                for (int t = 1; t <= term.derivative; ++t) factor *= Rational(i + t);
                out.coeffs[m] += s.coeffs[i + term.derivative] * factor;
            }
        }
    }
    return out;
}

template <class C>
TruncatedSeries<C> heun_apply(const TruncatedSeries<C>& s) {
    return apply_operator(heun_operator(), s);
}

template <class C>
TruncatedSeries<C> dw_apply(const TruncatedSeries<C>& s) {
    return apply_operator(w_operator(), s);
}

template <class C>
TruncatedSeries<C> do_apply(const TruncatedSeries<C>& s) {
    return apply_operator(gauss_half_operator(), s);
}

// Coefficients (a)_n (b)_n / ((c)_n n!) of 2F1(a,b;c;z) up to order N.
inline TruncatedSeries<Rational> hypergeometric_coeffs(const Rational& a, const Rational& b,
                                                       const Rational& c, long N) {
    if (N < 0) throw std::invalid_argument("hypergeometric_coeffs: negative order");
    TruncatedSeries<Rational> out(N);
    out[0] = Rational(1);
    for (long n = 0; n < N; ++n) {
        const Rational cn = c + Rational(n);
        if (cn == 0)
            throw std::domain_error("hypergeometric_coeffs: Pochhammer (c)_n vanishes in range");
        out[n + 1] = out[n] * (a + Rational(n)) * (b + Rational(n)) / (cn * Rational(n + 1));
    }
    return out;
}

template <class C>
TruncatedSeries<C> cauchy_product(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b,
                                  long N) {
    if (a.order() < N || b.order() < N)
        throw std::invalid_argument("cauchy_product: operands shorter than requested order");
    TruncatedSeries<C> out(N);
    for (long i = 0; i <= N; ++i) {
        if (a.coeffs[i] == C{}) continue;
        for (long j = 0; i + j <= N; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

// v(z) = (1-t) w(t) under t = z/(z-1).  Expanding (1-t) t^m in z gives the
// signed binomial transform v_n = sum_m (-1)^m binom(n,m) w_m; exact, O(N^2).
template <class C>
TruncatedSeries<C> mobius_transform_w_to_v(const TruncatedSeries<C>& w, long N) {
    if (w.order() < N)
        throw std::invalid_argument("mobius_transform_w_to_v: input order too small");
    TruncatedSeries<C> out(N);
    for (long n = 0; n <= N; ++n) {
        C acc{};
        for (long m = 0; m <= n; ++m) {
            Rational c(binomial(n, m));
            if (m % 2 == 1) c = -c;
            acc += w.coeffs[m] * c;
        }
        out.coeffs[n] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eta-product q-expansions
// ---------------------------------------------------------------------------

// Lambda: eta(4 tau)^6  = q prod (1-q^{4n})^6,  support on n = 1 mod 4.
// Gamma:  eta(2 tau)^4 eta(4 tau)^4 = q prod (1-q^{2n})^4 (1-q^{4n})^4,
//         support on odd n.
enum class EtaKind { Lambda, Gamma };
enum class EtaAlgorithm { Pentagonal, NaiveProduct };

struct EtaCoefficients {
    EtaKind which;
    std::vector<long long> coeffs;  // index by exponent of q; [0] is always 0

    long long at(long n) const {
        return (n >= 0 && n < static_cast<long>(coeffs.size())) ? coeffs[n] : 0;
    }
    long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

namespace detail {

inline long long checked_ll(__int128 v, const char* where) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(where);
    return static_cast<long long>(v);
}

// prod (1-x^n) as the sparse pentagonal-number series
// sum_k (-1)^k x^{k(3k-1)/2}, k over all integers.
inline std::vector<std::pair<long, int>> euler_product_sparse(long N) {
    std::vector<std::pair<long, int>> terms{{0, 1}};
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2;
        const long g2 = k * (3 * k + 1) / 2;
        if (g1 > N) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        terms.emplace_back(g1, sign);
        if (g2 <= N) terms.emplace_back(g2, sign);
    }
    return terms;
}

// prod (1-x^n)^3 = sum_{k>=0} (-1)^k (2k+1) x^{k(k+1)/2}
inline std::vector<std::pair<long, long>> euler_cube_sparse(long N) {
    std::vector<std::pair<long, long>> terms;
    for (long k = 0;; ++k) {
        const long t = k * (k + 1) / 2;
        if (t > N) break;
        terms.emplace_back(t, (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1));
    }
    return terms;
}

template <class S1, class S2>
std::vector<long long> convolve_sparse(const S1& a, const S2& b, long N) {
    std::vector<__int128> acc(N + 1, 0);
    for (const auto& [ea, ca] : a) {
        if (ea > N) continue;
        for (const auto& [eb, cb] : b) {
            if (ea + eb > N) break;
            acc[ea + eb] += static_cast<__int128>(ca) * cb;
        }
    }
    std::vector<long long> out(N + 1);
    for (long i = 0; i <= N; ++i) out[i] = checked_ll(acc[i], "eta convolution overflow");
    return out;
}

// Multiply the dense polynomial by (1 - x^step)^count, truncated at N.
inline void multiply_binomial_factor(std::vector<long long>& poly, long step, int count, long N) {
    for (int c = 0; c < count; ++c)
        for (long i = N; i >= step; --i) poly[i] -= poly[i - step];
}

}  // namespace detail

inline EtaCoefficients eta_coeffs(EtaKind which, long N,
                                  EtaAlgorithm alg = EtaAlgorithm::Pentagonal) {
    if (N < 1) throw std::invalid_argument("eta_coeffs: N must be >= 1");
    EtaCoefficients out{which, std::vector<long long>(N + 1, 0)};

    if (alg == EtaAlgorithm::Pentagonal) {
        const long M = N;  // generous bound for the inner expansions
        if (which == EtaKind::Lambda) {
            // E(x)^6 = (E^3)^2, then x = q^4 and the leading q shift
            const auto e3 = detail::euler_cube_sparse(M / 4 + 1);
            const auto e6 = detail::convolve_sparse(e3, e3, M / 4 + 1);
            for (long m = 0; 4 * m + 1 <= N; ++m) out.coeffs[4 * m + 1] = e6[m];
        } else {
            // E(x)^4 = E * E^3 at x = q^2 and x = q^4
            const auto e1 = detail::euler_product_sparse(M);
            const auto e3 = detail::euler_cube_sparse(M);
            const auto e4 = detail::convolve_sparse(e1, e3, M / 2 + 1);
            std::vector<__int128> acc(N + 1, 0);
            for (long a = 0; 2 * a + 1 <= N; ++a) {
                if (e4[a] == 0) continue;
                for (long b = 0; 2 * a + 4 * b + 1 <= N; ++b)
                    acc[2 * a + 4 * b + 1] += static_cast<__int128>(e4[a]) * e4[b];
            }
            for (long i = 0; i <= N; ++i)
                out.coeffs[i] = detail::checked_ll(acc[i], "eta gamma overflow");
        }
        return out;
    }

    // Naive truncated product, used as the independent cross-check.
    std::vector<long long> poly(N + 1, 0);
    poly[0] = 1;
    if (which == EtaKind::Lambda) {
        for (long n = 1; 4 * n <= N; ++n) detail::multiply_binomial_factor(poly, 4 * n, 6, N);
    } else {
        for (long n = 1; 2 * n <= N; ++n) detail::multiply_binomial_factor(poly, 2 * n, 4, N);
        for (long n = 1; 4 * n <= N; ++n) detail::multiply_binomial_factor(poly, 4 * n, 4, N);
    }
    for (long i = 0; i + 1 <= N; ++i) out.coeffs[i + 1] = poly[i];
    return out;
}

}  // namespace aperylab
