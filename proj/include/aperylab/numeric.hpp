#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace aperylab {

// Numeric zeta(m) for integer m >= 2 with absolute error < tol.
//
// Partial sum plus the midpoint-rule tail integral:
//   zeta(m) ~ sum_{n<=N} n^-m + (N+1/2)^(1-m)/(m-1).
// The tail lies between the integrals from N+1 and from N+1/2, so the error
// is below N^-m / 2.  Desk-scale tolerances keep N modest; results are
// memoized since the same few zeta values are requested over and over.
inline double riemann_zeta_numeric(unsigned m, double tol) {
    if (m < 2) throw std::invalid_argument("riemann_zeta_numeric: m must be >= 2");
    if (!(tol > 0)) throw std::invalid_argument("riemann_zeta_numeric: tol must be > 0");
    double nd = std::pow(2.0 / tol, 1.0 / m) + 8.0;
    if (nd > 4e6) nd = 4e6;  // double roundoff dominates beyond this anyway
    const std::uint64_t N = static_cast<std::uint64_t>(nd);

    static thread_local std::map<std::pair<unsigned, std::uint64_t>, double> memo;
    const auto key = std::make_pair(m, N);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long double s = 0.0L;
    for (std::uint64_t n = N; n >= 1; --n)
        s += std::pow(static_cast<long double>(n), -static_cast<long double>(m));
    s += std::pow(N + 0.5L, 1.0L - static_cast<long double>(m)) / (m - 1);
    const double out = static_cast<double>(s);
    memo[key] = out;
    return out;
}

// zeta(m, 1/2) = (2^m - 1) zeta(m)
inline double hurwitz_half_numeric(unsigned m, double tol) {
    const double scale = std::pow(2.0, static_cast<double>(m)) - 1.0;
    return scale * riemann_zeta_numeric(m, tol / scale);
}

}  // namespace aperylab
