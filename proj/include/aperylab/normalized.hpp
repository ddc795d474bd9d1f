#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "aperylab/apery_like.hpp"
#include "aperylab/arith.hpp"
#include "aperylab/numeric.hpp"
#include "aperylab/rational.hpp"
#include "aperylab/zeta_ring.hpp"

namespace aperylab {

// Normalized sequence table tJ_k(0..n_max); tJ_1 starts at n = 1.
// Construction enforces the n = 1 normalization
//   tJ_{2m}(1) = 3/4^m,  tJ_{2m+1}(1) = 2/4^m.
struct RationalSeq {
    int k = 2;
    std::vector<Rational> values;  // values[n]; index 0 is a placeholder for k = 1

    RationalSeq(int kk, std::vector<Rational> v) : k(kk), values(std::move(v)) {
        if (k < 1) throw std::invalid_argument("RationalSeq: k must be >= 1");
        if (static_cast<long>(values.size()) < 2)
            throw std::invalid_argument("RationalSeq: need at least n = 1");
        const Rational expected = (k % 2 == 0) ? make_rational(BigInt(3), pow2(k))
                                               : make_rational(BigInt(4), pow2(k));
        if (values[1] != expected)
            throw std::logic_error("RationalSeq: n = 1 normalization violated");
    }

    long first_index() const { return k == 1 ? 1 : 0; }
    long n_max() const { return static_cast<long>(values.size()) - 1; }

    const Rational& at(long n) const {
        if (n < first_index() || n > n_max())
            throw std::out_of_range("RationalSeq: index outside table");
        return values[n];
    }
};

// tJ_1(n) = 2^n (n-1)! / (2n-1)!!
inline RationalSeq tj1_table(long n_max) {
    if (n_max < 1) throw std::invalid_argument("tj1_table: n_max must be >= 1");
    std::vector<Rational> v(n_max + 1);
    for (long n = 1; n <= n_max; ++n) v[n] = j1_rational(n);
    return RationalSeq(1, std::move(v));
}

// tJ_2 satisfies the same homogeneous three-term recurrence as J_2; seeding
// with 1, 3/4 reproduces the binomial sum sum_p (-1)^p binom(-1/2,p)^2
// binom(n,p) exactly (the equivalence is pinned by tests, and lets tables
// reach the 10^4-index range the congruence sweeps need).
inline RationalSeq tj2_table(long n_max) {
    if (n_max < 1) throw std::invalid_argument("tj2_table: n_max must be >= 1");
    std::vector<Rational> v(n_max + 1);
    v[0] = Rational(1);
    v[1] = make_rational(3, 4);
    for (long n = 2; n <= n_max; ++n) {
        v[n] = (Rational(8 * n * n - 8 * n + 3) * v[n - 1] -
                Rational(4 * (n - 1) * (n - 1)) * v[n - 2]) /
               Rational(4 * n * n);
    }
    return RationalSeq(2, std::move(v));
}

// tJ_2 by its defining binomial sum; the slow reference path.
inline Rational tj2_binomial_sum(long n) {
    Rational acc(0);
    for (long p = 0; p <= n; ++p) {
        Rational t = half_binomial(p) * half_binomial(p) * Rational(binomial(n, p));
        acc += (p % 2 == 0) ? t : -t;
    }
    return acc;
}

// Streaming tJ_2 values at selected indices without keeping the whole table.
inline std::map<long, Rational> tj2_values(std::vector<long> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    std::map<long, Rational> out;
    if (indices.empty()) return out;
    if (indices.front() < 0) throw std::invalid_argument("tj2_values: negative index");
    Rational prev2(1);
    Rational prev1 = make_rational(3, 4);
    std::size_t next = 0;
    auto take = [&](long n, const Rational& v) {
        while (next < indices.size() && indices[next] == n) {
            out.emplace(n, v);
            ++next;
        }
    };
    take(0, prev2);
    take(1, prev1);
    for (long n = 2; next < indices.size(); ++n) {
        Rational cur = (Rational(8 * n * n - 8 * n + 3) * prev1 -
                        Rational(4 * (n - 1) * (n - 1)) * prev2) /
                       Rational(4 * n * n);
        take(n, cur);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return out;
}

namespace detail {

// inner[i] = sum_{j<=i} (-1)^j binom(i,j) seq(j+1)
inline std::vector<Rational> alternating_binomial_shifted(const RationalSeq& seq, long count) {
    std::vector<Rational> inner(count);
    for (long i = 0; i < count; ++i) {
        Rational acc(0);
        for (long j = 0; j <= i; ++j) {
            Rational c(binomial(i, j));
            if (j % 2 == 1) c = -c;
            acc += c * seq.at(j + 1);
        }
        inner[i] = std::move(acc);
    }
    return inner;
}

}  // namespace detail

// The ascent operation
//   J#(n) = sum_p (-1)^p binom(-1/2,p)^2 binom(n,p)
//           sum_{i<p} [ -(2i+1)^-2 binom(-1/2,i)^-2
//                        sum_{j<=i} (-1)^j binom(i,j) J(j+1) ],
// the formal inverse of the three-term ladder; J#(0) = 0, and J#(n) = 0 for
// n < 0 by convention.
inline Rational ascent(const RationalSeq& seq, long n) {
    if (n < 0) return Rational(0);
    if (seq.n_max() < n) throw std::invalid_argument("ascent: sequence table too short");
    const auto inner = detail::alternating_binomial_shifted(seq, std::max<long>(n, 0));
    Rational bracket(0);  // sum_{i<p} -(2i+1)^-2 binom(-1/2,i)^-2 inner[i]
    Rational acc(0);
    for (long p = 0; p <= n; ++p) {
        if (p > 0) {
            const long i = p - 1;
            bracket -= inner[i] * half_binomial_inv_sq(i) /
                       Rational(BigInt(2 * i + 1) * (2 * i + 1));
        }
        Rational c = half_binomial(p) * half_binomial(p) * Rational(binomial(n, p));
        if (p % 2 == 1) c = -c;
        acc += c * bracket;
    }
    return acc;
}

// Full ascent table 0..n_max in one O(n^2) pass; result has weight k + 2.
inline RationalSeq ascent_table(const RationalSeq& seq, long n_max) {
    if (seq.n_max() < n_max) throw std::invalid_argument("ascent_table: input table too short");
    const auto inner = detail::alternating_binomial_shifted(seq, std::max<long>(n_max, 1));
    std::vector<Rational> bracket(n_max + 1);  // bracket[p], cumulative
    for (long p = 1; p <= n_max; ++p) {
        const long i = p - 1;
        bracket[p] = bracket[p - 1] - inner[i] * half_binomial_inv_sq(i) /
                                          Rational(BigInt(2 * i + 1) * (2 * i + 1));
    }
    std::vector<Rational> v(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        Rational acc(0);
        for (long p = 1; p <= n; ++p) {
            Rational c = half_binomial(p) * half_binomial(p) * Rational(binomial(n, p));
            if (p % 2 == 1) c = -c;
            acc += c * bracket[p];
        }
        v[n] = std::move(acc);
    }
    return RationalSeq(seq.k + 2, std::move(v));
}

// tJ_k table: tJ_1 and tJ_2 directly, higher k by repeated ascent.
inline RationalSeq tj(int k, long n_max) {
    if (k < 1) throw std::invalid_argument("tj: k must be >= 1");
    if (n_max < 1) throw std::invalid_argument("tj: n_max must be >= 1");
    if (k == 1) return tj1_table(n_max);
    if (k == 2) return tj2_table(n_max);
    RationalSeq cur = (k % 2 == 0) ? tj2_table(n_max) : tj1_table(n_max);
    while (cur.k < k) cur = ascent_table(cur, n_max);
    return cur;
}

// Tables for every weight needed by the decomposition of J_k: the even chain
// 2, 4, ..., plus the odd chain up to k when k is odd.
inline std::map<int, RationalSeq> tj_family(int k_max, long n_max) {
    std::map<int, RationalSeq> out;
    for (int k = 2; k <= k_max; k += 2) {
        if (k == 2) out.emplace(2, tj2_table(n_max));
        else out.emplace(k, ascent_table(out.at(k - 2), n_max));
    }
    for (int k = 1; k <= k_max; k += 2) {
        if (k == 1) out.emplace(1, tj1_table(n_max));
        else out.emplace(k, ascent_table(out.at(k - 2), n_max));
    }
    return out;
}

// Exact check of the ladder identity
//   4n^2 asc(n) - (8n^2-8n+3) asc(n-1) + 4(n-1)^2 asc(n-2) = J(n),  n >= 1,
// with asc(-1) = 0 at n = 1, for a claimed (sequence, ascent) pair.  The
// identity holds for every input sequence once asc really is its ascent, so
// this is the integrity check for stored tables.
inline bool ascent_ladder_check(const RationalSeq& seq, const RationalSeq& asc, long n_max) {
    if (asc.n_max() < n_max || seq.n_max() < n_max)
        throw std::invalid_argument("ascent_ladder_check: tables too short");
    for (long n = 1; n <= n_max; ++n) {
        Rational lhs = Rational(4 * n * n) * asc.at(n) -
                       Rational(8 * n * n - 8 * n + 3) * asc.at(n - 1);
        if (n >= 2) lhs += Rational(4 * (n - 1) * (n - 1)) * asc.at(n - 2);
        if (lhs != seq.at(n)) return false;
    }
    return true;
}

// Self-check variant: recomputes the ascent and validates the implementation.
inline bool ascent_recurrence_check(const RationalSeq& seq, long n_max) {
    return ascent_ladder_check(seq, ascent_table(seq, n_max), n_max);
}

// ---------------------------------------------------------------------------
// The coefficient sums S_k(p) with tJ_k(n) = sum_p (-1)^p binom(-1/2,p)^2
// binom(n,p) S_k(p), along three independent routes.
// ---------------------------------------------------------------------------

enum class SRoute { Definition, Recursion, Multisum };

// 0 when some adjacent pair of the nondecreasing index list is equal and odd.
inline int multisum_epsilon(const std::vector<long>& indices) {
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        if (indices[i] > indices[i + 1])
            throw std::invalid_argument("multisum_epsilon: indices must be nondecreasing");
        if (indices[i] == indices[i + 1] && indices[i] % 2 != 0) return 0;
    }
    return 1;
}

namespace detail {

// S_2 = 1; S_3(p) = -2 sum_{i<p} (2i+1)^-3 binom(-1/2,i)^-2
inline std::vector<Rational> s_base_table(int k, long p_max) {
    std::vector<Rational> t(p_max + 1);
    if (k == 2) {
        for (auto& x : t) x = Rational(1);
    } else {
        Rational acc(0);
        for (long p = 1; p <= p_max; ++p) {
            const long i = p - 1;
            acc += half_binomial_inv_sq(i) /
                   Rational(BigInt(2 * i + 1) * (2 * i + 1) * (2 * i + 1));
            t[p] = Rational(-2) * acc;
        }
    }
    return t;
}

}  // namespace detail

// S_{k}(0..p_max) via the step identity
//   S_{k+2}(p) = sum_{q=1..p} ( S_k(q)/(2q)^2 - S_k(q-1)/(2q-1)^2 ).
inline std::vector<Rational> s_table_recursion(int k, long p_max) {
    if (k < 2) throw std::invalid_argument("s_table_recursion: k must be >= 2");
    std::vector<Rational> cur = detail::s_base_table(k % 2 == 0 ? 2 : 3, p_max);
    for (int kk = (k % 2 == 0) ? 2 : 3; kk < k; kk += 2) {
        std::vector<Rational> next(p_max + 1);
        for (long q = 1; q <= p_max; ++q) {
            next[q] = next[q - 1] + cur[q] / Rational(4 * q * q) -
                      cur[q - 1] / Rational((2 * q - 1) * (2 * q - 1));
        }
        cur = std::move(next);
    }
    return cur;
}

// S_k(p) straight from the definition (k >= 4 consumes a tJ_{k-2} table).
inline std::vector<Rational> s_table_definition(int k, long p_max) {
    if (k < 2) throw std::invalid_argument("s_table_definition: k must be >= 2");
    if (k <= 3) return detail::s_base_table(k, p_max);
    const RationalSeq lower = tj(k - 2, std::max<long>(p_max, 1));
    const auto inner = detail::alternating_binomial_shifted(lower, p_max);
    std::vector<Rational> t(p_max + 1);
    for (long p = 1; p <= p_max; ++p) {
        const long i = p - 1;
        t[p] = t[p - 1] - inner[i] * half_binomial_inv_sq(i) /
                              Rational(BigInt(2 * i + 1) * (2 * i + 1));
    }
    return t;
}

// Multiple-sum evaluation:
//   S_{2r+2}(p) = sum over 1 <= i_1 <= ... <= i_r <= 2p of
//                 (-1)^(i_1+..+i_r) / (i_1..i_r)^2 * eps(i),
//   S_{2r+3}(p) = -2 sum over 1 <= 2j-1 < i_1 <= ... <= i_r <= 2p of
//                 (2j-1)^-3 binom(-1/2,j-1)^-2 * same factor.
// (The even/odd pair differ exactly by the -2-weighted odd-cube prefix, as
// in the base sequences S_2, S_3.)
inline Rational s_multisum(int k, long p) {
    const bool even = (k % 2 == 0);
    const int r = even ? (k - 2) / 2 : (k - 3) / 2;
    if (r < 1)
        throw std::invalid_argument("s_multisum: requires k >= 4 even or k >= 5 odd");
    const long top = 2 * p;

    Rational total(0);
    std::vector<long> idx(r);
    // enumerate nondecreasing tuples, pruning adjacent equal odd pairs
    auto recurse = [&](auto&& self, int pos, long low, const Rational& partial) -> void {
        if (pos == r) {
            if (even) {
                total += partial;
            } else {
                // prefix sum over 2j-1 < i_1
                const long i1 = idx[0];
                Rational prefix(0);
                for (long j = 1; 2 * j - 1 < i1; ++j)
                    prefix += half_binomial_inv_sq(j - 1) /
                              Rational(BigInt(2 * j - 1) * (2 * j - 1) * (2 * j - 1));
                total += Rational(-2) * prefix * partial;
            }
            return;
        }
        for (long i = low; i <= top; ++i) {
            if (pos > 0 && i == idx[pos - 1] && i % 2 == 1) continue;  // eps = 0
            idx[pos] = i;
            Rational next = partial / Rational(BigInt(i) * i);
            if (i % 2 == 1) next = -next;
            self(self, pos + 1, i, next);
        }
    };
    recurse(recurse, 0, 1, Rational(1));
    return total;
}

inline Rational s_poly(int k, long p, SRoute route) {
    if (k < 2) throw std::invalid_argument("s_poly: k must be >= 2");
    if (p < 0) throw std::invalid_argument("s_poly: p must be >= 0");
    switch (route) {
        case SRoute::Definition: return s_table_definition(k, p).at(p);
        case SRoute::Recursion: return s_table_recursion(k, p).at(p);
        case SRoute::Multisum: return s_multisum(k, p);
    }
    throw std::logic_error("s_poly: bad route");
}

// Reconstruction of J_k(n) from the normalized tables:
//   J_k(n) = sum_{m=0}^{floor(k/2)-1} zeta(k-2m,1/2) tJ_{2m+2}(n)
//            + (1-(-1)^k)/2 * tJ_k(n).
inline ZetaCombination decompose(int k, long n, const std::map<int, RationalSeq>& tj_tables) {
    if (k < 2) throw std::invalid_argument("decompose: k must be >= 2");
    ZetaCombination out;
    for (int m = 0; m <= k / 2 - 1; ++m)
        out.add_term(k - 2 * m, tj_tables.at(2 * m + 2).at(n));
    if (k % 2 == 1) out.add_term(ZetaCombination::kUnit, tj_tables.at(k).at(n));
    return out;
}

// |S_{2r+2}(p_large) - (-zeta(2r)/2^(2r-1))| < tol, numerically.
inline bool s_limit_check(int r, long p_large, double tol) {
    if (r < 1) throw std::invalid_argument("s_limit_check: r must be >= 1");
    if (p_large < 1 || !(tol > 0)) throw std::invalid_argument("s_limit_check: bad arguments");
    const Rational s = s_table_recursion(2 * r + 2, p_large).at(p_large);
    const double limit = -riemann_zeta_numeric(2 * r, tol / 16.0) /
                         std::pow(2.0, 2.0 * r - 1.0);
    return std::fabs(mpq_get_d(s.get_mpq_t()) - limit) < tol;
}

}  // namespace aperylab
