#pragma once

#include <map>
#include <string>
#include <vector>

#include "aperylab/apery_like.hpp"
#include "aperylab/normalized.hpp"
#include "aperylab/series_ops.hpp"
#include "aperylab/zeta_ring.hpp"

namespace aperylab {

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::string detail;  // first violation, when any
};

namespace verify_detail {

inline ZetaCombination zc_unit(const Rational& r) { return ZetaCombination::unit(r); }

inline TruncatedSeries<ZetaCombination> lift_unit(const TruncatedSeries<Rational>& s) {
    TruncatedSeries<ZetaCombination> out(s.order());
    for (long n = 0; n <= s.order(); ++n) out[n] = zc_unit(s[n]);
    return out;
}

template <class C>
bool first_mismatch(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b, long upto,
                    std::string& where) {
    for (long n = 0; n <= upto; ++n) {
        if (!(a[n] == b[n])) {
            where = "order " + std::to_string(n);
            return false;
        }
    }
    return true;
}

inline TruncatedSeries<ZetaCombination> derivative(const TruncatedSeries<ZetaCombination>& s) {
    TruncatedSeries<ZetaCombination> out(s.order() - 1);
    for (long n = 0; n < s.order(); ++n) out[n] = s[n + 1] * Rational(n + 1);
    return out;
}

}  // namespace verify_detail

// Closed-form tables for weights 2 and 3, and inductive-route tables above.
// Entirely independent of the recurrence route.
inline std::map<int, JTable> jk_inductive_chain(int k_max, long n_max) {
    std::map<int, JTable> out;
    JTable t2{2, JProvenance::ClosedForm, {}};
    JTable t3{3, JProvenance::ClosedForm, {}};
    for (long n = 0; n <= n_max; ++n) {
        t2.values.push_back(j2(n));
        t3.values.push_back(j3(n));
    }
    out.emplace(2, std::move(t2));
    out.emplace(3, std::move(t3));
    for (int k = 4; k <= k_max; ++k)
        out.emplace(k, jk_inductive_table(k, n_max, out.at(k - 2)));
    return out;
}

// Three-term ladder 4n^2 J_k(n) - (8n^2-8n+3) J_k(n-1) + 4(n-1)^2 J_k(n-2)
// = J_{k-2}(n), checked exactly on tables built by the non-recurrence routes,
// plus the n = 1 seed identity 4 J_k(1) - 3 J_k(0) = J_{k-2}(1).
inline std::vector<SuiteResult> verify_recurrence(int k_max, long n_max) {
    std::vector<SuiteResult> results;
    const auto tables = jk_inductive_chain(k_max, n_max);
    for (int k = 2; k <= k_max; ++k) {
        SuiteResult res{"three_term_ladder_k" + std::to_string(k), true, ""};
        const JTable& t = tables.at(k);
        const JTable* lower = (k >= 4) ? &tables.at(k - 2) : nullptr;
        for (long n = 2; n <= n_max; ++n) {
            ZetaCombination lhs = t.at(n) * Rational(4 * n * n);
            lhs -= t.at(n - 1) * Rational(8 * n * n - 8 * n + 3);
            lhs += t.at(n - 2) * Rational(4 * (n - 1) * (n - 1));
            ZetaCombination rhs;
            if (k == 3) rhs = ZetaCombination::unit(j1_rational(n));
            else if (k >= 4) rhs = lower->at(n);
            if (!(lhs == rhs)) {
                res.ok = false;
                res.detail = "first failure at (k=" + std::to_string(k) +
                             ", n=" + std::to_string(n) + "): lhs = " + lhs.riemann_string() +
                             ", rhs = " + rhs.riemann_string();
                break;
            }
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"seed_identity_4Jk1_minus_3Jk0", true, ""};
        for (int k = 4; k <= std::max(12, k_max); ++k) {
            const auto [j0hi, j1hi] = jk_initial(k);
            const auto [j0lo, j1lo] = jk_initial(k - 2);
            ZetaCombination lhs = j1hi * Rational(4) - j0hi * Rational(3);
            if (!(lhs == j1lo)) {
                res.ok = false;
                res.detail = "fails at k=" + std::to_string(k);
                break;
            }
        }
        results.push_back(std::move(res));
    }
    return results;
}

// Exact agreement of the closed forms, the recurrence route, and the
// inductive route.
inline std::vector<SuiteResult> verify_routes(int k_max, long n_max) {
    std::vector<SuiteResult> results;
    const auto inductive = jk_inductive_chain(k_max, n_max);
    auto recurrence = jk_recurrence_chain(std::max(2, k_max - (k_max % 2)), n_max);
    if (k_max >= 3) recurrence.merge(jk_recurrence_chain(k_max % 2 ? k_max : k_max - 1, n_max));
    for (int k = 2; k <= k_max; ++k) {
        SuiteResult res{"route_equivalence_k" + std::to_string(k), true, ""};
        const JTable& a = inductive.at(k);
        const JTable& b = recurrence.at(k);
        for (long n = 0; n <= n_max; ++n) {
            if (!(a.at(n) == b.at(n))) {
                res.ok = false;
                res.detail = "mismatch at (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
                break;
            }
        }
        results.push_back(std::move(res));
    }
    return results;
}

// Differential-equation suites for the generating functions, all exact:
//   D_H w2 = 0                 through order 2*base
//   D_H w3 = (1/2) 2F1(1,1;3/2;t)      through order 1.5*base
//   D_H w_k = (w_{k-2} - w_{k-2}(0))/(4t), k = 4,5,6   through order base
//   D_W g2 = 0, D_W g3 = -2/(1+z), D_W g_k = 2 g_{k-2}'  (k = 4,5)
//   D_O p_n = z^n for n <= 0.8*base, D_O 2F1(1/2,1/2;1;z) = 0
//   v2 = (1-t) w2 under t = z/(z-1) equals zeta(2,1/2) 2F1(1/2,1/2;1;z)
//   D_O v4 matches its inhomogeneous right-hand side
inline std::vector<SuiteResult> verify_ode(long base) {
    using verify_detail::first_mismatch;
    using verify_detail::lift_unit;
    std::vector<SuiteResult> results;
    const long w2_order = 2 * base;
    const long w3_order = base + base / 2;
    const long table_n = std::max(w2_order, w3_order) + 1;
    const auto even = jk_recurrence_chain(6, table_n);
    const auto odd = jk_recurrence_chain(5, table_n);
    auto table = [&](int k) -> const JTable& {
        return (k % 2 == 0) ? even.at(k) : odd.at(k);
    };

    {
        SuiteResult res{"heun_w2_annihilated", true, ""};
        const auto lhs = heun_apply(w_series(table(2), w2_order + 1));
        if (!lhs.is_zero()) {
            res.ok = false;
            std::string where;
            first_mismatch(lhs, TruncatedSeries<ZetaCombination>(lhs.order()), lhs.order(), where);
            res.detail = where;
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"heun_w3_gauss_rhs", true, ""};
        const auto lhs = heun_apply(w_series(table(3), w3_order + 1));
        auto rhs_r = hypergeometric_coeffs(Rational(1), Rational(1), make_rational(3, 2), w3_order);
        for (long n = 0; n <= rhs_r.order(); ++n) rhs_r[n] = rhs_r[n] / 2;
        const auto rhs = lift_unit(rhs_r);
        std::string where;
        if (!first_mismatch(lhs, rhs, w3_order, where)) { res.ok = false; res.detail = where; }
        // same series, expressed through the weight-1 values: J1(n+1)/4
        for (long n = 0; n <= rhs_r.order() && res.ok; ++n) {
            if (rhs_r[n] != j1_rational(n + 1) / 4) {
                res.ok = false;
                res.detail = "weight-1 cross-identity fails at order " + std::to_string(n);
            }
        }
        results.push_back(std::move(res));
    }
    for (int k = 4; k <= 6; ++k) {
        SuiteResult res{"heun_ladder_w" + std::to_string(k), true, ""};
        const auto lhs = heun_apply(w_series(table(k), base + 1));
        TruncatedSeries<ZetaCombination> rhs(base);
        for (long n = 0; n <= base; ++n) rhs[n] = table(k - 2).at(n + 1) * make_rational(1, 4);
        std::string where;
        if (!first_mismatch(lhs, rhs, base, where)) { res.ok = false; res.detail = where; }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"dw_g2_annihilated", true, ""};
        const auto lhs = dw_apply(g_series(table(2), base + 1));
        if (!lhs.is_zero()) { res.ok = false; res.detail = "nonzero result"; }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"dw_g3_geometric_rhs", true, ""};
        const auto lhs = dw_apply(g_series(table(3), base + 1));
        TruncatedSeries<ZetaCombination> rhs(base);
        for (long n = 0; n <= base; ++n)
            rhs[n] = verify_detail::zc_unit(Rational(n % 2 == 0 ? -2 : 2));
        std::string where;
        if (!first_mismatch(lhs, rhs, base, where)) { res.ok = false; res.detail = where; }
        results.push_back(std::move(res));
    }
    for (int k = 4; k <= 5; ++k) {
        SuiteResult res{"dw_ladder_g" + std::to_string(k), true, ""};
        const auto lhs = dw_apply(g_series(table(k), base + 1));
        const auto rhs = verify_detail::derivative(g_series(table(k - 2), base + 1));
        TruncatedSeries<ZetaCombination> rhs2(base);
        for (long n = 0; n <= base; ++n) rhs2[n] = rhs[n] * Rational(2);
        std::string where;
        if (!first_mismatch(lhs, rhs2, base, where)) { res.ok = false; res.detail = where; }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"gauss_polynomial_images", true, ""};
        const long n_top = (4 * base) / 5;
        for (long n = 0; n <= n_top && res.ok; ++n) {
            // p_n(z) = -4 (2n+1)^-2 binom(-1/2,n)^-2 sum_{k<=n} binom(-1/2,k)^2 z^k
            TruncatedSeries<Rational> pn(n + 1);
            const Rational scale = Rational(-4) * half_binomial_inv_sq(n) /
                                   Rational(BigInt(2 * n + 1) * (2 * n + 1));
            for (long j = 0; j <= n; ++j)
                pn[j] = scale * half_binomial(j) * half_binomial(j);
            const auto img = do_apply(pn);
            for (long j = 0; j <= n; ++j) {
                const Rational expect = (j == n) ? Rational(1) : Rational(0);
                if (img[j] != expect) {
                    res.ok = false;
                    res.detail = "p_" + std::to_string(n) + " image wrong at order " + std::to_string(j);
                    break;
                }
            }
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"gauss_homogeneous_solution", true, ""};
        const auto f = hypergeometric_coeffs(make_rational(1, 2), make_rational(1, 2),
                                             Rational(1), base + 1);
        if (!do_apply(f).is_zero()) { res.ok = false; res.detail = "nonzero image"; }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"mobius_w2_is_gauss", true, ""};
        const auto v2 = mobius_transform_w_to_v(w_series(table(2), base + 1), base + 1);
        TruncatedSeries<ZetaCombination> rhs(base + 1);
        for (long n = 0; n <= base + 1; ++n)
            rhs[n] = ZetaCombination::hurwitz_half(2, half_binomial(n) * half_binomial(n));
        std::string where;
        if (!first_mismatch(v2, rhs, base + 1, where)) { res.ok = false; res.detail = where; }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"mobius_v4_inhomogeneous", true, ""};
        const auto v4 = mobius_transform_w_to_v(w_series(table(4), base + 1), base + 1);
        const auto lhs = do_apply(v4);
        TruncatedSeries<ZetaCombination> rhs(base);
        for (long n = 0; n <= base; ++n) {
            ZetaCombination acc;
            for (long j = 0; j <= n; ++j) {
                Rational c(binomial(n, j));
                if (j % 2 == 0) c = -c;  // (-1)^(j+1)
                acc += table(2).at(j + 1) * c;
            }
            rhs[n] = acc * make_rational(1, 4);
        }
        std::string where;
        if (!first_mismatch(lhs, rhs, base, where)) { res.ok = false; res.detail = where; }
        results.push_back(std::move(res));
    }
    return results;
}

// Normalized layer: n = 1 normalizations, the basis decomposition of J_k,
// three-route agreement for the S_k sums, ascent-ladder checks, limits.
inline std::vector<SuiteResult> verify_decomposition(int k_max, long n_max) {
    std::vector<SuiteResult> results;
    const auto family = tj_family(std::max(k_max, 11), std::max<long>(2, std::min<long>(n_max, 2)));
    {
        SuiteResult res{"tj_n1_normalization", true, ""};
        // construction itself enforces tJ_{2m}(1) = 3/4^m, tJ_{2m+1}(1) = 2/4^m;
        // spell the values out anyway
        for (int m = 1; m <= 5 && res.ok; ++m) {
            if (family.at(2 * m).at(1) != make_rational(BigInt(3), pow_ui(BigInt(4), m)))
                { res.ok = false; res.detail = "even weight " + std::to_string(2 * m); }
            if (family.at(2 * m + 1).at(1) != make_rational(BigInt(2), pow_ui(BigInt(4), m)))
                { res.ok = false; res.detail = "odd weight " + std::to_string(2 * m + 1); }
        }
        results.push_back(std::move(res));
    }
    const auto tj_full = tj_family(k_max, n_max);
    {
        SuiteResult res{"decomposition_reconstructs_J", true, ""};
        auto ref_tables = jk_recurrence_chain(std::max(2, k_max - (k_max % 2)), n_max);
        if (k_max >= 3)
            ref_tables.merge(jk_recurrence_chain(k_max % 2 ? k_max : k_max - 1, n_max));
        for (int k = 2; k <= k_max && res.ok; ++k) {
            const JTable& ref = ref_tables.at(k);
            for (long n = 0; n <= n_max; ++n) {
                if (!(decompose(k, n, tj_full) == ref.at(n))) {
                    res.ok = false;
                    res.detail = "mismatch at (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
                    break;
                }
            }
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"s_poly_three_routes", true, ""};
        const long p_top = 30;
        for (int k = 2; k <= 8 && res.ok; ++k) {
            const auto rec = s_table_recursion(k, p_top);
            const auto def = s_table_definition(k, p_top);
            for (long p = 0; p <= p_top && res.ok; ++p) {
                if (rec[p] != def[p]) {
                    res.ok = false;
                    res.detail = "definition vs recursion at (k=" + std::to_string(k) +
                                 ", p=" + std::to_string(p) + ")";
                }
                const bool multisum_ok = (k % 2 == 0 && k >= 4) || (k % 2 == 1 && k >= 5);
                if (res.ok && multisum_ok) {
                    if (s_multisum(k, p) != rec[p]) {
                        res.ok = false;
                        res.detail = "multisum at (k=" + std::to_string(k) +
                                     ", p=" + std::to_string(p) + ")";
                    }
                }
            }
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"tj_equals_s_transform", true, ""};
        const long top = std::min<long>(n_max, 60);
        for (int k = 2; k <= std::min(k_max, 8) && res.ok; ++k) {
            const auto s = s_table_recursion(k, top);
            for (long n = 0; n <= top && res.ok; ++n) {
                Rational acc(0);
                for (long p = 0; p <= n; ++p) {
                    Rational c = half_binomial(p) * half_binomial(p) * Rational(binomial(n, p));
                    if (p % 2 == 1) c = -c;
                    acc += c * s[p];
                }
                if (acc != tj_full.at(k).at(n)) {
                    res.ok = false;
                    res.detail = "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
                }
            }
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"ascent_inverts_ladder", true, ""};
        const long top = std::min<long>(n_max, 60);
        for (int k : {1, 2, 4, 6}) {
            if (!ascent_recurrence_check(tj(k, top), top)) {
                res.ok = false;
                res.detail = "input weight " + std::to_string(k);
                break;
            }
        }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"s_even_limits", true, ""};
        if (!s_limit_check(1, 2000, 1e-3)) { res.ok = false; res.detail = "r=1"; }
        if (res.ok && !s_limit_check(2, 2000, 1e-4)) { res.ok = false; res.detail = "r=2"; }
        results.push_back(std::move(res));
    }
    {
        SuiteResult res{"weight1_collapse_identity", true, ""};
        for (long i = 0; i <= 50; ++i) {
            Rational acc(0);
            for (long j = 0; j <= i; ++j) {
                Rational c(binomial(i, j));
                if (j % 2 == 1) c = -c;
                acc += c * j1_rational(j + 1);
            }
            if (acc != make_rational(2, 2 * i + 1)) {
                res.ok = false;
                res.detail = "i=" + std::to_string(i);
                break;
            }
        }
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace aperylab
