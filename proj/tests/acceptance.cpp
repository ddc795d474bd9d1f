// Acceptance suite: one line per criterion, PASS/FAIL with wall time.
// Every tolerance and range is pinned here; exit code is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aperylab/apery_like.hpp"
#include "aperylab/congruence.hpp"
#include "aperylab/normalized.hpp"
#include "aperylab/series_ops.hpp"
#include "aperylab/verify.hpp"

using namespace aperylab;

namespace {

struct Criterion {
    std::string label;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool suites_ok(const std::vector<SuiteResult>& rs, std::string& why) {
    for (const auto& r : rs) {
        if (!r.ok) {
            why = r.name + ": " + r.detail;
            return false;
        }
    }
    return true;
}

bool sweep_clean(CheckId id, const RunParams& params, std::string& why, long* npi = nullptr) {
    const auto reports = run_check(id, params);
    if (reports.empty()) {
        why = std::string(check_name(id)) + ": empty grid";
        return false;
    }
    for (const auto& rep : reports) {
        if (rep.status == CongruenceStatus::Fails) {
            why = std::string(check_name(id)) + " FAILS at p=" + std::to_string(rep.p) +
                  " r=" + std::to_string(rep.r) + " m=" + std::to_string(rep.m) +
                  " n=" + std::to_string(rep.n);
            return false;
        }
        if (npi && rep.status == CongruenceStatus::NotPIntegral) ++*npi;
    }
    return true;
}

// 1. published values, bit-exact in the zeta(m) display basis
bool criterion_published_values(std::string& why) {
    const auto [j20, j21] = jk_initial(2);
    const auto [j30, j31] = jk_initial(3);
    bool ok = j20.riemann_string() == "3*zeta(2)" && j21.riemann_string() == "9/4*zeta(2)" &&
              j30.riemann_string() == "7*zeta(3)" &&
              j31.riemann_string() == "21/4*zeta(3) + 1/2";
    const JTable t4 = jk_recurrence(4, 4);
    const char* expected4[] = {
        "15*zeta(4)",
        "45/4*zeta(4) + 9/16*zeta(2)",
        "615/64*zeta(4) + 807/1024*zeta(2)",
        "2205/256*zeta(4) + 3745/4096*zeta(2)",
        "129735/16384*zeta(4) + 1044135/1048576*zeta(2)",
    };
    for (long n = 0; n <= 4; ++n) ok = ok && t4.at(n).riemann_string() == expected4[n];
    const JTable t2 = jk_recurrence(2, 4);
    const char* expected2[] = {"9/4*zeta(2)", "123/64*zeta(2)", "441/256*zeta(2)",
                               "25947/16384*zeta(2)"};
    for (long n = 1; n <= 4; ++n) ok = ok && t2.at(n).riemann_string() == expected2[n - 1];
    if (!ok) why = "a published value differs";
    return ok;
}

// 2. three-term ladder on independently built tables
bool criterion_ladder(std::string& why) { return suites_ok(verify_recurrence(8, 100), why); }

// 3. exact route equivalence
bool criterion_routes(std::string& why) { return suites_ok(verify_routes(8, 40), why); }

// 4. differential-equation suites
bool criterion_ode(std::string& why) { return suites_ok(verify_ode(100), why); }

// 5. normalized layer
bool criterion_normalized(std::string& why) { return suites_ok(verify_decomposition(8, 60), why); }

// 6. infinite-series oracle vs exact evaluation
bool criterion_series_oracle(std::string& why) {
    for (int k = 2; k <= 5; ++k) {
        const JTable t = jk_recurrence(k, 10);
        for (long n = 0; n <= 10; ++n) {
            const long L = series_truncation_for(k, n, 4e-7);
            const double numeric = jk_series_numeric(k, n, L);
            const double exact = t.at(n).eval(1e-9);
            if (std::fabs(exact - numeric) >= 1e-6) {
                why = "grid point (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                      "): |" + std::to_string(exact) + " - " + std::to_string(numeric) + "| >= 1e-6";
                return false;
            }
        }
    }
    return true;
}

// 7. proven congruences, zero FAILS anywhere
bool criterion_proven_congruences(std::string& why) {
    return sweep_clean(CheckId::ParyA2, {.p_max = 31, .n_max = 2000}, why) &&
           sweep_clean(CheckId::ParyA3, {.p_max = 31, .n_max = 2000}, why) &&
           sweep_clean(CheckId::ParyTj2, {.p_max = 31, .n_max = 2000}, why) &&
           sweep_clean(CheckId::BeukersA2, {.p_max = 97, .r_max = 2, .m_max = 3}, why) &&
           sweep_clean(CheckId::BeukersA3, {.p_max = 97, .r_max = 2, .m_max = 3}, why) &&
           sweep_clean(CheckId::AsdA2, {.p_max = 50, .r_max = 3, .m_max = 3}, why) &&
           sweep_clean(CheckId::AsdA3, {.p_max = 50, .r_max = 3, .m_max = 3}, why) &&
           sweep_clean(CheckId::ScaleTj2, {.p_max = 31, .r_max = 2, .m_max = 3}, why) &&
           sweep_clean(CheckId::SumTj2, {.p_max = 199}, why) &&
           sweep_clean(CheckId::HalfTj2A2, {.p_max = 97}, why) &&
           sweep_clean(CheckId::SuperA2Lambda, {.p_max = 97}, why) &&
           sweep_clean(CheckId::Mortenson, {.p_max = 97}, why) &&
           sweep_clean(CheckId::OsHalf, {.p_max = 97}, why);
}

// 8. conjecture falsification sweeps, zero FAILS reported
bool criterion_conjectures(std::string& why) {
    long npi = 0;
    const bool ok =
        sweep_clean(CheckId::ConjSumsq, {.p_max = 97}, why, &npi) &&
        sweep_clean(CheckId::ConjKo, {.p_max = 31, .r_max = 2, .m_max = 3}, why, &npi) &&
        sweep_clean(CheckId::ConjAsdTj2, {.p_max = 31, .r_max = 3, .m_max = 3}, why, &npi) &&
        sweep_clean(CheckId::ConjSumTj2k, {.p_max = 61, .k_set = {2, 3}}, why, &npi);
    if (ok && npi > 0) std::printf("        (conjecture sweeps: %ld NOT_P_INTEGRAL points)\n", npi);
    return ok;
}

// 9. eta layer
bool criterion_eta(std::string& why) {
    const long N = 10000;
    for (EtaKind kind : {EtaKind::Lambda, EtaKind::Gamma}) {
        const auto fast = eta_coeffs(kind, N, EtaAlgorithm::Pentagonal);
        const auto slow = eta_coeffs(kind, N, EtaAlgorithm::NaiveProduct);
        if (fast.coeffs != slow.coeffs) {
            why = "dual eta algorithms disagree";
            return false;
        }
    }
    const auto lambda = eta_coeffs(EtaKind::Lambda, N);
    if (lambda.at(5) != -6) { why = "lambda_5 != -6"; return false; }
    for (long n = 1; n <= N; ++n)
        if (n % 4 != 1 && lambda.at(n) != 0) { why = "lambda support leak"; return false; }
    if (eta_coeffs(EtaKind::Gamma, 10).at(1) != 1) { why = "gamma_1 != 1"; return false; }
    return true;
}

// 10. spectral special values: properties only (no independent ground truth)
bool criterion_zeta_q(std::string& why) {
    const double pi = 3.14159265358979323846;
    for (int s : {2, 3}) {
        // alpha <-> beta symmetry
        const auto a = zeta_q(s, {2.6, 1.1}, 1e-10);
        const auto b = zeta_q(s, {1.1, 2.6}, 1e-10);
        if (std::fabs(a.value - b.value) > 1e-12 * std::fabs(a.value)) {
            why = "symmetry breaks at s=" + std::to_string(s);
            return false;
        }
        // dual g-route agreement
        for (double al : {3.0, 2.2, 5.5}) {
            const auto r = zeta_q(s, {al, 1.3}, 1e-9);
            if (std::fabs(r.g_series_route - r.g_closed_route) >= 1e-8) {
                why = "g routes differ at s=" + std::to_string(s);
                return false;
            }
        }
        // alpha = beta degenerate closed form
        const double alpha = 2.0;
        const double ab = alpha * alpha;
        const auto d = zeta_q(s, {alpha, alpha}, 1e-10);
        const double pref = (2.0 * alpha) / (2.0 * std::sqrt(ab * (ab - 1.0)));
        const double zs = (s == 2) ? pi * pi / 6.0 : 1.2020569031595942853997;
        const double closed = 2.0 * std::pow(pref, s) * (std::pow(2.0, s) - 1.0) * zs;
        if (std::fabs(d.value - closed) > 1e-9) {
            why = "degenerate closed form differs at s=" + std::to_string(s);
            return false;
        }
    }
    // monotone truncation convergence of the alternating g series at z = 1/2
    {
        const double z = 0.5;
        const JTable t = jk_recurrence(2, 62);
        const double zeta2 = pi * pi / 6.0;
        std::vector<double> partial;
        double acc = 0.0, zn = 1.0;
        for (long n = 0; n <= 60; ++n) {
            acc += mpq_get_d(half_binomial(n).get_mpq_t()) *
                   (3.0 * zeta2 * mpq_get_d(t.at(n).coefficient(2).get_mpq_t())) * zn;
            zn *= z;
            partial.push_back(acc);
        }
        const double limit = partial.back();
        double prev = std::fabs(partial[0] - limit);
        for (std::size_t i = 1; i + 5 < partial.size(); ++i) {
            const double cur = std::fabs(partial[i] - limit);
            if (cur > prev + 1e-15) {
                why = "truncation error not monotone at N=" + std::to_string(i);
                return false;
            }
            prev = cur;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1. published initial values and weight-4 table, exact", 1.0, criterion_published_values},
        {"2. three-term ladder, k in 4..8, n <= 100, plus seeds to k = 12", 30.0, criterion_ladder},
        {"3. route equivalence (closed / recurrence / inductive), n <= 40", 30.0, criterion_routes},
        {"4. differential-equation suites, exact", 60.0, criterion_ode},
        {"5. normalized layer: normalizations, decomposition, S routes, limits", 60.0,
         criterion_normalized},
        {"6. infinite-series oracle within 1e-6 on k in 2..5, n <= 10", 30.0,
         criterion_series_oracle},
        {"7. proven congruence sweeps, zero FAILS", 600.0, criterion_proven_congruences},
        {"8. conjecture falsification sweeps, zero FAILS", 600.0, criterion_conjectures},
        {"9. eta expansions: dual algorithms to N = 10000, support, spot values", 10.0,
         criterion_eta},
        {"10. spectral value properties: symmetry, degenerate form, dual routes", 60.0,
         criterion_zeta_q},
    };

    int failures = 0;
    for (auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > c.time_limit_s) {
            ok = false;
            if (!why.empty()) why += "; ";
            why += "over time limit";
        }
        std::printf("%s  %s  (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.label.c_str(), dt,
                    c.time_limit_s);
        if (!ok) {
            std::printf("      reason: %s\n", why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
