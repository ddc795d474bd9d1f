// aperylab: exact tables, identity suites, and congruence sweeps for the
// Apery and Apery-like sequences.
//
// Exit codes: 0 success, 1 mathematical failure (a broken identity or a
// congruence counterexample), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aperylab/apery_like.hpp"
#include "aperylab/classical_apery.hpp"
#include "aperylab/congruence.hpp"
#include "aperylab/normalized.hpp"
#include "aperylab/series_ops.hpp"
#include "aperylab/verify.hpp"

namespace {

using namespace aperylab;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct OutputSink {
    std::string path;  // empty = stdout

    int write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return kExitOk;
        }
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open --output path '" << path << "'\n";
            return kExitUsage;
        }
        out << payload;
        return kExitOk;
    }
};

int run_seq(const std::string& family, int k, long n_max, const std::string& format,
            const OutputSink& sink) {
    std::ostringstream body;
    const bool json = format == "json";

    auto emit_rationals = [&](const std::string& name, long first, const std::vector<Rational>& v) {
        if (json) {
            nlohmann::ordered_json j;
            j["family"] = name;
            if (name == "j" || name == "tj") j["k"] = k;
            j["n_max"] = static_cast<long>(v.size()) - 1;
            nlohmann::ordered_json vals = nlohmann::ordered_json::array();
            for (long n = 0; n < static_cast<long>(v.size()); ++n)
                vals.push_back(n < first ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(to_fraction_string(v[n])));
            j["values"] = vals;
            body << j.dump() << "\n";
        } else {
            body << "n,value\n";
            for (long n = first; n < static_cast<long>(v.size()); ++n)
                body << n << "," << to_fraction_string(v[n]) << "\n";
        }
    };

    if (family == "a2" || family == "b2" || family == "a3" || family == "b3") {
        const ApFamily f = family == "a2"   ? ApFamily::A2
                           : family == "b2" ? ApFamily::B2
                           : family == "a3" ? ApFamily::A3
                                            : ApFamily::B3;
        emit_rationals(family, 0, apery_rec(f, std::max(n_max, 1L)));
    } else if (family == "tj") {
        if (k < 1) {
            std::cerr << "error: --k must be >= 1 for --family tj\n";
            return kExitUsage;
        }
        const RationalSeq t = tj(k, std::max(n_max, 1L));
        emit_rationals("tj", t.first_index(), t.values);
    } else if (family == "j") {
        if (k < 2) {
            std::cerr << "error: --k must be >= 2 for --family j\n";
            return kExitUsage;
        }
        const JTable t = jk_recurrence(k, std::max(n_max, 1L));
        if (json) {
            nlohmann::ordered_json j;
            j["family"] = "j";
            j["k"] = k;
            j["n_max"] = t.n_max();
            nlohmann::ordered_json vals = nlohmann::ordered_json::array();
            for (long n = 0; n <= t.n_max(); ++n) vals.push_back(t.at(n).to_json());
            j["values"] = vals;
            body << j.dump() << "\n";
        } else {
            body << "n,riemann_basis\n";
            for (long n = 0; n <= t.n_max(); ++n) body << n << "," << t.at(n).riemann_string() << "\n";
        }
    } else {
        std::cerr << "error: unknown --family '" << family << "'\n";
        return kExitUsage;
    }
    return sink.write(body.str());
}

int run_eta(const std::string& which, long n_max, const std::string& format,
            const OutputSink& sink) {
    const EtaKind kind = which == "lambda" ? EtaKind::Lambda : EtaKind::Gamma;
    const auto eta = eta_coeffs(kind, n_max);
    std::ostringstream body;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["which"] = which;
        j["n_max"] = n_max;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (long n = 1; n <= n_max; ++n) coeffs.push_back(eta.at(n));
        j["coefficients"] = coeffs;  // index i holds the coefficient of q^(i+1)
        body << j.dump() << "\n";
    } else {
        body << "n,coefficient\n";
        for (long n = 1; n <= n_max; ++n) body << n << "," << eta.at(n) << "\n";
    }
    return sink.write(body.str());
}

int run_zetaq(int s, double alpha, double beta, double tol, const std::string& format,
              const OutputSink& sink) {
    if (!(alpha > 0) || !(beta > 0) || !(alpha * beta > 2.0)) {
        std::cerr << "error: --alpha and --beta must be positive with alpha*beta > 2 "
                     "(the g series converges only there)\n";
        return kExitUsage;
    }
    const ZetaQResult r = zeta_q(s, {alpha, beta}, tol);
    std::ostringstream body;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["s"] = s;
        j["alpha"] = alpha;
        j["beta"] = beta;
        j["z"] = r.z;
        j["value"] = r.value;
        j["g_series_route"] = r.g_series_route;
        j["g_closed_route"] = r.g_closed_route;
        j["route_delta"] = std::fabs(r.g_series_route - r.g_closed_route);
        j["tol"] = r.tol;
        body << j.dump() << "\n";
    } else {
        body.precision(15);
        body << "zeta_Q(" << s << ") = " << r.value << "   (requested tol " << tol << ")\n";
        body << "g series route  = " << r.g_series_route << "\n";
        body << "g closed route  = " << r.g_closed_route << "\n";
        body << "route delta     = " << std::fabs(r.g_series_route - r.g_closed_route) << "\n";
    }
    return sink.write(body.str());
}

int run_verify(const std::string& suite, int k_max, long n_max, long order,
               const OutputSink& sink) {
    std::vector<SuiteResult> results;
    auto append = [&](std::vector<SuiteResult> r) {
        results.insert(results.end(), std::make_move_iterator(r.begin()),
                       std::make_move_iterator(r.end()));
    };
    if (suite == "recurrence" || suite == "all") {
        append(verify_recurrence(k_max, n_max));
        append(verify_routes(std::min(k_max, 8), std::min<long>(n_max, 40)));
    }
    if (suite == "ode" || suite == "all") append(verify_ode(order));
    if (suite == "decomposition" || suite == "all") append(verify_decomposition(k_max, n_max));
    if (results.empty()) {
        std::cerr << "error: unknown --suite '" << suite << "'\n";
        return kExitUsage;
    }
    std::ostringstream body;
    bool ok = true;
    for (const auto& r : results) {
        body << (r.ok ? "ok   " : "FAIL ") << r.name;
        if (!r.ok) body << "  [" << r.detail << "]";
        body << "\n";
    }
    for (const auto& r : results) ok = ok && r.ok;
    body << (ok ? "all identities hold\n" : "identity failures present\n");
    const int rc = sink.write(body.str());
    if (rc != kExitOk) return rc;
    return ok ? kExitOk : kExitMathFailure;
}

int run_congruence(const std::string& check, const RunParams& params, const std::string& format,
                   int jobs, const OutputSink& sink) {
    std::vector<CheckId> ids;
    if (check == "all") {
        for (const auto& [id, name] : check_registry()) ids.push_back(id);
    } else {
        try {
            ids.push_back(check_from_name(check));
        } catch (const std::invalid_argument&) {
            std::cerr << "error: --check '" << check << "' is not in the registry\n";
            return kExitUsage;
        }
    }

    std::vector<std::vector<CongruenceReport>> all(ids.size());
    if (jobs > 1 && ids.size() > 1) {
        // deterministic: results land in registry order regardless of timing
        std::vector<std::future<std::vector<CongruenceReport>>> futs;
        futs.reserve(ids.size());
        for (CheckId id : ids)
            futs.push_back(std::async(std::launch::async, [id, &params] {
                return run_check(id, params);
            }));
        for (std::size_t i = 0; i < futs.size(); ++i) all[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < ids.size(); ++i) all[i] = run_check(ids[i], params);
    }

    std::ostringstream body;
    bool any_fail = false;
    if (format == "json") {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (const auto& rep : all[i]) body << report_to_json(rep).dump() << "\n";
    } else {
        body << "check,points,holds,fails,not_p_integral\n";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const auto s = summarize(check_name(ids[i]), all[i]);
            body << s.check << "," << s.points << "," << s.holds << "," << s.fails << ","
                 << s.not_p_integral << "\n";
        }
    }
    for (const auto& reports : all)
        for (const auto& rep : reports) any_fail = any_fail || (rep.status == CongruenceStatus::Fails);
    const int rc = sink.write(body.str());
    if (rc != kExitOk) return rc;
    if (any_fail) {
        std::cerr << "congruence FAILS encountered (counterexample or bug); see reports\n";
        return kExitMathFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Apery-like sequence laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--output may follow the subcommand

    int default_jobs = 1;
    if (const char* env = std::getenv("APERY_LAB_JOBS")) default_jobs = std::max(1, std::atoi(env));

    std::string format = "csv", output;
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output, "write to this path instead of stdout");

    auto* seq = app.add_subcommand("seq", "emit a sequence table");
    std::string family;
    int seq_k = 0;
    long seq_nmax = 10;
    seq->add_option("--family", family, "a2|b2|a3|b3|j|tj")->required();
    seq->add_option("--k", seq_k, "weight (required for j and tj)");
    seq->add_option("--n-max", seq_nmax, "largest index")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run exact identity suites");
    std::string suite = "all";
    int ver_kmax = 8;
    long ver_nmax = 100, ver_order = 100;
    verify->add_option("--suite", suite, "recurrence|ode|decomposition|all");
    verify->add_option("--k-max", ver_kmax)->check(CLI::Range(2, 12));
    verify->add_option("--n-max", ver_nmax)->check(CLI::PositiveNumber);
    verify->add_option("--order", ver_order)->check(CLI::PositiveNumber);

    auto* congruence = app.add_subcommand("congruence", "run congruence sweeps");
    std::string check = "all";
    RunParams params;
    int jobs = default_jobs;
    congruence->add_option("--check", check, "registry name or 'all'");
    congruence->add_option("--p-max", params.p_max)->check(CLI::PositiveNumber);
    congruence->add_option("--r-max", params.r_max)->check(CLI::Range(1, 6));
    congruence->add_option("--m-max", params.m_max)->check(CLI::PositiveNumber);
    congruence->add_option("--n-max", params.n_max)->check(CLI::PositiveNumber);
    congruence->add_option("--k-set", params.k_set, "weights 2k for CONJ_SUM_TJ2K");
    congruence->add_option("--jobs", jobs, "parallel checks (default $APERY_LAB_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    auto* zetaq = app.add_subcommand("zetaq", "evaluate the spectral special value");
    int s = 2;
    double alpha = 2.0, beta = 2.0, tol = 1e-10;
    zetaq->add_option("--s", s, "2 or 3")->check(CLI::IsMember({2, 3}));
    zetaq->add_option("--alpha", alpha)->required();
    zetaq->add_option("--beta", beta)->required();
    zetaq->add_option("--tol", tol)->check(CLI::PositiveNumber);

    auto* eta = app.add_subcommand("eta", "emit eta-product q-expansion coefficients");
    std::string which;
    long eta_nmax = 10;
    eta->add_option("--which", which, "lambda|gamma")
        ->required()
        ->check(CLI::IsMember({"lambda", "gamma"}));
    eta->add_option("--n-max", eta_nmax)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    const OutputSink sink{output};
    try {
        if (seq->parsed()) return run_seq(family, seq_k, seq_nmax, format, sink);
        if (verify->parsed()) return run_verify(suite, ver_kmax, ver_nmax, ver_order, sink);
        if (congruence->parsed()) return run_congruence(check, params, format, jobs, sink);
        if (zetaq->parsed()) return run_zetaq(s, alpha, beta, tol, format, sink);
        if (eta->parsed()) return run_eta(which, eta_nmax, format, sink);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
