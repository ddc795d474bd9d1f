#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "aperylab/numeric.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

// A finite rational linear combination of the symbols
//     unit (the plain rational 1)  and  zeta(m, 1/2) for m >= 2,
// stored canonically: no zero coefficients, map keyed by m with 0 = unit.
// This is the exact value space for the Apery-like sequences; the familiar
// zeta(m) basis is a display view (zeta(m,1/2) = (2^m - 1) zeta(m)).
class ZetaCombination {
public:
    static constexpr unsigned kUnit = 0;

    ZetaCombination() = default;

    static ZetaCombination unit(const Rational& c) { return term(kUnit, c); }

    static ZetaCombination hurwitz_half(unsigned m, const Rational& c = Rational(1)) {
        return term(m, c);
    }

    static ZetaCombination term(unsigned m, const Rational& c) {
        check_symbol(m);
        ZetaCombination z;
        if (c != 0) z.terms_[m] = c;
        return z;
    }

    const std::map<unsigned, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(unsigned m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    ZetaCombination& add_term(unsigned m, const Rational& c) {
        check_symbol(m);
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    ZetaCombination& operator+=(const ZetaCombination& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    ZetaCombination& operator-=(const ZetaCombination& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    ZetaCombination& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, coeff] : terms_) coeff *= c;
        }
        return *this;
    }

    friend ZetaCombination operator+(ZetaCombination a, const ZetaCombination& b) { return a += b; }
    friend ZetaCombination operator-(ZetaCombination a, const ZetaCombination& b) { return a -= b; }
    friend ZetaCombination operator*(ZetaCombination a, const Rational& c) { return a *= c; }
    friend ZetaCombination operator*(const Rational& c, ZetaCombination a) { return a *= c; }
    friend ZetaCombination operator-(ZetaCombination a) { return a *= Rational(-1); }

    bool operator==(const ZetaCombination&) const = default;

    // Coefficients on the zeta(m) basis: each zeta(m,1/2) picks up 2^m - 1.
    // Key 0 carries the rational unit term unchanged.
    std::map<unsigned, Rational> riemann_view() const {
        std::map<unsigned, Rational> out;
        for (const auto& [m, c] : terms_)
            out[m] = (m == kUnit) ? c : Rational(c * Rational(pow2(m) - 1));
        return out;
    }

    double eval(double tol) const {
        if (!(tol > 0)) throw std::invalid_argument("ZetaCombination::eval: tol must be > 0");
        if (terms_.empty()) return 0.0;
        const double budget = tol / static_cast<double>(terms_.size());
        long double total = 0.0L;
        for (const auto& [m, c] : riemann_view()) {
            const double cd = mpq_get_d(c.get_mpq_t());
            if (m == kUnit) {
                total += static_cast<long double>(cd);
            } else {
                const double mag = std::max(1.0, std::fabs(cd));
                total += static_cast<long double>(cd) * riemann_zeta_numeric(m, budget / mag);
            }
        }
        return static_cast<double>(total);
    }

    // {"unit": "a/b", "hurwitz_half": {"2": "a/b", ...}}, keys ascending in m.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["unit"] = to_fraction_string(coefficient(kUnit));
        nlohmann::ordered_json hh(nlohmann::json::value_t::object);
        for (const auto& [m, c] : terms_)
            if (m != kUnit) hh[std::to_string(m)] = to_fraction_string(c);
        j["hurwitz_half"] = hh;
        return j;
    }

    // Readable display in the zeta(m) basis, highest weight first:
    // "615/64*zeta(4) + 807/1024*zeta(2) + 1/2".
    std::string riemann_string() const {
        if (terms_.empty()) return "0";
        const auto view = riemann_view();
        std::string out;
        for (auto it = view.rbegin(); it != view.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (!out.empty()) {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            out += a.get_str();
            if (m != kUnit) out += "*zeta(" + std::to_string(m) + ")";
        }
        return out;
    }

private:
    static void check_symbol(unsigned m) {
        if (m == 1) throw std::invalid_argument("ZetaCombination: zeta(1, 1/2) diverges");
    }

    std::map<unsigned, Rational> terms_;
};

}  // namespace aperylab
