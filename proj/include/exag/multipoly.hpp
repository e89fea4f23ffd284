// Multivariate polynomials in formal variables c_1, c_2, ... with rational
// coefficients. Terms are kept in a map keyed by exponent vectors (trailing
// zeros trimmed) under lexicographic order, so equality is coefficientwise
// on a canonical form. Variable c_i carries weight i; the universal
// polynomials of a multiplicative sequence are weighted-homogeneous.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exag/field.hpp"
#include "exag/series.hpp"

namespace exag {

class MultiPoly {
public:
    using Expo = std::vector<unsigned>; // expo[j] = exponent of c_(j+1)

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }

    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        if (c != 0) p.t_[Expo{}] = c;
        return p;
    }

    // The variable c_i, i >= 1.
    static MultiPoly var(unsigned i) {
        if (i == 0) throw std::invalid_argument("variables are indexed from 1");
        MultiPoly p;
        Expo e(i, 0);
        e[i - 1] = 1;
        p.t_[std::move(e)] = 1;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second == 1;
    }

    // Every coefficient an integer?
    bool has_integer_coeffs() const {
        for (const auto& [e, c] : t_)
            if (c.get_den() != 1) return false;
        return true;
    }

    long weighted_degree() const {
        long best = -1;
        for (const auto& [e, c] : t_) {
            long w = 0;
            for (std::size_t j = 0; j < e.size(); ++j)
                w += static_cast<long>(j + 1) * e[j];
            best = std::max(best, w);
        }
        return best;
    }

    bool is_weighted_homogeneous(long w) const {
        for (const auto& [e, c] : t_) {
            long d = 0;
            for (std::size_t j = 0; j < e.size(); ++j)
                d += static_cast<long>(j + 1) * e[j];
            if (d != w) return false;
        }
        return true;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Expo e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t j = 0; j < ea.size(); ++j) e[j] += ea[j];
                for (std::size_t j = 0; j < eb.size(); ++j) e[j] += eb[j];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
        MultiPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.t_) r.t_[e] = c * s;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return a.t_ != b.t_; }

    // Evaluate with vals[j] the value of c_(j+1); conv maps a Rational
    // coefficient into the target ring.
    template <typename F, typename Conv>
    F eval(const std::vector<F>& vals, const F& zero, Conv conv) const {
        F acc = zero;
        for (const auto& [e, c] : t_) {
            if (e.size() > vals.size())
                throw std::invalid_argument("not enough values for evaluation");
            F term = conv(c);
            for (std::size_t j = 0; j < e.size(); ++j)
                for (unsigned rep = 0; rep < e[j]; ++rep) term = term * vals[j];
            acc = acc + term;
        }
        return acc;
    }

    Rational eval_rational(const std::vector<Rational>& vals) const {
        return eval<Rational>(vals, Rational(0), [](const Rational& c) { return c; });
    }

    Scalar eval_scalar(const std::vector<Scalar>& vals, const Field& f) const {
        return eval<Scalar>(vals, Scalar::zero(f), [&](const Rational& c) {
            return Scalar::from_rational(f, c);
        });
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : t_) {
            if (!out.empty()) out += " + ";
            out += c.get_str();
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] == 0) continue;
                out += "*c" + std::to_string(j + 1);
                if (e[j] > 1) out += "^" + std::to_string(e[j]);
            }
        }
        return out;
    }

private:
    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        Expo key = e;
        while (!key.empty() && key.back() == 0) key.pop_back();
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    std::map<Expo, Rational> t_;
};

template <>
struct RingOps<MultiPoly> {
    static MultiPoly zero(const MultiPoly&) { return MultiPoly::zero(); }
    static MultiPoly one(const MultiPoly&) { return MultiPoly::constant(1); }
    static MultiPoly mul_int(const MultiPoly& x, long m) {
        return x * Rational(m);
    }
    static MultiPoly div_int(const MultiPoly& x, long m) {
        if (m == 0) throw std::domain_error("division by zero");
        Rational inv(1, m);
        inv.canonicalize();
        return x * inv;
    }
    static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
};

} // namespace exag
