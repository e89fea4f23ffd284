// Dense univariate polynomials over an exact field scalar.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exag/field.hpp"

namespace exag {

class Poly {
public:
    explicit Poly(const Field& f) : f_(f) {}

    static Poly zero(const Field& f) { return Poly(f); }

    static Poly constant(const Scalar& c) {
        Poly p(c.field());
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }

    static Poly from_coeffs(const Field& f, std::vector<Scalar> coeffs) {
        Poly p(f);
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // x - x0 when shift given, else x.
    static Poly x_minus(const Scalar& x0) {
        Poly p(x0.field());
        p.c_ = {-x0, Scalar::one(x0.field())};
        p.trim();
        return p;
    }

    static Poly x(const Field& f) {
        Poly p(f);
        p.c_ = {Scalar::zero(f), Scalar::one(f)};
        return p;
    }

    const Field& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Scalar::zero(f_);
    }
    const Scalar& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(a.f_);
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) + b.coeff(i));
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r(a.f_);
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) - b.coeff(i));
        r.trim();
        return r;
    }

    Poly operator-() const {
        Poly r(f_);
        r.c_.reserve(c_.size());
        for (const Scalar& s : c_) r.c_.push_back(-s);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.f_);
        Poly r(a.f_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.f_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Scalar& s) {
        if (s.is_zero()) return Poly(a.f_);
        Poly r = a;
        for (Scalar& c : r.c_) c *= s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q(a.f_), r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.c_.assign(a.c_.size() - b.c_.size() + 1, Scalar::zero(a.f_));
        Scalar inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Scalar f = r.leading() * inv;
            q.c_[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r.c_[shift + i] -= f * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    static Poly div_exact(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    Poly make_monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    // Monic gcd; the zero polynomial acts as the neutral input.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.make_monic();
    }

    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.f_);
        return div_exact(a * b, gcd(a, b)).make_monic();
    }

    Scalar eval(const Scalar& x0) const {
        Scalar v = Scalar::zero(f_);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x0 + c_[i];
        return v;
    }

    Poly derivative() const {
        Poly r(f_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(c_[i] * Scalar::from_int(f_, static_cast<long>(i)));
        r.trim();
        return r;
    }

    // Multiplicity of the root x0 together with the quotient by (x-x0)^mult.
    std::pair<long, Poly> order_at(const Scalar& x0) const {
        if (is_zero()) throw std::domain_error("order of zero polynomial");
        long ord = 0;
        Poly cur = *this;
        Poly lin = Poly::x_minus(x0);
        while (cur.eval(x0).is_zero()) {
            cur = div_exact(cur, lin);
            ++ord;
        }
        return {ord, cur};
    }

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].str();
            if (i >= 1) out += std::string("*") + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field f_;
    std::vector<Scalar> c_; // c_[i] multiplies x^i; no trailing zeros
};

} // namespace exag
