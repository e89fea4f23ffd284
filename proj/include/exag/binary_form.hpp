// Homogeneous binary forms in two formal variables s, t. A form of degree n
// stores coefficients c_0..c_n meaning sum c_i s^(n-i) t^i. Gcds run through
// the dehomogenization chart at t = 1 after splitting off the common power
// of t, and are normalized monic in s when possible, else in t.
#pragma once

#include <stdexcept>
#include <vector>

#include "exag/poly.hpp"

namespace exag {

class BinaryForm {
public:
    static BinaryForm zero(const Field& f) { return BinaryForm(f); }

    static BinaryForm from_coeffs(const Field& f, std::vector<Scalar> coeffs) {
        BinaryForm b(f);
        if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
        bool all_zero = true;
        for (const Scalar& c : coeffs) all_zero = all_zero && c.is_zero();
        if (!all_zero) b.c_ = std::move(coeffs);
        return b;
    }

    const Field& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Scalar coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Scalar::zero(f_);
    }

    Scalar eval(const Scalar& s, const Scalar& t) const {
        Scalar v = Scalar::zero(f_);
        // Horner in t with the s-powers accumulated separately.
        Scalar spow = Scalar::one(f_);
        std::vector<Scalar> spows;
        spows.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            spows.push_back(spow);
            spow *= s;
        }
        Scalar tpow = Scalar::one(f_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            v += c_[i] * spows[c_.size() - 1 - i] * tpow;
            tpow *= t;
        }
        return v;
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() || b.is_zero()) return BinaryForm(a.f_);
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.f_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return from_coeffs(a.f_, std::move(c));
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.c_.size() == b.c_.size() &&
               [&] {
                   for (std::size_t i = 0; i < a.c_.size(); ++i)
                       if (a.c_[i] != b.c_[i]) return false;
                   return true;
               }();
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    // Number of leading zero coefficients = multiplicity of the factor t.
    std::size_t t_multiplicity() const {
        std::size_t m = 0;
        while (m < c_.size() && c_[m].is_zero()) ++m;
        return m;
    }

    // Dehomogenize at t = 1 after removing the t^m factor; the result has
    // degree exactly deg - m with nonzero leading coefficient.
    Poly dehomogenized() const {
        if (is_zero()) return Poly::zero(f_);
        std::size_t m = t_multiplicity();
        std::vector<Scalar> p(c_.size() - m);
        // c_[i] multiplies s^(n-i); as a polynomial in s that is degree n-i.
        for (std::size_t i = m; i < c_.size(); ++i)
            p[c_.size() - 1 - i] = c_[i];
        return Poly::from_coeffs(f_, std::move(p));
    }

    // Homogenize a polynomial in s to a form of degree deg(p) + extra_t
    // powers of t.
    static BinaryForm homogenize(const Poly& p, std::size_t t_power) {
        if (p.is_zero()) return BinaryForm(p.field());
        std::size_t n = static_cast<std::size_t>(p.degree()) + t_power;
        std::vector<Scalar> c(n + 1, Scalar::zero(p.field()));
        for (long i = 0; i <= p.degree(); ++i)
            c[t_power + static_cast<std::size_t>(p.degree() - i)] = p.coeff(static_cast<std::size_t>(i));
        return from_coeffs(p.field(), std::move(c));
    }

    static BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() && b.is_zero())
            throw std::invalid_argument("gcd of two zero forms");
        if (a.is_zero()) return b.normalized();
        if (b.is_zero()) return a.normalized();
        std::size_t ta = a.t_multiplicity(), tb = b.t_multiplicity();
        Poly g = Poly::gcd(a.dehomogenized(), b.dehomogenized());
        return homogenize(g, std::min(ta, tb)).normalized();
    }

    // Exact divisibility test via the chart decomposition.
    static bool divides(const BinaryForm& d, const BinaryForm& a) {
        if (d.is_zero()) return a.is_zero();
        if (a.is_zero()) return true;
        if (d.t_multiplicity() > a.t_multiplicity()) return false;
        return Poly::divrem(a.dehomogenized(), d.dehomogenized()).second.is_zero();
    }

    // Scale so the first nonzero coefficient (the s-leading one of the
    // t-free part) becomes 1.
    BinaryForm normalized() const {
        if (is_zero()) return *this;
        return *this * c_[t_multiplicity()].inverse();
    }

    friend BinaryForm operator*(const BinaryForm& a, const Scalar& s) {
        if (s.is_zero()) return BinaryForm(a.f_);
        BinaryForm r = a;
        for (Scalar& c : r.c_) c *= s;
        return r;
    }

private:
    explicit BinaryForm(const Field& f) : f_(f) {}

    Field f_;
    std::vector<Scalar> c_; // empty = zero form
};

// Recover a degree-n form from its values at the chart points (x_i, 1).
// Needs n+1 points with distinct x_i.
inline BinaryForm interpolate_form(const Field& f, long n,
                                   const std::vector<Scalar>& xs,
                                   const std::vector<Scalar>& vals) {
    if (xs.size() != vals.size() || static_cast<long>(xs.size()) != n + 1)
        throw std::invalid_argument("interpolation needs n+1 samples");
    // Lagrange interpolation of p(x) = F(x, 1), then c_i = [x^(n-i)] p.
    Poly p = Poly::zero(f);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly li = Poly::constant(Scalar::one(f));
        Scalar denom = Scalar::one(f);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * Poly::x_minus(xs[j]);
            denom *= xs[i] - xs[j];
        }
        p = p + li * (vals[i] / denom);
    }
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar::zero(f));
    for (long i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(n - i));
    return BinaryForm::from_coeffs(f, std::move(c));
}

} // namespace exag
