// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and prime
// fields F_p with runtime modulus p > 3. A Scalar knows which field it lives
// in; mixing fields in one operation is an error. No operation ever rounds.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "exag/rng.hpp"

namespace exag {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid on (a, p); p is prime so gcd is 1.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p),
                 newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace detail

// Field descriptor: p == 0 selects the rationals, otherwise the prime field
// F_p. Primes must exceed 3 (short-Weierstrass curves need char != 2, 3).
struct Field {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field Q() { return Field{0}; }

    static Field Fp(std::uint64_t prime) {
        if (prime <= 3 || prime >= (1ull << 31))
            throw std::invalid_argument("prime field modulus must be a prime in (3, 2^31)");
        if (!detail::is_prime_u64(prime))
            throw std::invalid_argument("prime field modulus is not prime");
        return Field{prime};
    }

    // "Q" or "Fp:10007"
    static Field parse(std::string_view s) {
        if (s == "Q") return Q();
        if (s.rfind("Fp:", 0) == 0) {
            std::uint64_t prime = 0;
            for (char c : s.substr(3)) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("bad field descriptor: " + std::string(s));
                prime = prime * 10 + static_cast<std::uint64_t>(c - '0');
                if (prime >= (1ull << 31)) throw std::invalid_argument("field modulus too large");
            }
            return Fp(prime);
        }
        throw std::invalid_argument("bad field descriptor: " + std::string(s));
    }

    std::string str() const {
        return is_rational() ? "Q" : "Fp:" + std::to_string(p);
    }
};

class Scalar {
public:
    Scalar() : p_(0), r_(0), q_(0) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }

    static Scalar from_int(const Field& f, long v) {
        Scalar s;
        s.p_ = f.p;
        if (f.is_rational()) {
            s.q_ = Rational(v);
        } else {
            long m = v % static_cast<long>(f.p);
            if (m < 0) m += static_cast<long>(f.p);
            s.r_ = static_cast<std::uint64_t>(m);
        }
        return s;
    }

    static Scalar from_rational(const Field& f, const Rational& q) {
        Scalar s;
        s.p_ = f.p;
        if (f.is_rational()) {
            s.q_ = q;
            s.q_.canonicalize();
        } else {
            Int num = q.get_num(), den = q.get_den();
            std::uint64_t n = mod_of(num, f.p);
            std::uint64_t d = mod_of(den, f.p);
            s.r_ = detail::mulmod(n, detail::invmod(d, f.p), f.p);
        }
        return s;
    }

    // Parses "-3", "5/7". Residues reduce mod p.
    static Scalar parse(const Field& f, std::string_view text) {
        std::string t(text);
        auto slash = t.find('/');
        Rational q;
        try {
            if (slash == std::string::npos) {
                q = Rational(Int(t));
            } else {
                q = Rational(Int(t.substr(0, slash)), Int(t.substr(slash + 1)));
                q.canonicalize();
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad scalar literal: " + t);
        }
        return from_rational(f, q);
    }

    Field field() const { return Field{p_}; }
    bool is_zero() const { return p_ ? r_ == 0 : q_ == 0; }

    // Exposed for serialization and the occasional direct inspection.
    const Rational& rational() const {
        require(p_ == 0, "scalar is not rational");
        return q_;
    }
    std::uint64_t residue() const {
        require(p_ != 0, "scalar is not a prime-field residue");
        return r_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        Scalar s = a;
        if (a.p_) {
            s.r_ += b.r_;
            if (s.r_ >= a.p_) s.r_ -= a.p_;
        } else {
            s.q_ += b.q_;
        }
        return s;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        Scalar s = a;
        if (a.p_) {
            s.r_ = s.r_ >= b.r_ ? s.r_ - b.r_ : s.r_ + a.p_ - b.r_;
        } else {
            s.q_ -= b.q_;
        }
        return s;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        Scalar s = a;
        if (a.p_) {
            s.r_ = detail::mulmod(s.r_, b.r_, a.p_);
        } else {
            s.q_ *= b.q_;
        }
        return s;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        if (b.is_zero()) throw std::domain_error("scalar division by zero");
        Scalar s = a;
        if (a.p_) {
            s.r_ = detail::mulmod(s.r_, detail::invmod(b.r_, a.p_), a.p_);
        } else {
            s.q_ /= b.q_;
        }
        return s;
    }

    Scalar operator-() const {
        Scalar s = *this;
        if (p_) {
            if (s.r_) s.r_ = p_ - s.r_;
        } else {
            s.q_ = -s.q_;
        }
        return s;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const { return one(field()) / *this; }

    Scalar pow(unsigned long e) const {
        Scalar r = one(field()), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order usable as a container key; not a field-compatible order.
    int cmp(const Scalar& b) const {
        check_same(b);
        if (p_) return r_ < b.r_ ? -1 : (r_ > b.r_ ? 1 : 0);
        return ::cmp(q_, b.q_);
    }

    std::string str() const {
        if (p_) return std::to_string(r_);
        return q_.get_str();
    }

private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::logic_error(msg);
    }

    static std::uint64_t mod_of(const Int& v, std::uint64_t p) {
        Int m = v % static_cast<unsigned long>(p);
        if (m < 0) m += static_cast<unsigned long>(p);
        return m.get_ui();
    }

    void check_same(const Scalar& b) const {
        if (p_ != b.p_) throw std::invalid_argument("scalars from different fields");
    }

    std::uint64_t p_; // 0 = rational
    std::uint64_t r_; // residue when p_ != 0
    Rational q_;      // value when p_ == 0
};

// Uniform field element; over Q draws a small integer in [-9, 9].
inline Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.is_rational())
        return Scalar::from_int(f, static_cast<long>(rng.below(19)) - 9);
    return Scalar::from_int(f, static_cast<long>(rng.below(f.p)));
}

inline Scalar random_nonzero_scalar(const Field& f, Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(f, rng);
        if (!s.is_zero()) return s;
    }
}

// Square root in F_p (Tonelli-Shanks); empty result when not a square.
inline bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& out) {
    using namespace detail;
    a %= p;
    if (a == 0) {
        out = 0;
        return true;
    }
    if (powmod(a, (p - 1) / 2, p) != 1) return false;
    if (p % 4 == 3) {
        out = powmod(a, (p + 1) / 4, p);
        return true;
    }
    // General Tonelli-Shanks.
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = powmod(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    out = r;
    return true;
}

} // namespace exag
