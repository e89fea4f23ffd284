// Intersection theory of a projective bundle over a projective space.
//
// Classes live in the bigraded ring Z[h, zeta] / (h^d, R) where h is the
// hyperplane pullback of the P^(d-1) base, zeta the tautological class of the
// rank-r bundle being projectivized, and R the Chern relation
//   zeta^r + g_1 h zeta^(r-1) + ... + g_r h^r = 0.
// Intersection numbers are the top-cell coefficients after reduction.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "exag/multipoly.hpp"
#include "exag/series.hpp"

namespace exag {

// Dimensions of a quotient-bundle setup: base P^(d-1), ambient dimension
// dprime, subbundle rank k, quotient rank r = dprime - k.
struct BundleShape {
    long d = 2;
    long dprime = 3;
    long k = 1;

    long r() const { return dprime - k; }

    void validate() const {
        if (d < 2) throw std::invalid_argument("need d >= 2");
        if (k < 1) throw std::invalid_argument("need k >= 1");
        if (dprime < d + k - 1)
            throw std::invalid_argument("need dprime >= d + k - 1 (existence bound)");
        if (r() < 1) throw std::invalid_argument("need quotient rank >= 1");
    }
};

// Chern coefficients g_1..g_(d-1) of the quotient bundle: the expansion of
// (1 - u)^(-k), truncated where classes on P^(d-1) vanish.
inline std::vector<Int> total_chern_quotient(const BundleShape& shape) {
    shape.validate();
    std::vector<Int> g;
    g.reserve(static_cast<std::size_t>(shape.d - 1));
    for (long i = 1; i <= shape.d - 1; ++i) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(shape.k + i - 1),
                     static_cast<unsigned long>(i));
        g.push_back(b);
    }
    return g;
}

// Dual bundle sign rule: entry i picks up (-1)^i.
inline std::vector<Int> dual_chern(std::vector<Int> g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i % 2 == 0) g[i] = -g[i];
    return g;
}

class ChowClass {
public:
    // Relation coefficients beyond degree d-1 are irrelevant (they multiply
    // h powers that vanish); the list may have any length up to d-1.
    ChowClass(const BundleShape& shape, std::vector<Int> chern)
        : sh_(shape), gamma_(std::move(chern)),
          g_(static_cast<std::size_t>(shape.d * shape.r()), Int(0)) {
        shape.validate();
        if (static_cast<long>(gamma_.size()) > sh_.d - 1)
            gamma_.resize(static_cast<std::size_t>(sh_.d - 1));
    }

    static ChowClass zero(const BundleShape& shape, std::vector<Int> chern) {
        return ChowClass(shape, std::move(chern));
    }

    static ChowClass one(const BundleShape& shape, std::vector<Int> chern) {
        return monomial(shape, std::move(chern), 0, 0);
    }

    // The reduced class of h^i zeta^j for arbitrary non-negative i, j.
    static ChowClass monomial(const BundleShape& shape, std::vector<Int> chern,
                              long i, long j) {
        ChowClass c(shape, std::move(chern));
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
        if (i >= shape.d) return c;
        std::size_t width = static_cast<std::size_t>(std::max(j + 1, shape.r()));
        std::vector<std::vector<Int>> grid(static_cast<std::size_t>(shape.d),
                                           std::vector<Int>(width, Int(0)));
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        c.reduce_from(grid);
        return c;
    }

    const BundleShape& shape() const { return sh_; }
    const std::vector<Int>& chern() const { return gamma_; }

    const Int& coeff(long i, long j) const {
        if (i < 0 || i >= sh_.d || j < 0 || j >= sh_.r())
            throw std::out_of_range("chow coefficient index");
        return g_[static_cast<std::size_t>(i * sh_.r() + j)];
    }
    Int& coeff_mut(long i, long j) {
        return g_[static_cast<std::size_t>(i * sh_.r() + j)];
    }

    // Degree of a top-dimensional class.
    const Int& top_coeff() const { return coeff(sh_.d - 1, sh_.r() - 1); }

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
        a.check_compatible(b);
        ChowClass r = a;
        for (std::size_t i = 0; i < r.g_.size(); ++i) r.g_[i] += b.g_[i];
        return r;
    }

    friend ChowClass operator-(const ChowClass& a, const ChowClass& b) {
        a.check_compatible(b);
        ChowClass r = a;
        for (std::size_t i = 0; i < r.g_.size(); ++i) r.g_[i] -= b.g_[i];
        return r;
    }

    friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
        a.check_compatible(b);
        long r = a.sh_.r();
        std::vector<std::vector<Int>> grid(
            static_cast<std::size_t>(a.sh_.d),
            std::vector<Int>(static_cast<std::size_t>(2 * (r - 1)) + 1, Int(0)));
        for (long i1 = 0; i1 < a.sh_.d; ++i1)
            for (long j1 = 0; j1 < r; ++j1) {
                const Int& c1 = a.coeff(i1, j1);
                if (c1 == 0) continue;
                for (long i2 = 0; i1 + i2 < b.sh_.d; ++i2)
                    for (long j2 = 0; j2 < r; ++j2) {
                        const Int& c2 = b.coeff(i2, j2);
                        if (c2 == 0) continue;
                        grid[static_cast<std::size_t>(i1 + i2)]
                            [static_cast<std::size_t>(j1 + j2)] += c1 * c2;
                    }
            }
        ChowClass out(a.sh_, a.gamma_);
        out.reduce_from(grid);
        return out;
    }

    friend ChowClass operator*(const ChowClass& a, const Int& s) {
        ChowClass r = a;
        for (Int& c : r.g_) c *= s;
        return r;
    }

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.sh_.d == b.sh_.d && a.sh_.dprime == b.sh_.dprime &&
               a.sh_.k == b.sh_.k && a.g_ == b.g_;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["d"] = sh_.d;
        j["r"] = sh_.r();
        j["chern"] = nlohmann::ordered_json::array();
        for (const Int& g : gamma_) j["chern"].push_back(int_to_json(g));
        auto grid = nlohmann::ordered_json::array();
        for (long i = 0; i < sh_.d; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (long jj = 0; jj < sh_.r(); ++jj) row.push_back(int_to_json(coeff(i, jj)));
            grid.push_back(row);
        }
        j["coeffs"] = grid;
        return j;
    }

    static nlohmann::ordered_json int_to_json(const Int& v) {
        if (v.fits_slong_p()) return v.get_si();
        return v.get_str();
    }

private:
    void check_compatible(const ChowClass& b) const {
        if (sh_.d != b.sh_.d || sh_.dprime != b.sh_.dprime || sh_.k != b.sh_.k ||
            gamma_ != b.gamma_)
            throw std::invalid_argument("chow classes from different rings");
    }

    // Canonical reduction of a grid with zeta exponents possibly >= r:
    // repeatedly rewrite zeta^j, j >= r, via
    //   zeta^r = -(g_1 h zeta^(r-1) + ... + g_r h^r),
    // dropping anything with h exponent >= d.
    void reduce_from(std::vector<std::vector<Int>>& grid) {
        long r = sh_.r();
        long jmax = static_cast<long>(grid[0].size()) - 1;
        for (long j = jmax; j >= r; --j)
            for (long i = 0; i < sh_.d; ++i) {
                Int c = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (c == 0) continue;
                grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
                for (long m = 1; m <= r && i + m < sh_.d; ++m) {
                    const Int gm = m <= static_cast<long>(gamma_.size())
                                       ? gamma_[static_cast<std::size_t>(m - 1)]
                                       : Int(0);
                    if (gm == 0) continue;
                    grid[static_cast<std::size_t>(i + m)]
                        [static_cast<std::size_t>(j - m)] -= c * gm;
                }
            }
        for (long i = 0; i < sh_.d; ++i)
            for (long j = 0; j < r; ++j)
                coeff_mut(i, j) = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    BundleShape sh_;
    std::vector<Int> gamma_;
    std::vector<Int> g_; // g_[i*r + j] multiplies h^i zeta^j
};

// deg(zeta^(r-1+s) h^(d-1-s)) for the relation with coefficients `chern`:
// reduce the monomial and read off the top cell.
inline Int intersection_number(const BundleShape& shape, const std::vector<Int>& chern,
                               long s) {
    shape.validate();
    if (s < 0 || s > shape.d - 1)
        throw std::invalid_argument("intersection exponent out of range");
    ChowClass m = ChowClass::monomial(shape, chern, shape.d - 1 - s, shape.r() - 1 + s);
    return m.top_coeff();
}

// Canonical class of the projectivized quotient bundle, as (zeta, h)
// coefficients. Valid in the square case r = d (ambient dim = d + k).
inline std::pair<Int, Int> canonical_class(const BundleShape& shape) {
    shape.validate();
    if (shape.r() != shape.d)
        throw std::invalid_argument("canonical class formula needs rank r = d");
    return {Int(-shape.d), Int(-shape.dprime)};
}

struct AnticanonicalY {
    Int zeta_coeff;
    Int h_coeff;
    Int check_value; // ring computation of Y . zeta^(d-2) h^(d-1)
    bool verified;   // check_value == d
};

inline AnticanonicalY anticanonicalY(const BundleShape& shape) {
    shape.validate();
    if (shape.r() != shape.d)
        throw std::invalid_argument("anticanonical divisor formula needs rank r = d");
    std::vector<Int> g = total_chern_quotient(shape);
    ChowClass Y = ChowClass::monomial(shape, g, 0, 1) * Int(shape.d) +
                  ChowClass::monomial(shape, g, 1, 0) * Int(shape.dprime);
    ChowClass probe = Y * ChowClass::monomial(shape, g, 0, shape.d - 2);
    probe = probe * ChowClass::monomial(shape, g, shape.d - 1, 0);
    AnticanonicalY out{Int(shape.d), Int(shape.dprime), probe.top_coeff(), false};
    out.verified = (out.check_value == shape.d);
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicative sequences.

struct MultSeq {
    int order = 0;
    TruncSeries<Rational> chi = TruncSeries<Rational>::constant(0, Rational(1));
    std::vector<MultiPoly> K; // K[0] = 1, K[m] weighted-homogeneous of degree m
};

// Build the universal polynomials from the characteristic series via the
// logarithm route: with lambda_m the coefficients of log chi and p_m the
// power sums written in the c_i by Newton's identities,
//   log K(f) = sum_m lambda_m p_m t^m,
// then exponentiate back.
inline MultSeq mult_seq_from_char_series(const TruncSeries<Rational>& chi, int order) {
    if (chi.order() < order)
        throw std::invalid_argument("characteristic series too short");
    if (!(chi[0] == Rational(1)))
        throw std::domain_error("characteristic series needs constant term 1");

    TruncSeries<Rational> chi_n = chi;
    if (chi.order() != order) {
        std::vector<Rational> c(chi.coeffs().begin(),
                                chi.coeffs().begin() + order + 1);
        chi_n = TruncSeries<Rational>(order, std::move(c));
    }
    TruncSeries<Rational> lambda = chi_n.log();

    // Newton: p_m = c_1 p_(m-1) - c_2 p_(m-2) + ... + (-1)^m (m) c_m ... with
    // the classical signs p_m = sum_{i<m} (-1)^(i-1) c_i p_(m-i) + (-1)^(m-1) m c_m.
    std::vector<MultiPoly> psum(static_cast<std::size_t>(order) + 1, MultiPoly::zero());
    for (int m = 1; m <= order; ++m) {
        MultiPoly acc = MultiPoly::zero();
        for (int i = 1; i < m; ++i) {
            MultiPoly term = MultiPoly::var(static_cast<unsigned>(i)) *
                             psum[static_cast<std::size_t>(m - i)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        MultiPoly last = MultiPoly::var(static_cast<unsigned>(m)) * Rational(m);
        acc = (m % 2 == 1) ? acc + last : acc - last;
        psum[static_cast<std::size_t>(m)] = acc;
    }

    std::vector<MultiPoly> logK(static_cast<std::size_t>(order) + 1, MultiPoly::zero());
    for (int m = 1; m <= order; ++m)
        logK[static_cast<std::size_t>(m)] =
            psum[static_cast<std::size_t>(m)] * lambda[static_cast<std::size_t>(m)];

    TruncSeries<MultiPoly> L(order, std::move(logK));
    TruncSeries<MultiPoly> Kser = L.exp();

    MultSeq out;
    out.order = order;
    out.chi = chi_n;
    out.K.assign(Kser.coeffs().begin(), Kser.coeffs().end());
    return out;
}

// Apply the sequence to a free-term-1 series; conv maps a Rational
// coefficient of K_m into the series' coefficient ring.
template <typename T, typename Conv>
TruncSeries<T> mult_seq_apply(const MultSeq& K, const TruncSeries<T>& f, Conv conv) {
    if (!f.constant_term_is_one())
        throw std::domain_error("multiplicative sequence applies to free-term-1 series");
    int n = std::min(K.order, f.order());
    if (f.order() > K.order)
        throw std::invalid_argument("series order exceeds sequence order");
    std::vector<T> vals;
    for (int i = 1; i <= f.order(); ++i) vals.push_back(f[static_cast<std::size_t>(i)]);
    std::vector<T> out;
    out.push_back(RingOps<T>::one(f[0]));
    for (int m = 1; m <= n; ++m)
        out.push_back(K.K[static_cast<std::size_t>(m)].template eval<T>(
            vals, RingOps<T>::zero(f[0]), conv));
    return TruncSeries<T>(n, std::move(out));
}

inline TruncSeries<Scalar> mult_seq_apply_scalar(const MultSeq& K,
                                                 const TruncSeries<Scalar>& f) {
    Field fl = f[0].field();
    return mult_seq_apply(K, f, [fl](const Rational& c) {
        return Scalar::from_rational(fl, c);
    });
}

inline TruncSeries<Rational> mult_seq_apply_rational(const MultSeq& K,
                                                     const TruncSeries<Rational>& f) {
    return mult_seq_apply(K, f, [](const Rational& c) { return c; });
}

// K_m at integer Chern values; the result must be an integer.
inline Int mult_seq_eval_int(const MultSeq& K, const std::vector<Int>& chern, int m) {
    if (m < 0 || m > K.order) throw std::invalid_argument("index out of range");
    std::vector<Rational> vals;
    for (int i = 0; i < m; ++i)
        vals.push_back(i < static_cast<int>(chern.size())
                           ? Rational(chern[static_cast<std::size_t>(i)])
                           : Rational(0));
    Rational v = K.K[static_cast<std::size_t>(m)].eval_rational(vals);
    if (v.get_den() != 1)
        throw std::logic_error("multiplicative sequence value is not an integer");
    return v.get_num();
}

// The inversion sequence: characteristic series (1+t)^(-1) = 1 - t + t^2 - ...
inline MultSeq inversion_sequence(int order) {
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i) c.push_back(Rational(i % 2 == 0 ? 1 : -1));
    return mult_seq_from_char_series(TruncSeries<Rational>(order, std::move(c)), order);
}

// The identity sequence: characteristic series 1 + t, so K_m = c_m.
inline MultSeq identity_sequence(int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[0] = 1;
    if (order >= 1) c[1] = 1;
    return mult_seq_from_char_series(TruncSeries<Rational>(order, std::move(c)), order);
}

// ---------------------------------------------------------------------------
// Hirzebruch surface lattice: classes a C0 + b f on Sigma_e with
// C0^2 = -e, C0.f = 1, f^2 = 0.

struct HirzClass {
    long e = 0; // surface invariant, >= 0
    long a = 0; // coefficient of C0
    long b = 0; // coefficient of f
};

inline long hirz_intersect(const HirzClass& c1, const HirzClass& c2) {
    if (c1.e != c2.e || c1.e < 0)
        throw std::invalid_argument("classes live on different Hirzebruch surfaces");
    return -c1.e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b;
}

inline HirzClass hirz_canonical(long e) { return HirzClass{e, -2, -(2 + e)}; }

// Adjunction genus 1 + Y.(Y+K)/2; empty when the pairing value is odd.
inline std::optional<long> hirz_adjunction_genus(long e, const HirzClass& Y) {
    if (Y.e != e) throw std::invalid_argument("class does not live on Sigma_e");
    HirzClass K = hirz_canonical(e);
    HirzClass YK{e, Y.a + K.a, Y.b + K.b};
    long v = hirz_intersect(Y, YK);
    if (v % 2 != 0) return std::nullopt;
    return 1 + v / 2;
}

} // namespace exag
