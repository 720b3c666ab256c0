#pragma once

#include <utility>

#include "poly.hpp"

namespace higgsdt {

// Rational function num/den over a coefficient field C, kept canonical:
//  - exponents nonnegative, no monomial common to num and den
//  - gcd(num, den) is a unit
//  - den has leading coefficient 1 in the global lex order
template <class C>
class Frac {
  public:
    Frac() = default;
    explicit Frac(int nvars)
        : num_(Poly<C>::zero(nvars)), den_(Poly<C>::constant(nvars, C(1))) {}

    static Frac zero(int nvars) { return Frac(nvars); }

    static Frac one(int nvars) { return from_poly(Poly<C>::constant(nvars, C(1))); }

    static Frac constant(int nvars, const C& c) {
        return from_poly(Poly<C>::constant(nvars, c));
    }

    static Frac from_poly(Poly<C> p) {
        Frac f;
        f.num_ = std::move(p);
        f.den_ = Poly<C>::constant(f.num_.nvars(), C(1));
        f.normalize();
        return f;
    }

    static Frac from_num_den(Poly<C> n, Poly<C> d) {
        if (d.is_zero()) throw division_by_zero("rational function with zero denominator");
        Frac f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        f.normalize();
        return f;
    }

    static Frac variable(int nvars, int var, int e = 1) {
        if (e >= 0) return from_poly(Poly<C>::variable(nvars, var, e));
        return from_num_den(Poly<C>::constant(nvars, C(1)), Poly<C>::variable(nvars, var, -e));
    }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    C constant_value() const {
        assert(is_constant());
        return num_.constant_value();
    }

    Frac operator-() const {
        Frac f(*this);
        f.num_ = -f.num_;
        return f;
    }

    friend Frac operator+(const Frac& a, const Frac& b) { return add_sub(a, b, false); }
    friend Frac operator-(const Frac& a, const Frac& b) { return add_sub(a, b, true); }

    friend Frac operator*(const Frac& a, const Frac& b) {
        assert(a.nvars() == b.nvars());
        Frac f;
        f.num_ = a.num_ * b.num_;
        f.den_ = a.den_ * b.den_;
        f.normalize();
        return f;
    }

    friend Frac operator/(const Frac& a, const Frac& b) {
        assert(a.nvars() == b.nvars());
        if (b.is_zero()) throw division_by_zero("rational function division by zero");
        Frac f;
        f.num_ = a.num_ * b.den_;
        f.den_ = a.den_ * b.num_;
        f.normalize();
        return f;
    }

    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    Frac inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        Frac f;
        f.num_ = den_;
        f.den_ = num_;
        f.normalize();
        return f;
    }

    Frac pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Frac acc = one(nvars());
        Frac b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    // ring endomorphism x_i -> x_i^k on every variable
    Frac adams_all_vars(int k) const {
        if (k == 1) return *this;
        Frac f;
        f.num_ = num_.scaled_exponents(k);
        f.den_ = den_.scaled_exponents(k);
        f.normalize();
        return f;
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  private:
    static Frac add_sub(const Frac& a, const Frac& b, bool subtract) {
        assert(a.nvars() == b.nvars());
        Frac f;
        if (a.den_ == b.den_) {
            f.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            f.den_ = a.den_;
        } else {
            Poly<C> g = poly_gcd(a.den_, b.den_);
            Poly<C> da = g.is_one() ? a.den_ : divexact(a.den_, g);
            Poly<C> db = g.is_one() ? b.den_ : divexact(b.den_, g);
            Poly<C> n = subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
            f.num_ = std::move(n);
            f.den_ = a.den_ * db;
        }
        f.normalize();
        return f;
    }

    void normalize() {
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<C>::constant(nvars(), C(1));
            return;
        }
        // strip the joint Laurent monomial so both parts are honest polynomials
        for (int v = 0; v < nvars(); ++v) {
            int m = std::min(num_.low_degree(v), den_.low_degree(v));
            if (m != 0) {
                num_ = num_.shifted(v, -m);
                den_ = den_.shifted(v, -m);
            }
        }
        if (!den_.is_constant() || !num_.is_constant()) {
            Poly<C> g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = divexact(num_, g);
                den_ = divexact(den_, g);
            }
        }
        C lead = den_.leading_term().second;
        if (!(lead == C(1))) {
            num_ = num_.div_coeff(lead);
            den_ = den_.div_coeff(lead);
        }
    }

    Poly<C> num_, den_;
};

}  // namespace higgsdt
