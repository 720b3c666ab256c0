#pragma once

#include <string>

#include "numeric.hpp"

namespace higgsdt {

// Element a + b*sqrt(q) of the real quadratic extension Q(sqrt q), q a fixed
// prime power. When q is a perfect square the sqrt part is folded into the
// rational part at construction, so b == 0 is an invariant in that case.
class QQrt {
  public:
    QQrt() : a_(0), b_(0), q_(0) {}
    /*implicit*/ QQrt(int n) : a_(n), b_(0), q_(0) {}
    explicit QQrt(const Rat& a) : a_(a), b_(0), q_(0) {}

    QQrt(long q, Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)), q_(q) { fold(); }

    static QQrt sqrt_q(long q) { return QQrt(q, Rat(0), Rat(1)); }

    // (sqrt q)^e, e may be negative
    static QQrt sqrt_q_pow(long q, long e) {
        if (e >= 0) {
            Rat qe = rat_pow(Rat(q), e / 2);
            if (e % 2 == 0) return QQrt(q, qe, Rat(0));
            return QQrt(q, Rat(0), qe);
        }
        return sqrt_q_pow(q, -e).inverse();
    }

    const Rat& rat_part() const { return a_; }
    const Rat& sqrt_part() const { return b_; }
    long q() const { return q_; }
    bool is_rational() const { return b_ == 0; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QQrt operator+(const QQrt& x, const QQrt& y) {
        QQrt r = align(x, y);
        return QQrt(r.q_, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QQrt operator-(const QQrt& x, const QQrt& y) {
        QQrt r = align(x, y);
        return QQrt(r.q_, x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QQrt operator*(const QQrt& x, const QQrt& y) {
        QQrt r = align(x, y);
        return QQrt(r.q_, x.a_ * y.a_ + x.b_ * y.b_ * r.q_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QQrt operator/(const QQrt& x, const QQrt& y) { return x * y.inverse(); }

    QQrt operator-() const { return QQrt(q_, -a_, -b_); }

    QQrt inverse() const {
        Rat n = a_ * a_ - b_ * b_ * Rat(q_);
        if (n == 0) {
            if (a_ == 0 && b_ == 0) throw division_by_zero("inverse of zero in Q(sqrt q)");
            // a^2 = q b^2 with (a,b) != 0 would make sqrt(q) rational; the
            // constructor folds that case, so this cannot happen
            throw error("non-invertible element in Q(sqrt q)");
        }
        return QQrt(q_, a_ / n, -b_ / n);
    }

    QQrt pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QQrt acc(1);
        QQrt b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const QQrt& x, const QQrt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QQrt& x, const QQrt& y) { return !(x == y); }

    std::string to_string() const {
        if (b_ == 0) return rat_to_string(a_);
        std::string s = rat_to_string(a_);
        if (b_ > 0) s += "+";
        s += rat_to_string(b_) + "*sqrt(" + std::to_string(q_) + ")";
        return s;
    }

  private:
    // carry the q tag across arithmetic with plain rationals (q_ == 0 means "any")
    static QQrt align(const QQrt& x, const QQrt& y) {
        long q = x.q_ ? x.q_ : y.q_;
        if (x.q_ && y.q_ && x.q_ != y.q_)
            throw precondition_error("mixing values over different base fields");
        QQrt r;
        r.q_ = q;
        return r;
    }

    void fold() {
        if (q_ > 0 && b_ != 0) {
            mpz_class root;
            if (perfect_square_root(mpz_class(q_), root)) {
                a_ += b_ * Rat(root);
                b_ = 0;
            }
        }
        if (b_ == 0 && q_ == 0) return;
    }

    Rat a_, b_;
    long q_;
};

}  // namespace higgsdt
