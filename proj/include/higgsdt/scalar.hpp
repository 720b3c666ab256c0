#pragma once

#include <climits>
#include <string>
#include <vector>

#include "frac.hpp"
#include "numeric.hpp"
#include "qqrt.hpp"

namespace higgsdt {

// ---------------------------------------------------------------------------
// Symbolic backend: rational functions over Q in the variables
//   v (= q^{1/2}), a_1, ..., a_g  (Weil numbers; conjugates appear as v^2/a_i)
// ---------------------------------------------------------------------------

class SymScalar {
  public:
    SymScalar() : g_(-1) {}
    SymScalar(int g, Frac<Rat> f) : g_(g), f_(std::move(f)) {
        assert(f_.nvars() == g_ + 1);
    }

    static SymScalar zero(int g) { return SymScalar(g, Frac<Rat>::zero(g + 1)); }
    static SymScalar one(int g) { return SymScalar(g, Frac<Rat>::one(g + 1)); }
    static SymScalar from_rat(int g, const Rat& c) {
        return SymScalar(g, Frac<Rat>::constant(g + 1, c));
    }
    // v^e (e may be negative)
    static SymScalar v_pow(int g, int e) {
        return SymScalar(g, Frac<Rat>::variable(g + 1, 0, e));
    }
    // (-v)^e
    static SymScalar neg_v_pow(int g, int e) {
        SymScalar s = v_pow(g, e);
        if (e & 1) s = -s;
        return s;
    }
    // q^e = v^{2e}
    static SymScalar q_pow(int g, int e) { return v_pow(g, 2 * e); }
    // Weil variable a_i, 1-based
    static SymScalar weil(int g, int i, int e = 1) {
        assert(1 <= i && i <= g);
        return SymScalar(g, Frac<Rat>::variable(g + 1, i, e));
    }

    int genus() const { return g_; }
    const Frac<Rat>& frac() const { return f_; }

    bool is_zero() const { return f_.is_zero(); }
    bool is_one() const { return f_.is_one(); }

    SymScalar operator-() const { return SymScalar(g_, -f_); }
    friend SymScalar operator+(const SymScalar& a, const SymScalar& b) {
        check(a, b);
        return SymScalar(a.g_, a.f_ + b.f_);
    }
    friend SymScalar operator-(const SymScalar& a, const SymScalar& b) {
        check(a, b);
        return SymScalar(a.g_, a.f_ - b.f_);
    }
    friend SymScalar operator*(const SymScalar& a, const SymScalar& b) {
        check(a, b);
        return SymScalar(a.g_, a.f_ * b.f_);
    }
    friend SymScalar operator/(const SymScalar& a, const SymScalar& b) {
        check(a, b);
        return SymScalar(a.g_, a.f_ / b.f_);
    }
    SymScalar& operator+=(const SymScalar& o) { return *this = *this + o; }
    SymScalar& operator-=(const SymScalar& o) { return *this = *this - o; }
    SymScalar& operator*=(const SymScalar& o) { return *this = *this * o; }
    SymScalar& operator/=(const SymScalar& o) { return *this = *this / o; }

    SymScalar inverse() const { return SymScalar(g_, f_.inverse()); }
    SymScalar pow(int e) const { return SymScalar(g_, f_.pow(e)); }

    SymScalar adams(int k) const {
        if (k < 1) throw precondition_error("Adams index must be >= 1");
        return SymScalar(g_, f_.adams_all_vars(k));
    }

    friend bool operator==(const SymScalar& a, const SymScalar& b) {
        check(a, b);
        return a.f_ == b.f_;
    }
    friend bool operator!=(const SymScalar& a, const SymScalar& b) { return !(a == b); }

    // Evaluate at concrete values of (v, a_1..a_g) inside Q(sqrt q).
    QQrt eval(const std::vector<QQrt>& vals) const {
        assert((int)vals.size() == g_ + 1);
        QQrt n = eval_poly(f_.num(), vals);
        QQrt d = eval_poly(f_.den(), vals);
        if (d.is_zero()) throw pole_error("specialization hits a pole");
        return n / d;
    }

    std::string to_string() const;

  private:
    static void check(const SymScalar& a, const SymScalar& b) {
        if (a.g_ != b.g_) throw precondition_error("scalar backend mismatch (different genus)");
    }
    static QQrt eval_poly(const Poly<Rat>& p, const std::vector<QQrt>& vals) {
        QQrt acc(0);
        for (const auto& t : p.terms()) {
            QQrt m(t.second);
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (t.first[i] != 0) m = m * vals[i].pow(t.first[i]);
            acc = acc + m;
        }
        return acc;
    }

    int g_;
    Frac<Rat> f_;
};

inline std::string sym_var_name(int idx) {
    if (idx == 0) return "v";
    return "a" + std::to_string(idx);
}

inline std::string sym_poly_to_string(const Poly<Rat>& p, const ExpVec& shift = {}) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.second;
        std::string body;
        for (std::size_t i = 0; i < t.first.size(); ++i) {
            int e = t.first[i] - (shift.empty() ? 0 : shift[i]);
            if (e == 0) continue;
            if (!body.empty()) body += "*";
            body += sym_var_name((int)i);
            if (e != 1) body += "^" + std::to_string(e);
        }
        std::string cs = rat_to_string(abs(c));
        std::string term;
        if (body.empty())
            term = cs;
        else if (cs == "1")
            term = body;
        else
            term = cs + "*" + body;
        if (first) {
            out += (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

inline std::string SymScalar::to_string() const {
    const Poly<Rat>& n = f_.num();
    const Poly<Rat>& d = f_.den();
    if (d.is_one()) return sym_poly_to_string(n);
    if (d.is_monomial()) {
        // Laurent polynomial: fold the monomial denominator into the terms
        ExpVec shift = d.leading_term().first;
        Rat c = d.leading_term().second;  // = 1 by canonical form
        (void)c;
        return sym_poly_to_string(n, shift);
    }
    return "(" + sym_poly_to_string(n) + ")/(" + sym_poly_to_string(d) + ")";
}

// ---------------------------------------------------------------------------
// Numeric tower backend: exact values over F_{q^k} for k = 1..K, each an
// element of Q(sqrt q). Level j of the k-th Adams image is level k*j of the
// input, so running out of levels is a hard error, not a truncation.
// ---------------------------------------------------------------------------

class TowerScalar {
  public:
    TowerScalar() : q_(0) {}
    TowerScalar(long q, std::vector<QQrt> levels) : q_(q), lev_(std::move(levels)) {
        if (lev_.empty()) throw precondition_error("tower scalar needs at least one level");
    }

    static TowerScalar from_rat(long q, int depth, const Rat& c) {
        return TowerScalar(q, std::vector<QQrt>(depth, QQrt(c)));
    }
    static TowerScalar zero(long q, int depth) { return from_rat(q, depth, Rat(0)); }
    static TowerScalar one(long q, int depth) { return from_rat(q, depth, Rat(1)); }

    // v^e level-wise: level k holds (sqrt q)^{k e}
    static TowerScalar v_pow(long q, int depth, long e) {
        std::vector<QQrt> ls;
        ls.reserve(depth);
        for (int k = 1; k <= depth; ++k) ls.push_back(QQrt::sqrt_q_pow(q, (long)k * e));
        return TowerScalar(q, std::move(ls));
    }
    static TowerScalar neg_v_pow(long q, int depth, long e) {
        TowerScalar s = v_pow(q, depth, e);
        if (e & 1)
            for (auto& x : s.lev_) x = -x;
        return s;
    }
    static TowerScalar q_pow(long q, int depth, long e) { return v_pow(q, depth, 2 * e); }

    long q() const { return q_; }
    int depth() const { return (int)lev_.size(); }
    const QQrt& level(int k) const {
        if (k < 1 || k > depth()) throw depth_error("tower level out of range");
        return lev_[k - 1];
    }
    const std::vector<QQrt>& levels() const { return lev_; }

    bool is_zero() const {
        for (const auto& x : lev_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        for (const auto& x : lev_)
            if (!(x == QQrt(1))) return false;
        return true;
    }

    TowerScalar operator-() const {
        TowerScalar s(*this);
        for (auto& x : s.lev_) x = -x;
        return s;
    }

    friend TowerScalar operator+(const TowerScalar& a, const TowerScalar& b) {
        return zip(a, b, [](const QQrt& x, const QQrt& y) { return x + y; });
    }
    friend TowerScalar operator-(const TowerScalar& a, const TowerScalar& b) {
        return zip(a, b, [](const QQrt& x, const QQrt& y) { return x - y; });
    }
    friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
        return zip(a, b, [](const QQrt& x, const QQrt& y) { return x * y; });
    }
    friend TowerScalar operator/(const TowerScalar& a, const TowerScalar& b) {
        return zip(a, b, [](const QQrt& x, const QQrt& y) { return x / y; });
    }
    TowerScalar& operator+=(const TowerScalar& o) { return *this = *this + o; }
    TowerScalar& operator-=(const TowerScalar& o) { return *this = *this - o; }
    TowerScalar& operator*=(const TowerScalar& o) { return *this = *this * o; }
    TowerScalar& operator/=(const TowerScalar& o) { return *this = *this / o; }

    TowerScalar inverse() const {
        TowerScalar s(*this);
        for (auto& x : s.lev_) x = x.inverse();
        return s;
    }
    TowerScalar pow(int e) const {
        TowerScalar s(*this);
        for (auto& x : s.lev_) x = x.pow(e);
        return s;
    }

    TowerScalar adams(int k) const {
        if (k < 1) throw precondition_error("Adams index must be >= 1");
        if (k == 1) return *this;
        int nd = depth() / k;
        if (nd == 0)
            throw depth_error("tower depth exhausted by Adams operator; raise the truncation depth");
        std::vector<QQrt> ls;
        ls.reserve(nd);
        for (int j = 1; j <= nd; ++j) ls.push_back(lev_[(std::size_t)k * j - 1]);
        return TowerScalar(q_, std::move(ls));
    }

    TowerScalar truncated(int m) const {
        if (m < 1 || m > depth()) throw depth_error("invalid tower truncation depth");
        return TowerScalar(q_, std::vector<QQrt>(lev_.begin(), lev_.begin() + m));
    }

    friend bool operator==(const TowerScalar& a, const TowerScalar& b) {
        check(a, b);
        return a.lev_ == b.lev_;
    }
    friend bool operator!=(const TowerScalar& a, const TowerScalar& b) { return !(a == b); }

    std::string to_string() const { return lev_.front().to_string(); }

  private:
    static void check(const TowerScalar& a, const TowerScalar& b) {
        if (a.q_ != b.q_) throw precondition_error("scalar backend mismatch (different q)");
        if (a.depth() != b.depth())
            throw precondition_error("tower depth mismatch: " + std::to_string(a.depth()) +
                                     " vs " + std::to_string(b.depth()));
    }
    template <class F>
    static TowerScalar zip(const TowerScalar& a, const TowerScalar& b, F f) {
        check(a, b);
        std::vector<QQrt> ls;
        ls.reserve(a.lev_.size());
        for (std::size_t i = 0; i < a.lev_.size(); ++i) ls.push_back(f(a.lev_[i], b.lev_[i]));
        return TowerScalar(a.q_, std::move(ls));
    }

    long q_;
    std::vector<QQrt> lev_;
};

// ---------------------------------------------------------------------------
// Uniform access used by the series / plethystic layer
// ---------------------------------------------------------------------------

inline SymScalar scalar_zero_like(const SymScalar& p) { return SymScalar::zero(p.genus()); }
inline SymScalar scalar_one_like(const SymScalar& p) { return SymScalar::one(p.genus()); }
inline SymScalar scalar_from_rat_like(const SymScalar& p, const Rat& c) {
    return SymScalar::from_rat(p.genus(), c);
}
inline int scalar_depth(const SymScalar&) { return INT_MAX; }
inline SymScalar scalar_truncate(const SymScalar& x, int) { return x; }

inline TowerScalar scalar_zero_like(const TowerScalar& p) {
    return TowerScalar::zero(p.q(), p.depth());
}
inline TowerScalar scalar_one_like(const TowerScalar& p) {
    return TowerScalar::one(p.q(), p.depth());
}
inline TowerScalar scalar_from_rat_like(const TowerScalar& p, const Rat& c) {
    return TowerScalar::from_rat(p.q(), p.depth(), c);
}
inline int scalar_depth(const TowerScalar& x) { return x.depth(); }
inline TowerScalar scalar_truncate(const TowerScalar& x, int m) {
    return m >= x.depth() ? x : x.truncated(m);
}

// Bookkeeping hook for the Adams-depth audit in tests.
inline int& adams_request_watermark() {
    static int w = 0;
    return w;
}
template <class S>
S scalar_adams(const S& x, int k) {
    if (k > adams_request_watermark()) adams_request_watermark() = k;
    return x.adams(k);
}

}  // namespace higgsdt
