#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace higgsdt {

// Exponent vector of fixed arity; entries may be negative (Laurent terms are
// tolerated inside intermediate values, fractions strip them on normalization).
using ExpVec = std::vector<int32_t>;

inline int exp_cmp(const ExpVec& a, const ExpVec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec c(a);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
    return c;
}

// Sparse multivariate polynomial over a coefficient field C.
// Terms are kept sorted in descending lexicographic order (variable 0 most
// significant) with nonzero coefficients.
template <class C>
class Poly {
  public:
    using Term = std::pair<ExpVec, C>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const C& c) {
        Poly p(nvars);
        if (!(c == C(0))) p.terms_.push_back({ExpVec(nvars, 0), c});
        return p;
    }

    static Poly monomial(int nvars, ExpVec e, const C& c) {
        Poly p(nvars);
        assert((int)e.size() == nvars);
        if (!(c == C(0))) p.terms_.push_back({std::move(e), c});
        return p;
    }

    static Poly variable(int nvars, int var, int e = 1) {
        ExpVec ev(nvars, 0);
        ev.at(var) = e;
        return monomial(nvars, std::move(ev), C(1));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (int e : terms_[0].first)
            if (e != 0) return false;
        return true;
    }

    C constant_value() const {
        if (terms_.empty()) return C(0);
        assert(is_constant());
        return terms_[0].second;
    }

    bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second == C(1); }

    bool is_monomial() const { return terms_.size() == 1; }

    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const {
        assert(!terms_.empty());
        return terms_.front();
    }

    std::size_t term_count() const { return terms_.size(); }

    Poly operator-() const {
        Poly p(*this);
        for (auto& t : p.terms_) t.second = C(0) - t.second;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        assert(a.nvars_ == b.nvars_);
        Poly out(a.nvars_);
        if (a.is_zero() || b.is_zero()) return out;
        if (b.is_monomial()) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
        if (a.is_monomial()) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
        std::map<ExpVec, C, ExpGreater> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                ExpVec e = exp_add(ta.first, tb.first);
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(std::move(e), ta.second * tb.second);
                else
                    it->second = it->second + ta.second * tb.second;
            }
        out.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!(kv.second == C(0))) out.terms_.push_back({kv.first, kv.second});
        return out;
    }

    Poly mul_term(const ExpVec& e, const C& c) const {
        Poly out(nvars_);
        if (c == C(0)) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C nc = t.second * c;
            if (!(nc == C(0))) out.terms_.push_back({exp_add(t.first, e), nc});
        }
        return out;
    }

    Poly mul_coeff(const C& c) const { return mul_term(ExpVec(nvars_, 0), c); }

    Poly div_coeff(const C& c) const {
        if (c == C(0)) throw division_by_zero("poly / 0 coefficient");
        Poly out(nvars_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.first, t.second / c});
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second))
                return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // max exponent of var (zero poly: -1)
    int degree(int var) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, (int)t.first[var]);
        return d;
    }

    // min exponent of var (zero poly: 0)
    int low_degree(int var) const {
        if (terms_.empty()) return 0;
        int d = std::numeric_limits<int>::max();
        for (const auto& t : terms_) d = std::min(d, (int)t.first[var]);
        return d;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) {
            int s = 0;
            for (int e : t.first) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& t : terms_)
            if (t.first[var] != 0) return true;
        return false;
    }

    bool has_negative_exponent() const {
        for (const auto& t : terms_)
            for (int e : t.first)
                if (e < 0) return true;
        return false;
    }

    // multiply by var^delta
    Poly shifted(int var, int delta) const {
        Poly p(*this);
        for (auto& t : p.terms_) t.first[var] += delta;
        return p;
    }

    // every exponent scaled by k (Adams substitution x -> x^k on all variables)
    Poly scaled_exponents(int k) const {
        assert(k >= 1);
        Poly p(*this);
        for (auto& t : p.terms_)
            for (auto& e : t.first) e *= k;
        return p;
    }

    Poly derivative(int var) const {
        Poly out(nvars_);
        for (const auto& t : terms_) {
            int e = t.first[var];
            if (e == 0) continue;
            C nc = t.second * C(e);
            if (nc == C(0)) continue;
            ExpVec ne = t.first;
            ne[var] -= 1;
            out.terms_.push_back({std::move(ne), std::move(nc)});
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return exp_cmp(x.first, y.first) > 0; });
        return out;
    }

    // view as univariate in var: degree -> coefficient (exponent of var zeroed out)
    std::map<int, Poly> split_by_var(int var) const {
        std::map<int, Poly> out;
        for (const auto& t : terms_) {
            int d = t.first[var];
            auto it = out.find(d);
            if (it == out.end()) it = out.emplace(d, Poly(nvars_)).first;
            ExpVec e = t.first;
            e[var] = 0;
            it->second.terms_.push_back({std::move(e), t.second});
        }
        for (auto& kv : out)
            std::sort(kv.second.terms_.begin(), kv.second.terms_.end(),
                      [](const Term& x, const Term& y) { return exp_cmp(x.first, y.first) > 0; });
        return out;
    }

    static Poly join_by_var(int nvars, int var, const std::map<int, Poly>& parts) {
        Poly out(nvars);
        for (const auto& kv : parts)
            out += kv.second.shifted(var, kv.first);
        return out;
    }

    Poly pow(int e) const {
        assert(e >= 0);
        Poly acc = constant(nvars_, C(1));
        Poly b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

  private:
    struct ExpGreater {
        bool operator()(const ExpVec& a, const ExpVec& b) const { return exp_cmp(a, b) > 0; }
    };

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        assert(a.nvars_ == b.nvars_);
        Poly out(a.nvars_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = exp_cmp(a.terms_[i].first, b.terms_[j].first);
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                out.terms_.push_back({t.first, subtract ? C(0) - t.second : t.second});
            } else {
                C v = subtract ? a.terms_[i].second - b.terms_[j].second
                               : a.terms_[i].second + b.terms_[j].second;
                if (!(v == C(0))) out.terms_.push_back({a.terms_[i].first, std::move(v)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            out.terms_.push_back({t.first, subtract ? C(0) - t.second : t.second});
        }
        return out;
    }

    int nvars_ = 0;
    std::vector<Term> terms_;
};

// Exact division in the lex term order; returns false if b does not divide a.
template <class C>
bool try_divexact(const Poly<C>& a, const Poly<C>& b, Poly<C>& q) {
    assert(a.nvars() == b.nvars());
    if (b.is_zero()) throw division_by_zero("poly / 0");
    q = Poly<C>(a.nvars());
    Poly<C> r = a;
    const auto& ltb = b.leading_term();
    std::map<int, int> dummy;
    std::vector<typename Poly<C>::Term> qt;
    while (!r.is_zero()) {
        const auto& ltr = r.leading_term();
        ExpVec e(ltr.first);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= ltb.first[i];
            if (e[i] < 0) return false;
        }
        C c = ltr.second / ltb.second;
        qt.push_back({e, c});
        r -= b.mul_term(e, c);
    }
    for (const auto& t : qt) q += Poly<C>::monomial(a.nvars(), t.first, t.second);
    return true;
}

template <class C>
Poly<C> divexact(const Poly<C>& a, const Poly<C>& b) {
    Poly<C> q;
    if (!try_divexact(a, b, q)) throw error("inexact polynomial division");
    return q;
}

namespace detail {

template <class C>
Poly<C> poly_monic(const Poly<C>& p) {
    if (p.is_zero()) return p;
    return p.div_coeff(p.leading_term().second);
}

// pick the highest-index variable that actually occurs in a or b
template <class C>
int pick_main_var(const Poly<C>& a, const Poly<C>& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.depends_on(v) || b.depends_on(v)) return v;
    return -1;
}

// univariate polynomials as dense coefficient vectors (index = degree)
template <class C>
std::vector<C> to_dense(const Poly<C>& p, int var) {
    std::vector<C> out(std::max(0, p.degree(var) + 1), C(0));
    for (const auto& t : p.terms()) out[t.first[var]] = t.second;
    return out;
}

template <class C>
void dense_trim(std::vector<C>& v) {
    while (!v.empty() && v.back() == C(0)) v.pop_back();
}

// plain field-coefficient Euclid
template <class C>
std::vector<C> dense_gcd(std::vector<C> a, std::vector<C> b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            C f = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
            dense_trim(a);
        }
        std::swap(a, b);
    }
    dense_trim(a);
    if (!a.empty()) {
        C lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

template <class C>
Poly<C> from_dense(const std::vector<C>& v, int nvars, int var) {
    Poly<C> out(nvars);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(v[i] == C(0))) out += Poly<C>::variable(nvars, var, (int)i).mul_coeff(v[i]);
    return out;
}

// true if p involves no variable other than var
template <class C>
bool univariate_in(const Poly<C>& p, int var) {
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < t.first.size(); ++i)
            if ((int)i != var && t.first[i] != 0) return false;
    return true;
}

}  // namespace detail

template <class C>
Poly<C> poly_gcd(const Poly<C>& a, const Poly<C>& b);

namespace detail {

// pseudo-remainder of a by b in variable var (coefficients in a subring)
template <class C>
Poly<C> pseudo_rem(const Poly<C>& a, const Poly<C>& b, int var) {
    int db = b.degree(var);
    auto bs = b.split_by_var(var);
    const Poly<C>& lcb = bs.rbegin()->second;
    Poly<C> r = a;
    int guard = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        auto rs = r.split_by_var(var);
        int dr = rs.rbegin()->first;
        const Poly<C>& lcr = rs.rbegin()->second;
        // r <- lcb * r - lcr * x^{dr-db} * b
        r = r * lcb - b.shifted(var, dr - db) * lcr;
        if (++guard > 10000) throw error("pseudo-division diverged");
    }
    return r;
}

template <class C>
Poly<C> content_wrt(const Poly<C>& p, int var) {
    Poly<C> c(p.nvars());
    for (const auto& kv : p.split_by_var(var)) {
        c = poly_gcd(c, kv.second);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

}  // namespace detail

// GCD over a coefficient field, canonicalized monic in the global lex order.
// Inputs must have nonnegative exponents.
template <class C>
Poly<C> poly_gcd(const Poly<C>& a, const Poly<C>& b) {
    using namespace detail;
    if (a.is_zero()) return poly_monic(b);
    if (b.is_zero()) return poly_monic(a);
    assert(!a.has_negative_exponent() && !b.has_negative_exponent());
    if (a.is_constant() || b.is_constant()) return Poly<C>::constant(a.nvars(), C(1));

    int var = pick_main_var(a, b);
    assert(var >= 0);

    if (univariate_in(a, var) && univariate_in(b, var)) {
        auto g = dense_gcd(to_dense(a, var), to_dense(b, var));
        return from_dense(g, a.nvars(), var);
    }

    // primitive PRS in the main variable
    Poly<C> ca = content_wrt(a, var), cb = content_wrt(b, var);
    Poly<C> pa = divexact(a, ca), pb = divexact(b, cb);
    Poly<C> cg = poly_gcd(ca, cb);

    Poly<C> A = pa, B = pb;
    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    while (!B.is_zero()) {
        if (B.degree(var) == 0) {
            // common part in var is trivial; only content survives
            A = Poly<C>::constant(a.nvars(), C(1));
            B = Poly<C>(a.nvars());
            break;
        }
        Poly<C> R = pseudo_rem(A, B, var);
        A = B;
        if (R.is_zero()) {
            B = Poly<C>(a.nvars());
        } else {
            B = divexact(R, content_wrt(R, var));
        }
    }
    Poly<C> gp = A.is_constant() ? Poly<C>::constant(a.nvars(), C(1)) : divexact(A, content_wrt(A, var));
    return poly_monic(cg * gp);
}

// substitute var -> value by Horner evaluation; value lives in the same ring
template <class C>
Poly<C> poly_subst_var(const Poly<C>& p, int var, const Poly<C>& value) {
    auto parts = p.split_by_var(var);
    Poly<C> out(p.nvars());
    int prev = -1;
    // Horner from the top degree down
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (prev >= 0) out *= value.pow(prev - it->first);
        out += it->second;
        prev = it->first;
    }
    if (prev > 0) out *= value.pow(prev);
    return out;
}

}  // namespace higgsdt
