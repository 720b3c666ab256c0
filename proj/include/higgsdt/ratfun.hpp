#pragma once

#include <optional>
#include <vector>

#include "frac.hpp"

namespace higgsdt {

template <class C>
C coeff_pow(const C& c, long e) {
    if (e == 0) return C(1);
    bool neg = e < 0;
    unsigned long n = neg ? -(unsigned long)e : (unsigned long)e;
    C acc(1);
    C b = c;
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    if (neg) acc = C(1) / acc;
    return acc;
}

// Image of one variable under a monomial substitution, expressed in the target
// variable layout. Exponents may be negative.
template <class C>
struct MonoImage {
    C coef = C(1);
    ExpVec exps;
};

template <class C>
MonoImage<C> mono_image_identity(int target_nvars, int var) {
    MonoImage<C> m;
    m.exps.assign(target_nvars, 0);
    m.exps[var] = 1;
    return m;
}

template <class C>
MonoImage<C> mono_image_pow(const MonoImage<C>& m, long e) {
    MonoImage<C> out;
    out.coef = coeff_pow(m.coef, e);
    out.exps = m.exps;
    for (auto& x : out.exps) x = (int32_t)(x * e);
    return out;
}

// Substitute every variable by a monomial image (possibly into another layout).
template <class C>
Poly<C> poly_eval_monomial_map(const Poly<C>& p, const std::vector<MonoImage<C>>& img,
                               int target_nvars) {
    assert((int)img.size() == p.nvars());
    Poly<C> out(target_nvars);
    for (const auto& t : p.terms()) {
        C coef = t.second;
        ExpVec e(target_nvars, 0);
        for (int i = 0; i < p.nvars(); ++i) {
            int k = t.first[i];
            if (k == 0) continue;
            coef = coef * coeff_pow(img[i].coef, k);
            for (int j = 0; j < target_nvars; ++j) e[j] += (int32_t)(img[i].exps[j] * k);
        }
        out += Poly<C>::monomial(target_nvars, std::move(e), coef);
    }
    return out;
}

template <class C>
Frac<C> frac_eval_monomial_map(const Frac<C>& f, const std::vector<MonoImage<C>>& img,
                               int target_nvars) {
    Poly<C> n = poly_eval_monomial_map(f.num(), img, target_nvars);
    Poly<C> d = poly_eval_monomial_map(f.den(), img, target_nvars);
    if (d.is_zero()) throw pole_error("denominator vanishes identically under substitution");
    return Frac<C>::from_num_den(std::move(n), std::move(d));
}

// General substitution var -> value (a rational function in the same layout).
template <class C>
Frac<C> frac_subst_var(const Frac<C>& f, int var, const Frac<C>& value) {
    auto eval_side = [&](const Poly<C>& p) -> std::pair<Frac<C>, int> {
        // p(var -> n/d) * d^deg  as a fraction, returning also deg
        auto parts = p.split_by_var(var);
        int deg = p.degree(var);
        Frac<C> acc = Frac<C>::zero(p.nvars());
        for (const auto& kv : parts) {
            Frac<C> term = Frac<C>::from_poly(kv.second) * value.pow(kv.first);
            acc += term;
        }
        return {acc, deg};
    };
    if (!f.num().depends_on(var) && !f.den().depends_on(var)) return f;
    auto [n, dn] = eval_side(f.num());
    auto [d, dd] = eval_side(f.den());
    if (d.is_zero()) throw pole_error("denominator vanishes identically under substitution");
    return n / d;
}

namespace detail {

// Substitute var -> point*(1+eps), reusing the slot of var for eps.
template <class C>
Poly<C> eps_expand(const Poly<C>& p, int var, const MonoImage<C>& point) {
    Poly<C> out(p.nvars());
    auto parts = p.split_by_var(var);
    for (const auto& kv : parts) {
        int k = kv.first;
        assert(k >= 0);
        MonoImage<C> pk = mono_image_pow(point, k);
        // (1+eps)^k expanded in the recycled slot
        Poly<C> binom(p.nvars());
        C b(1);
        for (int j = 0; j <= k; ++j) {
            binom += Poly<C>::variable(p.nvars(), var, j).mul_coeff(b);
            if (j < k) b = b * C(k - j) / C(j + 1);
        }
        Poly<C> term = kv.second.mul_term(pk.exps, pk.coef);
        out += term * binom;
    }
    return out;
}

}  // namespace detail

// Residue of f d(var) at var = point (a monomial in the other variables).
// Computed from the exact Laurent expansion of f(point*(1+eps)) in eps.
// pole_order receives the order of the pole encountered (0 if regular).
template <class C>
Frac<C> frac_residue(const Frac<C>& f, int var, const MonoImage<C>& point, int* pole_order = nullptr) {
    const int nv = f.nvars();
    Poly<C> N = detail::eps_expand(f.num(), var, point);
    Poly<C> D = detail::eps_expand(f.den(), var, point);
    if (D.is_zero()) throw pole_error("residue point makes the denominator vanish identically");
    int sN = N.is_zero() ? 0 : N.low_degree(var);
    int sD = D.low_degree(var);
    int m = sD - sN;  // pole order at the point
    if (pole_order) *pole_order = std::max(0, m);
    if (N.is_zero() || m < 1) return Frac<C>::zero(nv);
    int t = m - 1;  // wanted eps-order of N/eps^sN / (D/eps^sD)
    auto wparts = N.shifted(var, -sN).split_by_var(var);
    auto uparts = D.shifted(var, -sD).split_by_var(var);
    auto get = [&](std::map<int, Poly<C>>& mp, int j) -> Frac<C> {
        auto it = mp.find(j);
        if (it == mp.end()) return Frac<C>::zero(nv);
        return Frac<C>::from_poly(it->second);
    };
    Frac<C> u0 = get(uparts, 0);
    assert(!u0.is_zero());
    std::vector<Frac<C>> r(t + 1, Frac<C>::zero(nv));
    for (int j = 0; j <= t; ++j) {
        Frac<C> acc = get(wparts, j);
        for (int i = 0; i < j; ++i) acc -= r[i] * get(uparts, j - i);
        r[j] = acc / u0;
    }
    // chain rule d(var) = point * d(eps)
    Frac<C> pt = Frac<C>::from_num_den(
        Poly<C>::constant(nv, point.coef),
        Poly<C>::constant(nv, C(1)));
    Poly<C> ptm = Poly<C>::monomial(nv, point.exps, C(1));
    return r[t] * pt * Frac<C>::from_poly(ptm);
}

// Taylor coefficients of f at var = 0 up to order N (f must be regular there).
template <class C>
std::vector<Frac<C>> frac_series_coeffs(const Frac<C>& f, int var, int order) {
    const int nv = f.nvars();
    auto nparts = f.num().split_by_var(var);
    auto dparts = f.den().split_by_var(var);
    auto get = [&](std::map<int, Poly<C>>& mp, int j) -> Frac<C> {
        auto it = mp.find(j);
        if (it == mp.end()) return Frac<C>::zero(nv);
        return Frac<C>::from_poly(it->second);
    };
    Frac<C> d0 = get(dparts, 0);
    if (d0.is_zero()) throw pole_error("series expansion at a pole");
    std::vector<Frac<C>> c(order + 1, Frac<C>::zero(nv));
    for (int j = 0; j <= order; ++j) {
        Frac<C> acc = get(nparts, j);
        for (int i = 0; i < j; ++i) acc -= c[i] * get(dparts, j - i);
        c[j] = acc / d0;
    }
    return c;
}

// pad with zero exponents for extra trailing variables
template <class C>
Poly<C> poly_extend(const Poly<C>& p, int new_nvars) {
    assert(new_nvars >= p.nvars());
    Poly<C> out(new_nvars);
    for (const auto& t : p.terms()) {
        ExpVec e = t.first;
        e.resize(new_nvars, 0);
        out += Poly<C>::monomial(new_nvars, std::move(e), t.second);
    }
    return out;
}

template <class C>
Frac<C> frac_extend(const Frac<C>& f, int new_nvars) {
    return Frac<C>::from_num_den(poly_extend(f.num(), new_nvars), poly_extend(f.den(), new_nvars));
}

// inverse of frac_extend; the dropped trailing variables must not occur
template <class C>
Poly<C> poly_restrict(const Poly<C>& p, int new_nvars) {
    assert(new_nvars <= p.nvars());
    Poly<C> out(new_nvars);
    for (const auto& t : p.terms()) {
        for (int i = new_nvars; i < p.nvars(); ++i)
            if (t.first[i] != 0) throw error("value depends on a variable outside the target context");
        ExpVec e(t.first.begin(), t.first.begin() + new_nvars);
        out += Poly<C>::monomial(new_nvars, std::move(e), t.second);
    }
    return out;
}

template <class C>
Frac<C> frac_restrict(const Frac<C>& f, int new_nvars) {
    return Frac<C>::from_num_den(poly_restrict(f.num(), new_nvars),
                                 poly_restrict(f.den(), new_nvars));
}

}  // namespace higgsdt
