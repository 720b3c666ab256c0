#pragma once

#include <map>
#include <vector>

#include "ratfun.hpp"
#include "scalar.hpp"

namespace higgsdt {

// Signed monomial  sign * v^vexp * prod z_i^{e_i}  in the residue variables.
// v stands for q^{1/2}; its meaning per tower level k is (sqrt q)^k.
struct Monomial {
    int sign = +1;
    int vexp = 0;
    std::map<int, int> zexp;  // z-variable index (0-based) -> exponent

    static Monomial one() { return {}; }
    static Monomial q_power(int e) { return {+1, 2 * e, {}}; }
    static Monomial zvar(int i, int e = 1) {
        Monomial m;
        if (e != 0) m.zexp[i] = e;
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        m.sign = sign * o.sign;
        m.vexp = vexp + o.vexp;
        m.zexp = zexp;
        for (auto& kv : o.zexp) {
            m.zexp[kv.first] += kv.second;
            if (m.zexp[kv.first] == 0) m.zexp.erase(kv.first);
        }
        return m;
    }

    Monomial pow(int e) const {
        Monomial m;
        m.sign = (e % 2 == 0) ? 1 : sign;
        m.vexp = vexp * e;
        for (auto& kv : zexp)
            if (kv.second * e != 0) m.zexp[kv.first] = kv.second * e;
        return m;
    }

    bool is_constant() const { return zexp.empty(); }
    bool is_one() const { return sign == 1 && vexp == 0 && zexp.empty(); }
    // constant equal to q^e
    bool is_q_power(int e) const { return is_constant() && sign == 1 && vexp == 2 * e; }
};

// ---------------------------------------------------------------------------
// Symbolic backend: one flat polynomial ring Q[v, a_1..a_g, z_1..z_nz]
// ---------------------------------------------------------------------------

struct SymBackend {
    using Scalar = SymScalar;
    using Field = SymScalar;  // component field for univariate work

    struct ZCtx {
        int g = 0;
        int nz = 0;
        int nvars() const { return 1 + g + nz; }
        int zslot(int i) const {
            assert(0 <= i && i < nz);
            return 1 + g + i;
        }
    };

    struct Z {
        ZCtx ctx;
        Frac<Rat> f;  // nvars = ctx.nvars()

        bool is_zero() const { return f.is_zero(); }
        friend Z operator+(const Z& a, const Z& b) { return {a.ctx, a.f + b.f}; }
        friend Z operator-(const Z& a, const Z& b) { return {a.ctx, a.f - b.f}; }
        friend Z operator*(const Z& a, const Z& b) { return {a.ctx, a.f * b.f}; }
        friend Z operator/(const Z& a, const Z& b) { return {a.ctx, a.f / b.f}; }
        Z operator-() const { return {ctx, -f}; }
        friend bool operator==(const Z& a, const Z& b) { return a.f == b.f; }
        friend bool operator!=(const Z& a, const Z& b) { return !(a == b); }
    };

    static Z zero(const ZCtx& c) { return {c, Frac<Rat>::zero(c.nvars())}; }
    static Z one(const ZCtx& c) { return {c, Frac<Rat>::one(c.nvars())}; }

    static Z from_scalar(const ZCtx& c, const Scalar& s) {
        assert(s.genus() == c.g);
        return {c, frac_extend(s.frac(), c.nvars())};
    }

    static Scalar to_scalar(const Z& z) {
        return Scalar(z.ctx.g, frac_restrict(z.f, 1 + z.ctx.g));
    }

    static Z from_monomial(const ZCtx& c, const Monomial& m) {
        ExpVec e(c.nvars(), 0);
        e[0] = m.vexp;
        for (auto& kv : m.zexp) e[c.zslot(kv.first)] = kv.second;
        Poly<Rat> p = Poly<Rat>::monomial(c.nvars(), e, Rat(m.sign));
        Frac<Rat> fr = Frac<Rat>::from_num_den(p, Poly<Rat>::constant(c.nvars(), Rat(1)));
        return {c, fr};
    }

    static Z pow(const Z& z, int e) { return {z.ctx, z.f.pow(e)}; }

    // full Adams operator: v, a_i and every z variable go to their k-th power
    static Z adams(const Z& z, int k) { return {z.ctx, z.f.adams_all_vars(k)}; }

    // substitute each z variable by a monomial of the target context
    static Z substitute(const Z& z, const std::map<int, Monomial>& images, const ZCtx& target) {
        assert(target.g == z.ctx.g);
        std::vector<MonoImage<Rat>> img;
        const int tn = target.nvars();
        for (int i = 0; i < z.ctx.nvars(); ++i) {
            if (i <= z.ctx.g) {
                img.push_back(mono_image_identity<Rat>(tn, i));
            } else {
                int zi = i - 1 - z.ctx.g;
                auto it = images.find(zi);
                if (it == images.end()) {
                    if (z.f.num().depends_on(i) || z.f.den().depends_on(i))
                        throw precondition_error("missing substitution image for a live variable");
                    MonoImage<Rat> m;
                    m.coef = Rat(1);
                    m.exps.assign(tn, 0);
                    img.push_back(std::move(m));
                } else {
                    const Monomial& mo = it->second;
                    MonoImage<Rat> m;
                    m.coef = Rat(mo.sign);
                    m.exps.assign(tn, 0);
                    m.exps[0] = mo.vexp;
                    for (auto& kv : mo.zexp) m.exps[target.zslot(kv.first)] += kv.second;
                    img.push_back(std::move(m));
                }
            }
        }
        return {target, frac_eval_monomial_map(z.f, img, tn)};
    }

    // residue in z variable zi at the monomial point (expressed in ctx variables)
    static Z residue(const Z& z, int zi, const Monomial& point, int* pole_order) {
        int var = z.ctx.zslot(zi);
        MonoImage<Rat> pt;
        pt.coef = Rat(point.sign);
        pt.exps.assign(z.ctx.nvars(), 0);
        pt.exps[0] = point.vexp;
        for (auto& kv : point.zexp) {
            assert(kv.first != zi);
            pt.exps[z.ctx.zslot(kv.first)] = kv.second;
        }
        return {z.ctx, frac_residue(z.f, var, pt, pole_order)};
    }

    // Taylor coefficients in the unique z variable (ctx.nz == 1), as scalars
    static std::vector<Scalar> series_coeffs(const Z& z, int order) {
        assert(z.ctx.nz == 1);
        auto cs = frac_series_coeffs(z.f, z.ctx.zslot(0), order);
        std::vector<Scalar> out;
        out.reserve(cs.size());
        for (auto& c : cs) out.push_back(Scalar(z.ctx.g, frac_restrict(c, 1 + z.ctx.g)));
        return out;
    }

    // univariate num/den coefficient lists over the component field (ctx.nz == 1)
    struct UniRat {
        std::vector<Field> num, den;
    };
    static std::vector<UniRat> components(const Z& z) {
        assert(z.ctx.nz == 1);
        int var = z.ctx.zslot(0);
        UniRat u;
        auto lift = [&](const Poly<Rat>& p, std::vector<Field>& out) {
            auto parts = p.split_by_var(var);
            int deg = p.is_zero() ? -1 : p.degree(var);
            out.assign(deg + 1, Scalar::zero(z.ctx.g));
            for (auto& kv : parts)
                out[kv.first] = Scalar(z.ctx.g, frac_restrict(Frac<Rat>::from_poly(kv.second), 1 + z.ctx.g));
        };
        lift(z.f.num(), u.num);
        lift(z.f.den(), u.den);
        return {u};
    }
    static Scalar assemble(const Z& proto, const std::vector<Field>& vals) {
        assert(vals.size() == 1);
        (void)proto;
        return vals[0];
    }

    static Field field_zero(const Field& proto) { return SymScalar::zero(proto.genus()); }
    static Field field_one(const Field& proto) { return SymScalar::one(proto.genus()); }
    static Field field_from_rat(const Field& proto, const Rat& c) {
        return SymScalar::from_rat(proto.genus(), c);
    }
};

// ---------------------------------------------------------------------------
// Numeric tower backend: one rational function in the z variables per level
// ---------------------------------------------------------------------------

struct TowBackend {
    using Scalar = TowerScalar;
    using Field = QQrt;

    struct ZCtx {
        long q = 0;
        int K = 1;  // number of levels
        int nz = 0;
        int nvars() const { return nz; }
        int zslot(int i) const {
            assert(0 <= i && i < nz);
            return i;
        }
    };

    struct Z {
        ZCtx ctx;
        std::vector<Frac<QQrt>> lev;  // size K, nvars = nz

        bool is_zero() const {
            for (auto& f : lev)
                if (!f.is_zero()) return false;
            return true;
        }
        friend Z zip(const Z& a, const Z& b, Frac<QQrt> (*op)(const Frac<QQrt>&, const Frac<QQrt>&)) {
            if (a.lev.size() != b.lev.size())
                throw precondition_error("tower depth mismatch in rational function arithmetic");
            Z out{a.ctx, {}};
            out.lev.reserve(a.lev.size());
            for (std::size_t i = 0; i < a.lev.size(); ++i) out.lev.push_back(op(a.lev[i], b.lev[i]));
            return out;
        }
        friend Z operator+(const Z& a, const Z& b) {
            return zip(a, b, +[](const Frac<QQrt>& x, const Frac<QQrt>& y) { return x + y; });
        }
        friend Z operator-(const Z& a, const Z& b) {
            return zip(a, b, +[](const Frac<QQrt>& x, const Frac<QQrt>& y) { return x - y; });
        }
        friend Z operator*(const Z& a, const Z& b) {
            return zip(a, b, +[](const Frac<QQrt>& x, const Frac<QQrt>& y) { return x * y; });
        }
        friend Z operator/(const Z& a, const Z& b) {
            return zip(a, b, +[](const Frac<QQrt>& x, const Frac<QQrt>& y) { return x / y; });
        }
        Z operator-() const {
            Z out{ctx, {}};
            for (auto& f : lev) out.lev.push_back(-f);
            return out;
        }
        friend bool operator==(const Z& a, const Z& b) { return a.lev == b.lev; }
        friend bool operator!=(const Z& a, const Z& b) { return !(a == b); }
    };

    static Z zero(const ZCtx& c) {
        return {c, std::vector<Frac<QQrt>>((std::size_t)c.K, Frac<QQrt>::zero(c.nz))};
    }
    static Z one(const ZCtx& c) {
        return {c, std::vector<Frac<QQrt>>((std::size_t)c.K, Frac<QQrt>::one(c.nz))};
    }

    static Z from_scalar(const ZCtx& c, const Scalar& s) {
        if (s.depth() < c.K) throw depth_error("scalar has fewer levels than the context");
        Z out{c, {}};
        for (int k = 1; k <= c.K; ++k) out.lev.push_back(Frac<QQrt>::constant(c.nz, s.level(k)));
        return out;
    }

    static Scalar to_scalar(const Z& z) {
        std::vector<QQrt> ls;
        for (auto& f : z.lev) {
            if (!f.is_constant()) throw error("value depends on a variable outside the target context");
            ls.push_back(f.constant_value());
        }
        return Scalar(z.ctx.q, std::move(ls));
    }

    static QQrt mono_coef(const ZCtx& c, const Monomial& m, int level) {
        QQrt x = QQrt::sqrt_q_pow(c.q, (long)level * m.vexp);
        if (m.sign < 0) x = -x;
        return x;
    }

    static Z from_monomial(const ZCtx& c, const Monomial& m) {
        Z out{c, {}};
        for (int k = 1; k <= c.K; ++k) {
            ExpVec e(c.nz, 0);
            for (auto& kv : m.zexp) e[kv.first] = kv.second;
            Poly<QQrt> p = Poly<QQrt>::monomial(c.nz, e, mono_coef(c, m, k));
            out.lev.push_back(Frac<QQrt>::from_num_den(p, Poly<QQrt>::constant(c.nz, QQrt(1))));
        }
        return out;
    }

    static Z pow(const Z& z, int e) {
        Z out{z.ctx, {}};
        for (auto& f : z.lev) out.lev.push_back(f.pow(e));
        return out;
    }

    static Z adams(const Z& z, int k) {
        if (k == 1) return z;
        int nd = (int)z.lev.size() / k;
        if (nd == 0) throw depth_error("tower depth exhausted by Adams operator");
        Z out;
        out.ctx = z.ctx;
        out.ctx.K = nd;
        for (int j = 1; j <= nd; ++j) out.lev.push_back(z.lev[(std::size_t)k * j - 1].adams_all_vars(k));
        return out;
    }

    static Z substitute(const Z& z, const std::map<int, Monomial>& images, const ZCtx& target) {
        if (target.q != z.ctx.q) throw precondition_error("scalar backend mismatch (different q)");
        Z out{target, {}};
        out.ctx.K = (int)z.lev.size();
        for (int k = 1; k <= (int)z.lev.size(); ++k) {
            std::vector<MonoImage<QQrt>> img;
            for (int i = 0; i < z.ctx.nz; ++i) {
                auto it = images.find(i);
                if (it == images.end()) {
                    if (z.lev[k - 1].num().depends_on(i) || z.lev[k - 1].den().depends_on(i))
                        throw precondition_error("missing substitution image for a live variable");
                    MonoImage<QQrt> m;
                    m.coef = QQrt(1);
                    m.exps.assign(target.nz, 0);
                    img.push_back(std::move(m));
                } else {
                    MonoImage<QQrt> m;
                    m.coef = mono_coef(z.ctx, it->second, k);
                    m.exps.assign(target.nz, 0);
                    for (auto& kv : it->second.zexp) m.exps[kv.first] += kv.second;
                    img.push_back(std::move(m));
                }
            }
            out.lev.push_back(frac_eval_monomial_map(z.lev[k - 1], img, target.nz));
        }
        return out;
    }

    static Z residue(const Z& z, int zi, const Monomial& point, int* pole_order) {
        Z out{z.ctx, {}};
        int worst = 0;
        for (int k = 1; k <= (int)z.lev.size(); ++k) {
            MonoImage<QQrt> pt;
            pt.coef = mono_coef(z.ctx, point, k);
            pt.exps.assign(z.ctx.nz, 0);
            for (auto& kv : point.zexp) {
                assert(kv.first != zi);
                pt.exps[kv.first] = kv.second;
            }
            int po = 0;
            out.lev.push_back(frac_residue(z.lev[k - 1], zi, pt, &po));
            worst = std::max(worst, po);
        }
        if (pole_order) *pole_order = worst;
        return out;
    }

    static std::vector<Scalar> series_coeffs(const Z& z, int order) {
        assert(z.ctx.nz == 1);
        std::vector<std::vector<Frac<QQrt>>> per_level;
        for (auto& f : z.lev) per_level.push_back(frac_series_coeffs(f, 0, order));
        std::vector<Scalar> out;
        for (int j = 0; j <= order; ++j) {
            std::vector<QQrt> ls;
            for (auto& cs : per_level) {
                assert(cs[j].is_constant());
                ls.push_back(cs[j].constant_value());
            }
            out.push_back(Scalar(z.ctx.q, std::move(ls)));
        }
        return out;
    }

    struct UniRat {
        std::vector<Field> num, den;
    };
    static std::vector<UniRat> components(const Z& z) {
        assert(z.ctx.nz == 1);
        std::vector<UniRat> out;
        for (auto& f : z.lev) {
            UniRat u;
            auto lift = [&](const Poly<QQrt>& p, std::vector<Field>& o) {
                int deg = p.is_zero() ? -1 : p.degree(0);
                o.assign(deg + 1, QQrt(0));
                for (auto& t : p.terms()) o[t.first[0]] = t.second;
            };
            lift(f.num(), u.num);
            lift(f.den(), u.den);
            out.push_back(std::move(u));
        }
        return out;
    }
    static Scalar assemble(const Z& proto, const std::vector<Field>& vals) {
        return Scalar(proto.ctx.q, vals);
    }

    static Field field_zero(const Field&) { return QQrt(0); }
    static Field field_one(const Field&) { return QQrt(1); }
    static Field field_from_rat(const Field&, const Rat& c) { return QQrt(c); }
};

}  // namespace higgsdt
