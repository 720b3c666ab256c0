#pragma once

#include <map>
#include <vector>

#include "zfun.hpp"

namespace higgsdt {

// ---------------------------------------------------------------------------
// A smooth projective curve over F_q, known through its zeta function
//   Z(T) = P(T) / ((1-T)(1-qT)),   deg P = 2g,  P(0) = 1.
//
// Symbolic backend: P(T) = prod_i (1 - a_i T)(1 - (v^2/a_i) T), the a_i kept
// as free variables. Numeric backend: P derived from point counts N_1..N_g by
// Newton's identities; extension levels computed on demand.
// ---------------------------------------------------------------------------

template <class B>
class CurveData;

template <>
class CurveData<SymBackend> {
  public:
    using Bk = SymBackend;
    using Scalar = SymScalar;
    using Z = SymBackend::Z;
    using ZCtx = SymBackend::ZCtx;

    explicit CurveData(int genus) : g_(genus) {
        if (genus < 0) throw precondition_error("genus must be nonnegative");
    }

    int genus() const { return g_; }

    ZCtx make_zctx(int nz, int /*depth*/ = 1) const { return ZCtx{g_, nz}; }

    Scalar mk_rat(const Rat& c, int /*depth*/ = 1) const { return Scalar::from_rat(g_, c); }
    Scalar mk_one(int /*depth*/ = 1) const { return Scalar::one(g_); }
    Scalar mk_q_pow(int e, int /*depth*/ = 1) const { return Scalar::q_pow(g_, e); }
    Scalar mk_neg_v_pow(long e, int /*depth*/ = 1) const { return Scalar::neg_v_pow(g_, (int)e); }

    // P(1) = [Pic^0]
    Scalar pic0(int /*depth*/ = 1) const {
        Scalar p = Scalar::one(g_);
        for (int i = 1; i <= g_; ++i) {
            Scalar ai = Scalar::weil(g_, i);
            Scalar conj = Scalar::q_pow(g_, 1) / ai;
            p = p * (Scalar::one(g_) - ai) * (Scalar::one(g_) - conj);
        }
        return p;
    }

    // |X(F_q)| = q + 1 - sum_i (a_i + q/a_i)
    Scalar point_count(int /*depth*/ = 1) const {
        Scalar s = Scalar::q_pow(g_, 1) + Scalar::one(g_);
        for (int i = 1; i <= g_; ++i) {
            Scalar ai = Scalar::weil(g_, i);
            s = s - ai - Scalar::q_pow(g_, 1) / ai;
        }
        return s;
    }

    // P evaluated at a monomial, inside a z-context
    Z numerator_at(const ZCtx& c, const Monomial& m) const {
        Z mz = Bk::from_monomial(c, m);
        Z acc = Bk::one(c);
        for (int i = 1; i <= g_; ++i) {
            Z ai = {c, Frac<Rat>::variable(c.nvars(), i)};
            Z conj = Bk::from_monomial(c, Monomial::q_power(1)) / ai;
            acc = acc * (Bk::one(c) - ai * mz) * (Bk::one(c) - conj * mz);
        }
        return acc;
    }

    Z zeta_at(const ZCtx& c, const Monomial& m) const {
        if (m.is_constant() && (m.is_one() || m.is_q_power(-1)))
            throw pole_error("zeta evaluated exactly at a pole; use the starred evaluator");
        Z mz = Bk::from_monomial(c, m);
        Z qm = Bk::from_monomial(c, Monomial::q_power(1) * m);
        Z den = (Bk::one(c) - mz) * (Bk::one(c) - qm);
        if (den.is_zero()) throw pole_error("zeta denominator vanishes identically");
        return numerator_at(c, m) / den;
    }

    Z zeta_tilde_at(const ZCtx& c, const Monomial& m) const {
        Z zm = Bk::from_monomial(c, m.pow(1 - g_));
        return zm * zeta_at(c, m);
    }

    // Z*(q^{-1} m'); the only handled constant special point is m' = 1
    Z zstar_at(const ZCtx& c, const Monomial& mprime) const {
        if (mprime.is_constant()) {
            if (mprime.is_one()) {
                Scalar val = mk_q_pow(1 - g_) * pic0() / (mk_q_pow(1) - mk_one());
                return Bk::from_scalar(c, val);
            }
            if (mprime.is_q_power(1))
                throw precondition_error(
                    "starred zeta at the unhandled special point z = q");
        }
        return zeta_at(c, Monomial::q_power(-1) * mprime);
    }

  private:
    int g_;
};

template <>
class CurveData<TowBackend> {
  public:
    using Bk = TowBackend;
    using Scalar = TowerScalar;
    using Z = TowBackend::Z;
    using ZCtx = TowBackend::ZCtx;

    CurveData(int genus, long q, std::vector<long> counts) : g_(genus), q_(q), N_(std::move(counts)) {
        if (genus < 0) throw precondition_error("genus must be nonnegative");
        if (q < 2) throw precondition_error("q must be a prime power >= 2");
        if ((int)N_.size() != g_)
            throw precondition_error("need exactly g point counts N_1..N_g");
        // Weil bound |N_j - (q^j + 1)| <= 2g q^{j/2}
        for (int j = 1; j <= g_; ++j) {
            mpz_class lhs = mpz_class(N_[j - 1]) - (ipow(q_, j) + 1);
            if (lhs * lhs > 4 * mpz_class(g_) * mpz_class(g_) * ipow(q_, j))
                throw precondition_error("point counts violate the Weil bound");
        }
        // Newton: power sums from counts, then numerator coefficients
        std::vector<Rat> p(g_ + 1);
        for (int j = 1; j <= g_; ++j) p[j] = Rat(ipow(q_, j) + 1 - N_[j - 1]);
        c_.assign(2 * g_ + 1, Rat(0));
        c_[0] = 1;
        for (int m = 1; m <= g_; ++m) {
            Rat acc = p[m];
            for (int j = 1; j < m; ++j) acc += c_[j] * p[m - j];
            c_[m] = -acc / Rat(m);
        }
        // functional equation c_{2g-i} = q^{g-i} c_i
        for (int i = 0; i < g_; ++i) c_[2 * g_ - i] = Rat(ipow(q_, g_ - i)) * c_[i];
    }

    int genus() const { return g_; }
    long q() const { return q_; }

    ZCtx make_zctx(int nz, int depth) const { return ZCtx{q_, depth, nz}; }

    Scalar mk_rat(const Rat& c, int depth) const { return Scalar::from_rat(q_, depth, c); }
    Scalar mk_one(int depth) const { return Scalar::one(q_, depth); }
    Scalar mk_q_pow(int e, int depth) const { return Scalar::q_pow(q_, depth, e); }
    Scalar mk_neg_v_pow(long e, int depth) const { return Scalar::neg_v_pow(q_, depth, e); }

    // power sum of the Weil numbers, any index
    Rat power_sum(long m) const {
        if (m <= 0) return Rat(2 * g_);
        auto it = psums_.find(m);
        if (it != psums_.end()) return it->second;
        Rat v;
        if (m <= 2 * g_) {
            Rat acc = Rat(m) * c_[m];
            for (int j = 1; j < m; ++j) acc += c_[j] * power_sum(m - j);
            v = -acc;
        } else {
            Rat acc(0);
            for (int j = 1; j <= 2 * g_; ++j) acc += c_[j] * power_sum(m - j);
            v = -acc;
        }
        psums_[m] = v;
        return v;
    }

    // zeta numerator coefficients over F_{q^k}
    const std::vector<Rat>& numerator_coeffs(int k) const {
        auto it = levels_.find(k);
        if (it != levels_.end()) return it->second;
        std::vector<Rat> c(2 * g_ + 1, Rat(0));
        c[0] = 1;
        for (int m = 1; m <= 2 * g_; ++m) {
            Rat acc = power_sum((long)k * m);
            for (int j = 1; j < m; ++j) acc += c[j] * power_sum((long)k * (m - j));
            c[m] = -acc / Rat(m);
        }
        return levels_.emplace(k, std::move(c)).first->second;
    }

    Rat count_at_level(int k) const { return Rat(ipow(q_, k) + 1) - power_sum(k); }

    Rat pic0_at_level(int k) const {
        Rat s(0);
        for (const Rat& c : numerator_coeffs(k)) s += c;
        return s;
    }

    Scalar pic0(int depth) const {
        std::vector<QQrt> ls;
        for (int k = 1; k <= depth; ++k) ls.emplace_back(pic0_at_level(k));
        return Scalar(q_, std::move(ls));
    }

    Scalar point_count(int depth) const {
        std::vector<QQrt> ls;
        for (int k = 1; k <= depth; ++k) ls.emplace_back(count_at_level(k));
        return Scalar(q_, std::move(ls));
    }

    Z numerator_at(const ZCtx& c, const Monomial& m) const {
        Z out{c, {}};
        for (int k = 1; k <= c.K; ++k) {
            const auto& coef = numerator_coeffs(k);
            ExpVec e(c.nz, 0);
            for (auto& kv : m.zexp) e[kv.first] = kv.second;
            QQrt base = Bk::mono_coef(c, m, k);
            Frac<QQrt> acc = Frac<QQrt>::zero(c.nz);
            for (int j = 0; j <= 2 * g_; ++j) {
                if (coef[j] == 0) continue;
                ExpVec ej(c.nz, 0);
                for (int t = 0; t < c.nz; ++t) ej[t] = e[t] * j;
                Poly<QQrt> mono = Poly<QQrt>::monomial(c.nz, ej, QQrt(coef[j]) * base.pow(j));
                acc += Frac<QQrt>::from_poly(mono);
            }
            out.lev.push_back(std::move(acc));
        }
        return out;
    }

    Z zeta_at(const ZCtx& c, const Monomial& m) const {
        if (m.is_constant() && (m.is_one() || m.is_q_power(-1)))
            throw pole_error("zeta evaluated exactly at a pole; use the starred evaluator");
        Z mz = Bk::from_monomial(c, m);
        Z qm = Bk::from_monomial(c, Monomial::q_power(1) * m);
        Z den = (Bk::one(c) - mz) * (Bk::one(c) - qm);
        for (auto& f : den.lev)
            if (f.is_zero()) throw pole_error("zeta denominator vanishes identically");
        return numerator_at(c, m) / den;
    }

    Z zeta_tilde_at(const ZCtx& c, const Monomial& m) const {
        Z zm = Bk::from_monomial(c, m.pow(1 - g_));
        return zm * zeta_at(c, m);
    }

    Z zstar_at(const ZCtx& c, const Monomial& mprime) const {
        if (mprime.is_constant()) {
            if (mprime.is_one()) {
                std::vector<QQrt> ls;
                for (int k = 1; k <= c.K; ++k) {
                    Rat qk = Rat(ipow(q_, k));
                    Rat val = pic0_at_level(k) / (qk - 1);
                    // q^{k(1-g)} may be a fraction for g > 1
                    val *= rat_pow(qk, 1 - g_);
                    ls.emplace_back(val);
                }
                return Bk::from_scalar(c, Scalar(q_, std::move(ls)));
            }
            if (mprime.is_q_power(1))
                throw precondition_error(
                    "starred zeta at the unhandled special point z = q");
        }
        return zeta_at(c, Monomial::q_power(-1) * mprime);
    }

  private:
    int g_;
    long q_;
    std::vector<long> N_;
    std::vector<Rat> c_;  // level-1 numerator coefficients
    mutable std::map<long, Rat> psums_;
    mutable std::map<int, std::vector<Rat>> levels_;
};

}  // namespace higgsdt
