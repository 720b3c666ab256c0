#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace higgsdt {

// Integer partition, parts weakly decreasing.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            assert(parts_[i] >= parts_[i + 1]);
        for (int p : parts_) assert(p >= 1);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_[0]; }

    // multiplicity of part i (1-based)
    int multiplicity(int i) const {
        int m = 0;
        for (int p : parts_)
            if (p == i) ++m;
        return m;
    }

    // r_{<i} = number of parts strictly smaller than i
    int count_less(int i) const {
        int m = 0;
        for (int p : parts_)
            if (p < i) ++m;
        return m;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= largest(); ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    // <lambda,lambda> = sum of squares of the conjugate parts
    long pairing() const {
        long s = 0;
        for (int c : conjugate().parts()) s += (long)c * c;
        return s;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

// Cell of a Young diagram with its arm and leg statistics.
struct Cell {
    int row = 0, col = 0;  // 1-based
    int arm = 0, leg = 0;
};

inline std::vector<Cell> cells(const Partition& la) {
    std::vector<Cell> out;
    Partition conj = la.conjugate();
    for (int i = 1; i <= la.length(); ++i) {
        int row_len = la.parts()[i - 1];
        for (int j = 1; j <= row_len; ++j) {
            Cell c;
            c.row = i;
            c.col = j;
            c.arm = row_len - j;
            c.leg = conj.parts()[j - 1] - i;
            out.push_back(c);
        }
    }
    return out;
}

inline std::vector<Partition> enumerate_partitions(int r) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending parts, depth-first
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

// All block-multiplicity sequences (r_1,...,r_t) with sum i*r_i = r, r_t >= 1.
inline std::vector<std::vector<int>> enumerate_jgen(int r) {
    std::vector<std::vector<int>> out;
    for (const Partition& la : enumerate_partitions(r)) {
        std::vector<int> seq(la.largest(), 0);
        for (int p : la.parts()) seq[p - 1] += 1;
        out.push_back(std::move(seq));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Jordan types for the rank-degree lattice (single vertex)
// ---------------------------------------------------------------------------

struct LatticePair {
    long r = 0, d = 0;
    friend LatticePair operator+(LatticePair a, LatticePair b) { return {a.r + b.r, a.d + b.d}; }
    friend bool operator==(LatticePair a, LatticePair b) { return a.r == b.r && a.d == b.d; }
    bool is_zero() const { return r == 0 && d == 0; }
};

// shift by m twists: (r, d) -> (r, d + m*l*r)
inline LatticePair shift_pair(LatticePair g, long l, long m) { return {g.r, g.d + m * l * g.r}; }

// Tuple (alpha_0, ..., alpha_{s-1}) of lattice points together with the twist degree.
struct JordanType {
    std::vector<LatticePair> alpha;
    long l = 0;
};

struct JordanShape {
    std::vector<LatticePair> f2;  // f''_k, k = 0..s
    std::vector<LatticePair> f1;  // f'_k,  k = 0..s
    Partition lambda;
};

inline JordanShape jordan_shape(const JordanType& jt) {
    int s = (int)jt.alpha.size();
    JordanShape out;
    out.f2.resize(s + 1);
    out.f1.resize(s + 1);
    for (int k = 0; k <= s; ++k) {
        LatticePair f2k{0, 0}, f1k{0, 0};
        for (int j = k; j < s; ++j) {
            f2k = f2k + shift_pair(jt.alpha[j], jt.l, -k);
            f1k = f1k + shift_pair(jt.alpha[j], jt.l, -j);
        }
        out.f2[k] = f2k;
        out.f1[k] = f1k;
    }
    std::vector<int> parts;
    for (int j = s - 1; j >= 0; --j)
        for (long m = 0; m < jt.alpha[j].r; ++m) parts.push_back(j + 1);
    out.lambda = Partition(std::move(parts));
    return out;
}

// class of the whole object: sum of the f''_k
inline LatticePair jordan_class(const JordanType& jt) {
    auto sh = jordan_shape(jt);
    LatticePair c{0, 0};
    for (const auto& p : sh.f2) c = c + p;
    return c;
}

}  // namespace higgsdt
