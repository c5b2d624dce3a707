// Exact Lorentzian linear algebra over Q(sqrt2, sqrt3): 5-vectors with the
// Minkowski form diag(-1,1,1,1,1), 5x5 matrices, and kernel computation.

#ifndef RAC_LINALG_HPP
#define RAC_LINALG_HPP

#include <array>
#include <vector>
#include "rac/field.hpp"

namespace rac {

using LorentzVector = std::array<FieldElement, 5>;

/// <x, y> = -x0 y0 + x1 y1 + ... + x4 y4
inline FieldElement minkowski_inner(const LorentzVector& x, const LorentzVector& y) {
    FieldElement s = -(x[0] * y[0]);
    for (int i = 1; i < 5; ++i) s += x[i] * y[i];
    return s;
}

inline LorentzVector lv_scale(const LorentzVector& x, const FieldElement& t) {
    LorentzVector r;
    for (int i = 0; i < 5; ++i) r[i] = x[i] * t;
    return r;
}

inline bool lv_equal(const LorentzVector& x, const LorentzVector& y) {
    for (int i = 0; i < 5; ++i) if (!(x[i] == y[i])) return false;
    return true;
}

struct Mat5 {
    std::array<std::array<FieldElement, 5>, 5> m{};

    static Mat5 identity() {
        Mat5 r;
        for (int i = 0; i < 5; ++i) r.m[i][i] = FieldElement(1);
        return r;
    }

    LorentzVector apply(const LorentzVector& v) const {
        LorentzVector out;
        for (int i = 0; i < 5; ++i) {
            FieldElement s;
            for (int j = 0; j < 5; ++j) s += m[i][j] * v[j];
            out[i] = s;
        }
        return out;
    }

    Mat5 operator*(const Mat5& o) const {
        Mat5 r;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                FieldElement s;
                for (int k = 0; k < 5; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Mat5 transpose() const {
        Mat5 r;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    bool operator==(const Mat5& o) const {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (!(m[i][j] == o.m[i][j])) return false;
        return true;
    }

    /// Exact determinant by fraction-free-ish elimination.
    FieldElement det() const {
        auto a = m;
        FieldElement d(1);
        int sign = 1;
        for (int c = 0; c < 5; ++c) {
            int p = -1;
            for (int r = c; r < 5; ++r)
                if (!a[r][c].is_zero()) { p = r; break; }
            if (p < 0) return FieldElement(0);
            if (p != c) { std::swap(a[p], a[c]); sign = -sign; }
            d *= a[c][c];
            FieldElement inv = a[c][c].inverse();
            for (int r = c + 1; r < 5; ++r) {
                if (a[r][c].is_zero()) continue;
                FieldElement f = a[r][c] * inv;
                for (int j = c; j < 5; ++j) a[r][j] -= f * a[c][j];
            }
        }
        if (sign < 0) d = -d;
        return d;
    }

    /// M^T J M == J with J = diag(-1,1,1,1,1).
    bool preserves_minkowski_form() const {
        Mat5 j;
        j.m[0][0] = FieldElement(-1);
        for (int i = 1; i < 5; ++i) j.m[i][i] = FieldElement(1);
        return (transpose() * j * *this) == j;
    }
};

/// Exact basis of { x : <x, row_i> = 0 for all i } w.r.t. the Minkowski form.
inline std::vector<LorentzVector> solve_linear(const std::vector<LorentzVector>& rows) {
    // ordinary linear system with coefficient rows J*r
    size_t nr = rows.size();
    std::vector<std::array<FieldElement, 5>> m(nr);
    for (size_t i = 0; i < nr; ++i) {
        m[i][0] = -rows[i][0];
        for (int j = 1; j < 5; ++j) m[i][j] = rows[i][j];
    }
    std::vector<int> piv_cols;
    size_t pr = 0;
    for (int c = 0; c < 5 && pr < nr; ++c) {
        size_t p = pr;
        while (p < nr && m[p][c].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(m[p], m[pr]);
        FieldElement inv = m[pr][c].inverse();
        for (int j = 0; j < 5; ++j) m[pr][j] *= inv;
        for (size_t r = 0; r < nr; ++r) {
            if (r == pr || m[r][c].is_zero()) continue;
            FieldElement f = m[r][c];
            for (int j = 0; j < 5; ++j) m[r][j] -= f * m[pr][j];
        }
        piv_cols.push_back(c);
        ++pr;
    }
    std::vector<LorentzVector> basis;
    for (int fc = 0; fc < 5; ++fc) {
        bool is_piv = false;
        for (int pc : piv_cols) if (pc == fc) { is_piv = true; break; }
        if (is_piv) continue;
        LorentzVector v{};
        v[fc] = FieldElement(1);
        for (size_t i = 0; i < piv_cols.size(); ++i) v[piv_cols[i]] = -m[i][fc];
        basis.push_back(v);
    }
    return basis;
}

/// Clears denominators and divides by the content, fixing the sign of the
/// first nonzero coordinate to +1. Projective canonical representative.
inline LorentzVector lv_primitive(const LorentzVector& x) {
    // collect lcm of all denominators across the 4 coordinates of each entry
    Integer lcm = 1;
    auto upd = [&](const Rational& q) {
        Integer d = denominator(q);
        lcm = boost::multiprecision::lcm(lcm, d);
    };
    for (auto& e : x) { upd(e.a); upd(e.b); upd(e.c); upd(e.d); }
    LorentzVector y = lv_scale(x, FieldElement(Rational(lcm)));
    Integer g = 0;
    auto updg = [&](const Rational& q) {
        g = boost::multiprecision::gcd(g, numerator(q));
    };
    for (auto& e : y) { updg(e.a); updg(e.b); updg(e.c); updg(e.d); }
    if (g != 0) y = lv_scale(y, FieldElement(Rational(Integer(1), g)));
    for (auto& e : y) {
        int s = e.sign();
        if (s != 0) {
            if (s < 0) y = lv_scale(y, FieldElement(-1));
            break;
        }
    }
    return y;
}

}  // namespace rac

#endif  // RAC_LINALG_HPP
