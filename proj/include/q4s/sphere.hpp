// The coordinate *-algebra of the orthogonal quantum 4-sphere: symbolic
// affine elements (degree <= 1 polynomials in the generators) with the module
// Hopf action, the 4x4 idempotent that splits the chiral spinor modules, and
// the three families of concrete representations:
//   - the two simple representations on l^2(N^2),
//   - the equivariant left regular ("scalar") representation on the integer-l
//     tower,
//   - the two equivariant chiral ("spinor") representations on the
//     half-odd-integer-l tower, distinguished by the chirality sign.
#pragma once

#include <array>
#include <functional>
#include <stdexcept>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/uqso5.hpp"

namespace q4s {

enum class XGen { x0, x1, x2 };

inline const char* to_string(XGen g) {
    switch (g) {
        case XGen::x0: return "x0";
        case XGen::x1: return "x1";
        case XGen::x2: return "x2";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Symbolic affine elements  c0 * 1 + sum_i (c_i x_i + d_i x_i^*).
// x0 is self-adjoint: its coefficient lives in x[0] only (xs[0] unused).
// ---------------------------------------------------------------------------
struct AffineElement {
    cplx one{};
    std::array<cplx, 3> x{};   // coefficients of x0, x1, x2
    std::array<cplx, 3> xs{};  // coefficients of x1^*, x2^* (index 0 unused)

    static AffineElement unit(cplx c = 1.0) {
        AffineElement a;
        a.one = c;
        return a;
    }
    static AffineElement gen(XGen g, cplx c = 1.0) {
        AffineElement a;
        a.x[static_cast<int>(g)] = c;
        return a;
    }
    static AffineElement gen_star(XGen g, cplx c = 1.0) {
        AffineElement a;
        if (g == XGen::x0)
            a.x[0] = c;  // x0^* = x0
        else
            a.xs[static_cast<int>(g)] = c;
        return a;
    }

    AffineElement operator+(const AffineElement& b) const {
        AffineElement r = *this;
        r.one += b.one;
        for (int i = 0; i < 3; ++i) {
            r.x[i] += b.x[i];
            r.xs[i] += b.xs[i];
        }
        return r;
    }
    AffineElement operator-(const AffineElement& b) const { return *this + (-1.0) * b; }
    friend AffineElement operator*(cplx c, const AffineElement& a) {
        AffineElement r = a;
        r.one *= c;
        for (int i = 0; i < 3; ++i) {
            r.x[i] *= c;
            r.xs[i] *= c;
        }
        return r;
    }

    AffineElement star() const {
        AffineElement r;
        r.one = std::conj(one);
        r.x[0] = std::conj(x[0]);  // x0 self-adjoint
        for (int i = 1; i < 3; ++i) {
            r.xs[i] = std::conj(x[i]);
            r.x[i] = std::conj(xs[i]);
        }
        return r;
    }

    double max_abs() const {
        double m = std::abs(one);
        for (int i = 0; i < 3; ++i) m = std::max({m, std::abs(x[i]), std::abs(xs[i])});
        return m;
    }
};

// Module Hopf action of a generator on an affine element, extended from
//   K_i |> x_i = q x_i,  K_2 |> x_1 = q^{-1} x_1,
//   E_1 |> x_0 = q^{-1/2} x_1,  E_2 |> x_1 = x_2,
//   F_1 |> x_1 = q^{1/2}[2] x_0,  F_1 |> x_0 = -q^{-3/2} x_1^*,  F_2 |> x_2 = x_1,
// all other generator pairs acting trivially, with h |> 1 = eps(h) 1 and the
// involution compatibility h |> a^* = { S(h)^* |> a }^*.
inline AffineElement hopf_action(UqGen h, const AffineElement& a, const QContext& ctx) {
    const double q = ctx.q;
    AffineElement r;
    auto scale_K = [&](double sx1, double sx2) {
        r = a;
        r.x[1] *= sx1;
        r.x[2] *= sx2;
        r.xs[1] /= sx1;
        r.xs[2] /= sx2;
    };
    switch (h) {
        case UqGen::K1: scale_K(q, 1.0); break;
        case UqGen::K1inv: scale_K(1.0 / q, 1.0); break;
        case UqGen::K2: scale_K(1.0 / q, q); break;
        case UqGen::K2inv: scale_K(q, 1.0 / q); break;
        case UqGen::E1:
            // E_1 |> x_0 = q^{-1/2} x_1 ;  E_1 |> x_1^* = {-q F_1 |> x_1}^*
            r.x[1] = ctx.pow_q(-0.5) * a.x[0];
            r.x[0] = -ctx.pow_q(1.5) * q_number2(4, ctx) * a.xs[1];
            break;
        case UqGen::E2:
            // E_2 |> x_1 = x_2 ;  E_2 |> x_2^* = {-q^2 F_2 |> x_2}^*
            r.x[2] = a.x[1];
            r.xs[1] = -q * q * a.xs[2];
            break;
        case UqGen::F1:
            // F_1 |> x_1 = q^{1/2}[2] x_0 ;  F_1 |> x_0 = -q^{-3/2} x_1^*
            r.x[0] = ctx.pow_q(0.5) * q_number2(4, ctx) * a.x[1];
            r.xs[1] = -ctx.pow_q(-1.5) * a.x[0];
            break;
        case UqGen::F2:
            // F_2 |> x_2 = x_1 ;  F_2 |> x_1^* = {-q^{-2} E_2 |> x_1}^*
            r.x[1] = a.x[2];
            r.xs[2] = -a.xs[1] / (q * q);
            break;
    }
    return r;
}

// Modular automorphism kappa(a) = K_1^8 K_2^6 |> a: scales x_1 by q^2 and
// x_2 by q^6 (inverse powers on the adjoints), fixes 1 and x_0.
inline AffineElement kappa(const AffineElement& a, const QContext& ctx) {
    AffineElement r = a;
    r.x[1] *= ctx.pow_q2(4);
    r.x[2] *= ctx.pow_q2(12);
    r.xs[1] *= ctx.pow_q2(-4);
    r.xs[2] *= ctx.pow_q2(-12);
    return r;
}

// ---------------------------------------------------------------------------
// The idempotent splitting the rank-4 free module into the chiral halves,
// and the 4-dimensional spin representation intertwining its covariance.
// ---------------------------------------------------------------------------
using AffineMatrix = std::array<std::array<AffineElement, 4>, 4>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;

inline AffineMatrix idempotent_e(const QContext& ctx) {
    auto u = AffineElement::unit;
    auto g = AffineElement::gen;
    auto gs = AffineElement::gen_star;
    const double q = ctx.q;
    const double q3 = q * q * q;
    AffineMatrix e{};
    e[0][0] = u(0.5) + g(XGen::x0, 0.5);
    e[0][1] = g(XGen::x2, 0.5 * q3);
    e[0][2] = g(XGen::x1, -0.5 * q);
    e[1][0] = gs(XGen::x2, 0.5 / q3);
    e[1][1] = u(0.5) + g(XGen::x0, -0.5 * q * q);
    e[1][3] = g(XGen::x1, 0.5 * q3);
    e[2][0] = gs(XGen::x1, -0.5 / q);
    e[2][2] = u(0.5) + g(XGen::x0, -0.5 * q * q);
    e[2][3] = g(XGen::x2, 0.5 * q3);
    e[3][1] = gs(XGen::x1, 0.5 * q);
    e[3][2] = gs(XGen::x2, 0.5 / q3);
    e[3][3] = u(0.5) + g(XGen::x0, 0.5 * q3 * q);
    return e;
}

// 4x4 spin representation used in the covariance identity for e.
inline Mat4 spin4(UqGen h, const QContext& ctx) {
    Mat4 m{};
    const double q = ctx.q;
    switch (h) {
        case UqGen::K1:
        case UqGen::K1inv: {
            double s = (h == UqGen::K1) ? 0.5 : -0.5;
            m[0][0] = m[1][1] = ctx.pow_q(s);
            m[2][2] = m[3][3] = ctx.pow_q(-s);
            break;
        }
        case UqGen::K2:
        case UqGen::K2inv: {
            double s = (h == UqGen::K2) ? 1.0 : -1.0;
            m[0][0] = m[3][3] = 1.0;
            m[1][1] = ctx.pow_q(-s);
            m[2][2] = ctx.pow_q(s);
            break;
        }
        case UqGen::E1:
            m[0][2] = m[1][3] = 1.0;
            break;
        case UqGen::E2:
            m[2][1] = 1.0;
            break;
        case UqGen::F1:
            m[2][0] = m[3][1] = 1.0;
            break;
        case UqGen::F2:
            m[1][2] = 1.0;
            break;
    }
    (void)q;
    return m;
}

inline AffineMatrix mat_mul(const Mat4& m, const AffineMatrix& a) {
    AffineMatrix r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][k] = r[i][k] + m[i][j] * a[j][k];
    return r;
}
inline AffineMatrix mat_mul(const AffineMatrix& a, const Mat4& m) {
    AffineMatrix r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][k] = r[i][k] + m[j][k] * a[i][j];
    return r;
}

inline AffineMatrix hopf_action(UqGen h, const AffineMatrix& a, const QContext& ctx) {
    AffineMatrix r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i][k] = hopf_action(h, a[i][k], ctx);
    return r;
}

inline double matrix_residual(const AffineMatrix& a, const AffineMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) m = std::max(m, (a[i][k] - b[i][k]).max_abs());
    return m;
}

// Residuals of the symbolic covariance identities of the idempotent:
//   K_i |> e = s(K_i) e s(K_i)^{-1},
//   E_i |> e = s(F_i) e s(K_i)^{-1} - q^{-i} s(K_i)^{-1} e s(F_i),
// together with the reality constraint  kappa |> e^* = e.  Returns the max
// absolute coefficient deviation over all identities.
inline double covariance_residual_e(const QContext& ctx) {
    const AffineMatrix e = idempotent_e(ctx);
    double res = 0.0;
    for (int i = 1; i <= 2; ++i) {
        UqGen K = (i == 1) ? UqGen::K1 : UqGen::K2;
        UqGen Ki = (i == 1) ? UqGen::K1inv : UqGen::K2inv;
        UqGen E = (i == 1) ? UqGen::E1 : UqGen::E2;
        UqGen F = (i == 1) ? UqGen::F1 : UqGen::F2;
        const Mat4 sK = spin4(K, ctx), sKi = spin4(Ki, ctx), sF = spin4(F, ctx);
        res = std::max(res, matrix_residual(hopf_action(K, e, ctx), mat_mul(mat_mul(sK, e), sKi)));
        AffineMatrix rhs = mat_mul(mat_mul(sF, e), sKi);
        AffineMatrix sub = mat_mul(mat_mul(sKi, e), sF);
        const double w = (i == 1) ? 1.0 / ctx.q : 1.0 / (ctx.q * ctx.q);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) rhs[r][c] = rhs[r][c] - w * sub[r][c];
        res = std::max(res, matrix_residual(hopf_action(E, e, ctx), rhs));
    }
    // reality: kappa |> e^* = e
    AffineMatrix estar{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) estar[r][c] = kappa(e[c][r].star(), ctx);
    res = std::max(res, matrix_residual(estar, e));
    return res;
}

// ---------------------------------------------------------------------------
// Simple representations on l^2(N^2) (sign = +1 or -1):
//   x0 |k1,k2> = sign * q^{2(k1+k2)} |k1,k2>
//   x1 |k1,k2> = q^{2 k2} sqrt(1 - q^{4(k1+1)}) |k1+1,k2>
//   x2 |k1,k2> = sqrt(1 - q^{4(k2+1)}) |k1,k2+1>
// ---------------------------------------------------------------------------
inline PlaneOperator simple_generator(XGen g, int sign, const PlaneSpace& sp,
                                      const QContext& ctx) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("simple_generator: sign must be +1 or -1");
    PlaneOperator op(sp);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const PlaneLabel k = sp.label(i);
        switch (g) {
            case XGen::x0:
                op.add_entry(i, PlaneDisp{0, 0}, sign * ctx.pow_q2(4 * (k.k1 + k.k2)));
                break;
            case XGen::x1:
                op.add_entry(i, PlaneDisp{1, 0},
                             ctx.pow_q2(4 * k.k2) *
                                 std::sqrt(1.0 - ctx.pow_q2(8 * (k.k1 + 1))));
                break;
            case XGen::x2:
                op.add_entry(i, PlaneDisp{0, 1}, std::sqrt(1.0 - ctx.pow_q2(8 * (k.k2 + 1))));
                break;
        }
    }
    return op;
}

// ---------------------------------------------------------------------------
// Matrix coefficient functions of the equivariant representations.
// All label arguments are doubled (two_j, two_m1, two_l, two_m2); the parity
// sign eps is recomputed internally from (l, j, m2) where it enters.
// ---------------------------------------------------------------------------
namespace coef {

inline double ratio_sqrt(std::initializer_list<std::int64_t> num,
                         std::initializer_list<std::int64_t> den, const QContext& ctx) {
    double n = q_number_product2(num, ctx);
    if (n == 0.0) return 0.0;
    double r = n / q_number_product2(den, ctx);
    if (r < 0.0) {
        if (r > -1e-12) return 0.0;
        throw std::domain_error("ratio_sqrt: negative radicand");
    }
    return std::sqrt(r);
}

inline int two_eps_of(int tl, int tj, int tm2) {
    if (tl % 2 == 0) return 0;
    int e = (tl + 1 - tj - tm2) / 2;
    return (e % 2 == 0) ? +1 : -1;
}

// --- left regular (scalar) representation ---

inline double sc_A(int tj, int tm1, const QContext& c) {
    return c.pow_q2(tm1 - 2) *
           ratio_sqrt({tj + tm1 + 2, tj - tm1 + 2}, {2 * tj + 2, 2 * tj + 6}, c);
}
inline double sc_Bp(int tj, int tm1, const QContext& c) {
    return c.pow_q2(-tj + tm1 - 1) *
           ratio_sqrt({tj + tm1 + 2, tj + tm1 + 4}, {2 * tj + 2, 2 * tj + 6}, c);
}
inline double sc_Bm(int tj, int tm1, const QContext& c) {
    return -c.pow_q2(tj + tm1 + 1) *
           ratio_sqrt({tj - tm1, tj - tm1 - 2}, {2 * tj - 2, 2 * tj + 2}, c);
}
inline double sc_Cp(int tl, int tj, int tm2, const QContext& c) {
    return c.pow_q2(tm2 - 2) * ratio_sqrt({tl + tj + tm2 + 6, tl + tj - tm2 + 6},
                                          {2 * tl + 6, 2 * tl + 10}, c);
}
inline double sc_Cm(int tl, int tj, int tm2, const QContext& c) {
    return -c.pow_q2(tm2 - 2) *
           ratio_sqrt({tl - tj + tm2, tl - tj - tm2}, {2 * tl + 2, 2 * tl + 6}, c);
}
inline double sc_Dp(int tl, int tj, int tm2, const QContext& c) {
    return c.pow_q2(-tl + tm2 - 3) * ratio_sqrt({tl + tj + tm2 + 6, tl - tj + tm2 + 4},
                                                {2 * tl + 6, 2 * tl + 10}, c);
}
inline double sc_Dm(int tl, int tj, int tm2, const QContext& c) {
    return c.pow_q2(tl + tm2 + 3) * ratio_sqrt({tl - tj - tm2, tl + tj - tm2 + 2},
                                               {2 * tl + 2, 2 * tl + 6}, c);
}

// --- chiral (spinor) representations ---

inline double ch_Ap(int tj, int tm1, const QContext& c) {
    return c.pow_q2(tm1 - 2) * ratio_sqrt({tj + tm1 + 2, tj - tm1 + 2}, {}, c) /
           q_number2(2 * tj + 4, c);
}
inline double ch_A0(int tj, int tm1, const QContext& c) {
    double num = c.pow_q2(tj + tm1 + 2) * q_number2(4, c) * q_number2(tj - tm1, c) -
                 q_number2(2 * tj, c);
    return c.pow_q2(-4) * num / (q_number2(2 * tj, c) * q_number2(2 * tj + 4, c));
}
inline double ch_Bp(int tj, int tm1, const QContext& c) {
    return c.pow_q2(-tj + tm1 - 1) * ratio_sqrt({tj + tm1 + 2, tj + tm1 + 4}, {}, c) /
           q_number2(2 * tj + 4, c);
}
inline double ch_B0(int tj, int tm1, const QContext& c) {
    return (1.0 + c.q * c.q) * c.pow_q2(tm1 - 1) *
           ratio_sqrt({tj - tm1, tj + tm1 + 2}, {}, c) /
           (q_number2(2 * tj, c) * q_number2(2 * tj + 4, c));
}
inline double ch_Bm(int tj, int tm1, const QContext& c) {
    return -c.pow_q2(tj + tm1 + 1) * ratio_sqrt({tj - tm1, tj - tm1 - 2}, {}, c) /
           q_number2(2 * tj, c);
}
inline double ch_Cp(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return -c.pow_q2(tm2 - 2 - te) *
           ratio_sqrt({tl + tj + tm2 + 6 + te, tl + tj - tm2 + 6 - te}, {}, c) /
           q_number2(2 * tl + 8, c);
}
inline double ch_C0(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return q_number2(4 * te, c) * c.pow_q2(te * tl + tm2 - 2 + 3 * te) *
           ratio_sqrt({tl + 1 + tj - te * tm2 + 4, tl + 1 - tj - te * tm2}, {}, c) /
           (q_number2(2 * tl + 4, c) * q_number2(2 * tl + 8, c));
}
inline double ch_Cm(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return -c.pow_q2(tm2 - 2 + te) *
           ratio_sqrt({tl - tj + tm2 - te, tl - tj - tm2 + te}, {}, c) /
           q_number2(2 * tl + 4, c);
}
inline double ch_Hp(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return c.pow_q2(tm2 - 2 + te * (tj + 1)) *
           ratio_sqrt({tl + te * tj - tm2 + 4 + te, tl - te * tj + tm2 + 4 - te}, {}, c) /
           q_number2(2 * tl + 8, c);
}
inline double ch_H0(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    const int w = te * (tj + 1);  // doubled eps(2j+1)
    double t1 = q_number2(tl - w - tm2 + 2, c) * q_number2(tl - w + tm2 + 4, c);
    double t2 = q_number2(tl + w - tm2 + 4, c) * q_number2(tl + w + tm2 + 2, c);
    return (t1 - c.pow_q2(-4) * t2) /
           (q_number2(2 * tl + 4, c) * q_number2(2 * tl + 8, c));
}
inline double ch_Dp(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return c.pow_q2(-tl + tm2 - 3) *
           ratio_sqrt({tl + tj + tm2 + 6 + te, tl - tj + tm2 + 4 - te}, {}, c) /
           q_number2(2 * tl + 8, c);
}
inline double ch_D0(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return q_number2(4, c) * c.pow_q2(tm2 + 1) *
           ratio_sqrt({tl - te * tj - tm2 + 2 - te, tl - te * tj + tm2 + 4 - te}, {}, c) /
           (q_number2(2 * tl + 4, c) * q_number2(2 * tl + 8, c));
}
inline double ch_Dm(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return -c.pow_q2(tl + tm2 + 3) *
           ratio_sqrt({tl - tj - tm2 + te, tl + tj - tm2 + 2 - te}, {}, c) /
           q_number2(2 * tl + 4, c);
}

}  // namespace coef

// ---------------------------------------------------------------------------
// The equivariant representations as banded operators.
// ---------------------------------------------------------------------------

// Left regular representation on the integer-l tower.
inline SparseOperator scalar_generator(XGen g, const TruncatedSpace& sp, const QContext& ctx) {
    if (sp.family != Family::scalar)
        throw std::invalid_argument("scalar_generator: scalar-family space required");
    using namespace coef;
    SparseOperator op(sp);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const BasisLabel& s = sp.label(i);
        const int tl = s.two_l, tj = s.two_j, tm1 = s.two_m1, tm2 = s.two_m2;
        // The coefficient is evaluated only when the target is admissible:
        // outside the admissible set the formulas are not defined.
        auto put = [&](LabelDisp d, auto amp_fn) {
            if (!admissible(s + d, Family::scalar)) return;
            double amp = amp_fn();
            if (amp != 0.0) op.add_entry(i, d, amp);
        };
        switch (g) {
            case XGen::x0:
                put({+2, 0, 0, +2, 0},
                    [&] { return sc_A(tj, tm1, ctx) * sc_Cp(tl, tj, tm2, ctx); });
                put({-2, 0, 0, +2, 0},
                    [&] { return sc_A(tj, tm1, ctx) * sc_Cm(tl, tj, tm2, ctx); });
                if (tj >= 2) {
                    put({+2, 0, 0, -2, 0},
                        [&] { return sc_A(tj - 2, tm1, ctx) * sc_Cm(tl + 2, tj - 2, tm2, ctx); });
                    put({-2, 0, 0, -2, 0},
                        [&] { return sc_A(tj - 2, tm1, ctx) * sc_Cp(tl - 2, tj - 2, tm2, ctx); });
                }
                break;
            case XGen::x1:
                put({+2, +2, 0, +2, 0},
                    [&] { return sc_Bp(tj, tm1, ctx) * sc_Cp(tl, tj, tm2, ctx); });
                put({-2, +2, 0, +2, 0},
                    [&] { return sc_Bp(tj, tm1, ctx) * sc_Cm(tl, tj, tm2, ctx); });
                if (tj >= 2) {
                    put({+2, +2, 0, -2, 0},
                        [&] { return sc_Bm(tj, tm1, ctx) * sc_Cm(tl + 2, tj - 2, tm2, ctx); });
                    put({-2, +2, 0, -2, 0},
                        [&] { return sc_Bm(tj, tm1, ctx) * sc_Cp(tl - 2, tj - 2, tm2, ctx); });
                }
                break;
            case XGen::x2:
                put({+2, 0, +2, 0, 0}, [&] { return sc_Dp(tl, tj, tm2, ctx); });
                put({-2, 0, +2, 0, 0}, [&] { return sc_Dm(tl, tj, tm2, ctx); });
                break;
        }
    }
    return op;
}

// Outgoing matrix elements of the chiral representation from one admissible
// spinor label: the list of (displacement, amplitude) pairs describing
// x_g |s>.  The two chiralities share the label space (chi = +1 / -1) and
// differ by the signs of the diagonal-in-l terms.
inline void spinor_label_entries(XGen g, const BasisLabel& s, const QContext& ctx,
                                 const std::function<void(LabelDisp, double)>& emit) {
    using namespace coef;
    const int tl = s.two_l, tj = s.two_j, tm1 = s.two_m1, tm2 = s.two_m2;
    const double u = static_cast<double>(s.chi);  // upper sign for chi = +1
    auto put = [&](LabelDisp d, auto amp_fn) {
        if (!admissible(s + d, Family::spinor)) return;
        double amp = amp_fn();
        if (amp != 0.0) emit(d, amp);
    };
    const int dm1 = (g == XGen::x1) ? +2 : 0;
    switch (g) {
        case XGen::x0:
        case XGen::x1: {
            const bool is_x0 = (g == XGen::x0);
            // j+1 band
            auto mp = [&] { return is_x0 ? ch_Ap(tj, tm1, ctx) : ch_Bp(tj, tm1, ctx); };
            put({+2, dm1, 0, +2, 0}, [&] { return mp() * ch_Cp(tl, tj, tm2, ctx); });
            put({0, dm1, 0, +2, 0}, [&] { return -u * mp() * ch_C0(tl, tj, tm2, ctx); });
            put({-2, dm1, 0, +2, 0}, [&] { return mp() * ch_Cm(tl, tj, tm2, ctx); });
            // j band
            auto m0 = [&] { return is_x0 ? ch_A0(tj, tm1, ctx) : ch_B0(tj, tm1, ctx); };
            put({+2, dm1, 0, 0, 0}, [&] { return m0() * ch_Hp(tl, tj, tm2, ctx); });
            put({0, dm1, 0, 0, 0}, [&] { return u * m0() * ch_H0(tl, tj, tm2, ctx); });
            put({-2, dm1, 0, 0, 0}, [&] { return m0() * ch_Hp(tl - 2, tj, tm2, ctx); });
            // j-1 band
            if (tj >= 2) {
                auto mm = [&] { return is_x0 ? ch_Ap(tj - 2, tm1, ctx) : ch_Bm(tj, tm1, ctx); };
                put({+2, dm1, 0, -2, 0}, [&] { return mm() * ch_Cm(tl + 2, tj - 2, tm2, ctx); });
                put({0, dm1, 0, -2, 0}, [&] { return -u * mm() * ch_C0(tl, tj - 2, tm2, ctx); });
                put({-2, dm1, 0, -2, 0}, [&] { return mm() * ch_Cp(tl - 2, tj - 2, tm2, ctx); });
            }
            break;
        }
        case XGen::x2:
            put({+2, 0, +2, 0, 0}, [&] { return ch_Dp(tl, tj, tm2, ctx); });
            put({0, 0, +2, 0, 0}, [&] { return u * ch_D0(tl, tj, tm2, ctx); });
            put({-2, 0, +2, 0, 0}, [&] { return ch_Dm(tl, tj, tm2, ctx); });
            break;
    }
}

inline SparseOperator spinor_generator(XGen g, const TruncatedSpace& sp, const QContext& ctx) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("spinor_generator: spinor-family space required");
    SparseOperator op(sp);
    for (std::size_t i = 0; i < sp.size(); ++i)
        spinor_label_entries(g, sp.label(i), ctx,
                             [&](LabelDisp d, double amp) { op.add_entry(i, d, amp); });
    return op;
}

// Family dispatch for the irrep towers.
inline SparseOperator sphere_generator(XGen g, const TruncatedSpace& sp, const QContext& ctx) {
    if (sp.family == Family::scalar) return scalar_generator(g, sp, ctx);
    if (sp.family == Family::spinor) return spinor_generator(g, sp, ctx);
    throw std::invalid_argument("sphere_generator: scalar or spinor family required");
}

// ---------------------------------------------------------------------------
// Representation of affine elements and 4x4 matrices over the algebra.
// ---------------------------------------------------------------------------
template <class Op, class GenFn>
Op represent_affine(const AffineElement& a, GenFn gen, const Op& identity_op) {
    Op r = a.one * identity_op;
    for (int i = 0; i < 3; ++i) {
        if (a.x[i] != cplx{}) r += a.x[i] * gen(static_cast<XGen>(i));
        if (a.xs[i] != cplx{}) r += a.xs[i] * gen(static_cast<XGen>(i)).adjoint();
    }
    return r;
}

template <class Op>
using BlockOp = std::array<std::array<Op, 4>, 4>;

template <class Op, class GenFn>
BlockOp<Op> represent_matrix(const AffineMatrix& m, GenFn gen, const Op& identity_op) {
    BlockOp<Op> r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i][k] = represent_affine(m[i][k], gen, identity_op);
    return r;
}

template <class Op>
BlockOp<Op> block_mul(const BlockOp<Op>& a, const BlockOp<Op>& b) {
    BlockOp<Op> r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            r[i][k] = a[i][0] * b[0][k];
            for (int j = 1; j < 4; ++j) r[i][k] += a[i][j] * b[j][k];
        }
    return r;
}

// Max interior relation residual over the 16 blocks.
template <class Op>
double block_residual(const BlockOp<Op>& a, const BlockOp<Op>& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) m = std::max(m, relation_residual(a[i][k], b[i][k]));
    return m;
}

// ---------------------------------------------------------------------------
// Relation harness: residuals of the five defining relation families in a
// given representation (any of the three).  Generators are passed as a
// callable XGen -> operator; adjoints represent the starred generators.
// ---------------------------------------------------------------------------
struct RelationResiduals {
    double commute_xx = 0.0;      // x_i x_j = q^2 x_j x_i (i < j)
    double commute_xstar = 0.0;   // x_i^* x_j = q^2 x_j x_i^* (i != j)
    double commutator_x1 = 0.0;   // [x_1^*, x_1] = (1 - q^4) x_0^2
    double commutator_x2 = 0.0;   // [x_2^*, x_2] = x_1^* x_1 - q^4 x_1 x_1^*
    double sphere_radius = 0.0;   // x_0^2 + x_1 x_1^* + x_2 x_2^* = 1
    double max() const {
        return std::max({commute_xx, commute_xstar, commutator_x1, commutator_x2, sphere_radius});
    }
};

template <class Op, class GenFn>
RelationResiduals check_relations(GenFn gen, const Op& one, const QContext& ctx) {
    const double q2 = ctx.q * ctx.q, q4 = q2 * q2;
    const Op X0 = gen(XGen::x0), X1 = gen(XGen::x1), X2 = gen(XGen::x2);
    const Op X1s = X1.adjoint(), X2s = X2.adjoint();
    RelationResiduals r;
    r.commute_xx = std::max({relation_residual(X0 * X1, q2 * (X1 * X0)),
                             relation_residual(X0 * X2, q2 * (X2 * X0)),
                             relation_residual(X1 * X2, q2 * (X2 * X1))});
    r.commute_xstar = std::max({relation_residual(X1s * X0, q2 * (X0 * X1s)),
                                relation_residual(X1s * X2, q2 * (X2 * X1s)),
                                relation_residual(X2s * X0, q2 * (X0 * X2s)),
                                relation_residual(X2s * X1, q2 * (X1 * X2s))});
    r.commutator_x1 = relation_residual(X1s * X1 - X1 * X1s, (1.0 - q4) * (X0 * X0));
    r.commutator_x2 = relation_residual(X2s * X2 - X2 * X2s, X1s * X1 - q4 * (X1 * X1s));
    r.sphere_radius = relation_residual(X0 * X0 + X1 * X1s + X2 * X2s, one);
    return r;
}

// The second radius identity q^8 x_0^2 + q^4 x_1^* x_1 + x_2^* x_2 = 1,
// which pins the normalization of the equivariant coefficient families.
template <class Op, class GenFn>
double radius_residual(GenFn gen, const Op& one, const QContext& ctx) {
    const Op X0 = gen(XGen::x0), X1 = gen(XGen::x1), X2 = gen(XGen::x2);
    return relation_residual(
        ctx.pow_q2(16) * (X0 * X0) + ctx.pow_q2(8) * (X1.adjoint() * X1) + X2.adjoint() * X2,
        one);
}

// ---------------------------------------------------------------------------
// Crossed relations between the symmetry generators and the coordinates, as
// operator identities on an irrep tower (scalar or spinor family).
// Returns the max interior residual over all 18 identities.
// ---------------------------------------------------------------------------
inline double crossed_relations_residual(const TruncatedSpace& sp, const QContext& ctx) {
    const double q = ctx.q;
    auto H = [&](UqGen h) { return rep_generator(h, sp, ctx); };
    auto X = [&](XGen g) { return sphere_generator(g, sp, ctx); };
    const SparseOperator K1 = H(UqGen::K1), K2 = H(UqGen::K2), E1 = H(UqGen::E1),
                         E2 = H(UqGen::E2), F1 = H(UqGen::F1), F2 = H(UqGen::F2);
    const SparseOperator X0 = X(XGen::x0), X1 = X(XGen::x1), X2 = X(XGen::x2);
    const SparseOperator X1s = X1.adjoint();
    double r = 0.0;
    // Relative residual per identity: the E/F generator entries grow like
    // q^{-l}, so roundoff in the products scales with the operators
    // themselves and an absolute residual is not meaningful at large cutoffs.
    auto acc = [&](const SparseOperator& a, const SparseOperator& b) {
        const double scale = std::max(1.0, b.interior_max_column_norm(b.interior_margin()));
        r = std::max(r, relation_residual(a, b) / scale);
    };
    acc(K1 * X0, X0 * K1);
    acc(K1 * X1, q * (X1 * K1));
    acc(K1 * X2, X2 * K1);
    acc(K2 * X0, X0 * K2);
    acc(K2 * X1, (1.0 / q) * (X1 * K2));
    acc(K2 * X2, q * (X2 * K2));
    acc(E1 * X0 - X0 * E1, ctx.pow_q(-0.5) * (X1 * K1));
    acc(E1 * X1, (1.0 / q) * (X1 * E1));
    acc(E1 * X2, X2 * E1);
    acc(F1 * X0 - X0 * F1, -ctx.pow_q(-0.5) * (K1 * X1s));
    acc(F1 * X1, (1.0 / q) * (X1 * F1) + ctx.pow_q(0.5) * q_number2(4, ctx) * (X0 * K1));
    acc(F1 * X2, X2 * F1);
    acc(E2 * X0, X0 * E2);
    acc(E2 * X1, q * (X1 * E2) + X2 * K2);
    acc(E2 * X2, (1.0 / q) * (X2 * E2));
    acc(F2 * X0, X0 * F2);
    acc(F2 * X1, q * (X1 * F2));
    acc(F2 * X2, (1.0 / q) * (X2 * F2) + X1 * K2);
    return r;
}

// ---------------------------------------------------------------------------
// Highest weight structure in the left regular representation.
// ---------------------------------------------------------------------------

// Apply a word of operators to the vacuum |0,0,0;0> of a scalar-family space.
inline std::vector<cplx> vacuum_vector(const TruncatedSpace& sp) {
    int i = sp.index_of(BasisLabel{0, 0, 0, 0, 0});
    if (i < 0) throw std::logic_error("vacuum_vector: vacuum label missing");
    std::vector<cplx> v(sp.size(), cplx{});
    v[static_cast<std::size_t>(i)] = 1.0;
    return v;
}

struct HighestWeightReport {
    double top_component_deficit = 0.0;  // 1 - |<l,0,l;0| x2^l |vac>| / ||x2^l vac||
    double e_annihilation = 0.0;         // max ||E_i x2^l vac|| / ||x2^l vac||
    double v_plus_residual = 0.0;        // || v_l^+ (1 - e) || on the vacuum
    double v_minus_residual = 0.0;       // || v_l^- e || on the vacuum
};

// Checks that x2^l (l = two_l_scalar / 2) applied to the vacuum is the
// highest weight vector |l, 0, l; 0> (annihilated by both raising
// operators), and that for half-odd-integer l' = two_l_spinor / 2 the row
// vectors v^{+/-} = x2^{l'-1/2} (1 +/- x0, +/- q^3 x2, -/+ q x1, 0) satisfy
// v^+ (1-e) = v^- e = 0, placing them in the two halves of the free module.
inline HighestWeightReport highest_weight_checks(int two_l_scalar, int two_l_spinor,
                                                 const TruncatedSpace& sp, const QContext& ctx) {
    if (sp.family != Family::scalar)
        throw std::invalid_argument("highest_weight_checks: scalar-family space required");
    if (two_l_scalar % 2 != 0 || two_l_scalar < 2 || two_l_spinor % 2 == 0 || two_l_spinor < 1)
        throw std::invalid_argument("highest_weight_checks: need integer and half-odd levels");
    HighestWeightReport rep;
    auto gen = [&](XGen g) { return scalar_generator(g, sp, ctx); };
    const SparseOperator X2 = gen(XGen::x2);

    std::vector<cplx> v = vacuum_vector(sp);
    for (int k = 0; k < two_l_scalar / 2; ++k) v = X2.apply(v);
    double nrm = 0.0;
    for (const auto& c : v) nrm += std::norm(c);
    nrm = std::sqrt(nrm);
    int top = sp.index_of(BasisLabel{two_l_scalar, 0, two_l_scalar, 0, 0});
    if (top < 0 || nrm == 0.0)
        throw std::invalid_argument("highest_weight_checks: cutoff too small for word length");
    rep.top_component_deficit = 1.0 - std::abs(v[static_cast<std::size_t>(top)]) / nrm;
    for (UqGen h : {UqGen::E1, UqGen::E2}) {
        auto w = rep_generator(h, sp, ctx).apply(v);
        double n = 0.0;
        for (const auto& c : w) n += std::norm(c);
        rep.e_annihilation = std::max(rep.e_annihilation, std::sqrt(n) / nrm);
    }

    // v^{+/-} against the idempotent, evaluated on the vacuum.
    const SparseOperator one = SparseOperator::identity(sp);
    const AffineMatrix e = idempotent_e(ctx);
    const double q = ctx.q, q3 = q * q * q;
    SparseOperator word = one;
    for (int k = 0; k < (two_l_spinor - 1) / 2; ++k) word = X2 * word;  // x2^{l' - 1/2}
    for (int sign : {+1, -1}) {
        const double s = static_cast<double>(sign);
        std::array<SparseOperator, 4> row = {
            word * (one + s * gen(XGen::x0)), word * (s * q3 * gen(XGen::x2)),
            word * (-s * q * gen(XGen::x1)), SparseOperator(sp)};
        double worst = 0.0;
        for (int k = 0; k < 4; ++k) {
            // (v e)_k = sum_i v_i e_{ik};  for sign = +1 test v (1 - e) = 0.
            SparseOperator acc(sp);
            for (int i = 0; i < 4; ++i) {
                AffineElement target = e[i][k];
                if (sign == +1) target = (i == k ? AffineElement::unit() : AffineElement{}) -
                                         target;  // entry of 1 - e
                acc += row[i] * represent_affine(target, gen, one);
            }
            auto w = acc.apply(vacuum_vector(sp));
            double n = 0.0;
            for (const auto& c : w) n += std::norm(c);
            worst = std::max(worst, std::sqrt(n));
        }
        (sign == +1 ? rep.v_plus_residual : rep.v_minus_residual) = worst;
    }
    return rep;
}

}  // namespace q4s
