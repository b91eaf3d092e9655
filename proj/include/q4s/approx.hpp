// The approximated representation machinery: the extended "hat" label space
// carrying a bounded *-representation of A(SU_q(2)) ⊗ A(S^2_q), the algebra
// embedding phi of the 4-sphere coordinates into that tensor algebra, the
// isometric inclusion Q and projection P between the physical spinor tower
// and the hat space, the compression pi_tilde(a) = P phi(a) Q, and the
// coefficient-level smoothing-tier approximation of the spinor generators
// (exact j-band prefactors, hatted l-band coefficients, diagonal-in-l terms
// dropped) whose error decays like q^l.
#pragma once

#include <stdexcept>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"

namespace q4s {

// Generators of A(SU_q(2)) (alpha, beta) and A(S^2_q) (A, B); adjoints via
// SparseOperator::adjoint().
enum class HatGen { alpha, beta, A, B };

inline const char* to_string(HatGen g) {
    switch (g) {
        case HatGen::alpha: return "alpha";
        case HatGen::beta: return "beta";
        case HatGen::A: return "A";
        case HatGen::B: return "B";
    }
    return "?";
}

// The representation on the hat space:
//   alpha |l,m1,m2;j> = sqrt(1-q^{2(j+m1+1)}) |l+1/2, m1+1/2, m2; j+1/2>
//   beta  |l,m1,m2;j> = q^{j+m1}              |l+1/2, m1-1/2, m2; j+1/2>
//   A     |l,m1,m2;j> = q^{l-j+m2-eps}        |l,    m1,     m2; j>
//   B     |l,m1,m2;j> = sqrt(1-q^{2(l-j+m2+2-eps)}) |l+1, m1, m2+1; j>
// with eps = (1/2)(-1)^{l+1/2-j-m2}.  The SU_q(2) shifts commute with the
// sphere shifts exactly: neither changes the other's amplitude arguments.
inline SparseOperator hat_generator(HatGen g, const TruncatedSpace& sp, const QContext& ctx) {
    if (sp.family != Family::hat)
        throw std::invalid_argument("hat_generator: hat-family space required");
    SparseOperator op(sp);
    auto omq = [&](int e) { return 1.0 - ctx.pow_q2(2 * e); };  // 1 - q^e
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const BasisLabel& x = sp.label(i);
        const int tl = x.two_l, tj = x.two_j, tm1 = x.two_m1, tm2 = x.two_m2;
        const int te = two_epsilon(x, Family::hat);
        switch (g) {
            case HatGen::alpha:
                op.add_entry(i, {+1, +1, 0, +1, 0}, std::sqrt(omq(tj + tm1 + 2)));
                break;
            case HatGen::beta:
                op.add_entry(i, {+1, -1, 0, +1, 0}, ctx.pow_q2(tj + tm1));
                break;
            case HatGen::A:
                op.add_entry(i, {0, 0, 0, 0, 0}, ctx.pow_q2(tl - tj + tm2 - te));
                break;
            case HatGen::B:
                op.add_entry(i, {+2, 0, +2, 0, 0}, std::sqrt(omq(tl - tj + tm2 + 4 - te)));
                break;
        }
    }
    return op;
}

// Inclusion Q: physical spinor tower -> hat space (an isometry onto the
// admissible spinor labels, which form a subset of the hat label set) and the
// adjoint projection P: hat space -> physical tower (kills every hat label
// outside the physical set).  PQ = id exactly.
struct PQMaps {
    SparseOperator Q;  // dom = physical, cod = hat
    SparseOperator P;  // dom = hat, cod = physical
};

inline PQMaps pq_maps(const TruncatedSpace& hat, const TruncatedSpace& phys) {
    if (hat.family != Family::hat || phys.family != Family::spinor)
        throw std::invalid_argument("pq_maps: (hat, spinor) family pair required");
    if (hat.two_L - 2 * hat.slack < phys.two_L)
        throw std::invalid_argument("pq_maps: hat cutoff smaller than physical cutoff");
    PQMaps pq{SparseOperator(phys, hat), SparseOperator(hat, phys)};
    for (std::size_t i = 0; i < phys.size(); ++i) {
        if (!hat.contains(phys.label(i)))
            throw std::logic_error("pq_maps: physical label missing from hat set");
        pq.Q.add_entry(i, {0, 0, 0, 0, 0}, 1.0);
    }
    for (std::size_t i = 0; i < hat.size(); ++i)
        if (admissible(hat.label(i), Family::spinor)) pq.P.add_entry(i, {0, 0, 0, 0, 0}, 1.0);
    return pq;
}

// The *-algebra embedding of the 4-sphere coordinates,
//   phi(x0) = -(alpha beta + beta* alpha*) A,
//   phi(x1) = (-alpha^2 + q beta*^2) A,
//   phi(x2) = B,
// represented on the hat space.
inline SparseOperator hat_phi(XGen g, const TruncatedSpace& hat, const QContext& ctx) {
    const SparseOperator al = hat_generator(HatGen::alpha, hat, ctx);
    const SparseOperator be = hat_generator(HatGen::beta, hat, ctx);
    switch (g) {
        case XGen::x0: {
            const SparseOperator A = hat_generator(HatGen::A, hat, ctx);
            return -1.0 * ((al * be + be.adjoint() * al.adjoint()) * A);
        }
        case XGen::x1: {
            const SparseOperator A = hat_generator(HatGen::A, hat, ctx);
            const SparseOperator bs = be.adjoint();
            return (-1.0 * (al * al) + ctx.q * (bs * bs)) * A;
        }
        case XGen::x2:
            return hat_generator(HatGen::B, hat, ctx);
    }
    throw std::invalid_argument("hat_phi: unknown generator");
}

// Compression pi_tilde(x) = P phi(x) Q, a banded operator on the physical
// spinor tower.
inline SparseOperator pi_tilde(XGen g, const PQMaps& pq, const QContext& ctx) {
    return pq.P * hat_phi(g, *pq.P.dom, ctx) * pq.Q;
}

// --- the smoothing-tier coefficient approximations ------------------------
// Replacements for the exact l-band coefficients, accurate up to terms
// bounded by q^l (doubled-integer arguments, eps from the same parity rule):
//   C+ ~ -q^{l-j+m2-eps} sqrt(1-q^{2(l+j+m2+3+eps)})
//   C- ~ -q^{l+j+m2+1+eps} sqrt(1-q^{2(l-j+m2-eps)})
//   H+ ~ q^{l+m2+1} sqrt(q^{2eps(2j+1)} - q^{2(l+m2+2)})
//   D+ ~ sqrt(1-q^{2(l+j+m2+3+eps)}) sqrt(1-q^{2(l-j+m2+2-eps)})
//   D- ~ -q^{2(l+m2)+3}
namespace coef {

inline double omq_int(int e, const QContext& c) { return 1.0 - c.pow_q2(2 * e); }

inline double hat_Cp(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return -c.pow_q2(tl - tj + tm2 - te) * std::sqrt(omq_int(tl + tj + tm2 + te + 6, c));
}
inline double hat_Cm(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return -c.pow_q2(tl + tj + tm2 + 2 + te) * std::sqrt(omq_int(tl - tj + tm2 - te, c));
}
inline double hat_Hp(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    const double rad = c.pow_q2(2 * te * (tj + 1)) - c.pow_q2(2 * (tl + tm2 + 4));
    return c.pow_q2(tl + tm2 + 2) * std::sqrt(rad);
}
inline double hat_Dp(int tl, int tj, int tm2, const QContext& c) {
    const int te = two_eps_of(tl, tj, tm2);
    return std::sqrt(omq_int(tl + tj + tm2 + te + 6, c) * omq_int(tl - tj + tm2 + 4 - te, c));
}
inline double hat_Dm(int tl, int tj, int tm2, const QContext& c) {
    return -c.pow_q2(2 * (tl + tm2 + 3));
}

}  // namespace coef

// The smoothing-tier approximation of a spinor generator: the same banded
// shift structure as the exact chiral representation, with the exact j-band
// prefactors (A+/A0 resp. B+/B0/B-) but the hatted l-band coefficients above,
// and with the diagonal-in-l terms (C0, H0, D0 — themselves bounded by q^l)
// dropped.  The result is chirality independent; the deviation from the exact
// generator has entries bounded by a constant times q^l.
inline SparseOperator smoothing_tier_generator(XGen g, const TruncatedSpace& sp,
                                               const QContext& ctx) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("smoothing_tier_generator: spinor-family space required");
    using namespace coef;
    SparseOperator op(sp);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const BasisLabel& s = sp.label(i);
        const int tl = s.two_l, tj = s.two_j, tm1 = s.two_m1, tm2 = s.two_m2;
        auto put = [&](LabelDisp d, auto amp_fn) {
            if (!admissible(s + d, Family::spinor)) return;
            double amp = amp_fn();
            if (amp != 0.0) op.add_entry(i, d, amp);
        };
        const int dm1 = (g == XGen::x1) ? +2 : 0;
        switch (g) {
            case XGen::x0:
            case XGen::x1: {
                const bool is_x0 = (g == XGen::x0);
                auto mp = [&] { return is_x0 ? ch_Ap(tj, tm1, ctx) : ch_Bp(tj, tm1, ctx); };
                put({+2, dm1, 0, +2, 0}, [&] { return mp() * hat_Cp(tl, tj, tm2, ctx); });
                put({-2, dm1, 0, +2, 0}, [&] { return mp() * hat_Cm(tl, tj, tm2, ctx); });
                auto m0 = [&] { return is_x0 ? ch_A0(tj, tm1, ctx) : ch_B0(tj, tm1, ctx); };
                put({+2, dm1, 0, 0, 0}, [&] { return m0() * hat_Hp(tl, tj, tm2, ctx); });
                put({-2, dm1, 0, 0, 0}, [&] { return m0() * hat_Hp(tl - 2, tj, tm2, ctx); });
                if (tj >= 2) {
                    auto mm = [&] {
                        return is_x0 ? ch_Ap(tj - 2, tm1, ctx) : ch_Bm(tj, tm1, ctx);
                    };
                    put({+2, dm1, 0, -2, 0},
                        [&] { return mm() * hat_Cm(tl + 2, tj - 2, tm2, ctx); });
                    put({-2, dm1, 0, -2, 0},
                        [&] { return mm() * hat_Cp(tl - 2, tj - 2, tm2, ctx); });
                }
                break;
            }
            case XGen::x2:
                put({+2, 0, +2, 0, 0}, [&] { return hat_Dp(tl, tj, tm2, ctx); });
                put({-2, 0, +2, 0, 0}, [&] { return hat_Dm(tl, tj, tm2, ctx); });
                break;
        }
    }
    return op;
}

}  // namespace q4s
