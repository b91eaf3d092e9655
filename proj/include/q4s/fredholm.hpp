// Even Fredholm module on the chirality-doubled half-integer tower: the
// grading gamma, the chirality swap F, Schatten-class diagnostics, and the
// index pairing with the rank-4 idempotent computed by three independent
// routes (the simple-representation pair, the closed-form series term, and
// the direct truncated traces).
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"

namespace q4s {

// gamma = +1 on the chi = +1 component, -1 on chi = -1.
inline SparseOperator grading_gamma(const TruncatedSpace& sp) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("grading_gamma: spinor-family space required");
    SparseOperator op(sp);
    auto& amp = op.component({});
    for (std::size_t i = 0; i < sp.size(); ++i) amp[i] = static_cast<double>(sp.label(i).chi);
    return op;
}

// F |l,m1,m2;j>_{+-} = |l,m1,m2;j>_{-+}; the chirality axis is never
// truncated, so F is exact everywhere (shift radius 0 on every label axis).
inline SparseOperator fredholm_F(const TruncatedSpace& sp) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("fredholm_F: spinor-family space required");
    SparseOperator op(sp);
    for (std::size_t i = 0; i < sp.size(); ++i)
        op.add_entry(i, LabelDisp{0, 0, 0, 0, -2 * sp.label(i).chi}, 1.0);
    return op;
}

struct PairingResult {
    double value = 0.0;
    double tail_bound = 0.0;  // certified bound on the dropped remainder
};

// Pairing through the pair of simple representations on l^2(N^2) (+) l^2(N^2):
// (1-q^2)^2 Sum_{k1,k2} q^{2(k1+k2)}.  The partial sum up to K is completed
// with the exact geometric remainder, so the result is 1 to machine precision.
inline PairingResult pairing_simple(const QContext& ctx, int K) {
    if (K < 1) throw std::invalid_argument("pairing_simple: K >= 1 required");
    const double x = ctx.q * ctx.q;  // q^2
    KahanSum<double> s;
    for (int k1 = 0; k1 <= K; ++k1)
        for (int k2 = 0; k2 <= K; ++k2) s.add(std::pow(x, k1 + k2));
    const double partial_geo = (1.0 - std::pow(x, K + 1)) / (1.0 - x);
    const double full_geo = 1.0 / (1.0 - x);
    const double remainder = full_geo * full_geo - partial_geo * partial_geo;
    PairingResult r;
    r.value = (1.0 - x) * (1.0 - x) * (s.value() + remainder);
    r.tail_bound = 0.0;  // the remainder is exact, nothing is dropped
    return r;
}

// Generic term of the pairing series: a rational function of q indexed by the
// half-integers l >= j >= 1/2 with l - j an integer (doubled arguments).
inline double pairing_series_term(int two_l, int two_j, const QContext& ctx) {
    if (two_j < 1 || two_j > two_l || (two_l - two_j) % 2 != 0)
        throw std::invalid_argument("pairing_series_term: need half-odd l >= j >= 1/2");
    const double x = ctx.q * ctx.q;                       // q^2
    const double r = (1.0 + x) / (1.0 - x);               // [2]/(q^{-1}-q) scaled
    const double qj = ctx.pow_q2(4 * two_j + 4);          // q^{4j+2}
    const double n1 =
        (two_j + 1) * (1.0 + qj) - r * (1.0 - qj);
    const double den = (1.0 - ctx.pow_q2(4 * two_l + 8)) * (1.0 - ctx.pow_q2(4 * two_l + 16)) *
                       (1.0 - ctx.pow_q2(4 * two_j)) * (1.0 - ctx.pow_q2(4 * two_j + 8));
    const double n2 = 0.5 * (two_l - two_j + 2) * (1.0 + ctx.pow_q2(4 * two_l + 12)) * (1.0 + qj) -
                      r * x * (ctx.pow_q2(4 * two_j) - ctx.pow_q2(4 * two_l + 8));
    const double pre = (1.0 - x) * (1.0 - x) * (1.0 - x) * (1.0 - x);
    return pre * n1 / den * ctx.pow_q2(2 * two_l - 2) * n2;
}

// Certified bound on Sum_{l > L, j} of the series terms.  Each term is a
// product of four nonnegative factors: the prefactor-over-denominator is at
// most 1 (every 1 - q^{4j}, 1 - q^{4l+4}, ... exceeds 1 - q^2 for j, l >= 1/2),
// the first bracket is at most 2(2j+1), the second at most 4(l-j+1), so
//   0 <= f_lj <= 8 (2j+1)(l-j+1) q^{2l-1} .
// Summing over j at fixed l gives (8/3) n(n+1)(n+2) q^{2l-1} with n = l+1/2,
// and with x = q^2 the tail over l > L is (8/3) times the third derivative of
// x^{M+2}/(1-x) at M = L + 3/2.
inline double pairing_series_tail_bound(int two_L, const QContext& ctx) {
    if (two_L < 1 || two_L % 2 == 0)
        throw std::invalid_argument("pairing_series_tail_bound: half-odd cutoff required");
    const double x = ctx.q * ctx.q;
    const double M = 0.5 * (two_L + 3);  // first excluded n = l + 1/2
    const double v = 1.0 / (1.0 - x);
    const double xm = std::exp((M - 1.0) * std::log(x));  // x^{M-1}
    return (8.0 / 3.0) *
           (M * (M + 1.0) * (M + 2.0) * xm * v + 3.0 * (M + 1.0) * (M + 2.0) * (xm * x) * v * v +
            6.0 * (M + 2.0) * (xm * x * x) * v * v * v +
            6.0 * (xm * x * x * x) * v * v * v * v);
}

// Pairing as the absolutely convergent double series, summed in lexicographic
// (l, j) order until the certified tail drops below tail_tol.
inline PairingResult pairing_series(const QContext& ctx, double tail_tol) {
    if (!(tail_tol > 0.0)) throw std::invalid_argument("pairing_series: tail_tol > 0 required");
    constexpr int kMaxTwoL = 200001;
    KahanSum<double> s;
    for (int two_l = 1; two_l <= kMaxTwoL; two_l += 2) {
        for (int two_j = 1; two_j <= two_l; two_j += 2)
            s.add(pairing_series_term(two_l, two_j, ctx));
        const double tail = pairing_series_tail_bound(two_l, ctx);
        if (tail <= tail_tol) return {s.value(), tail};
    }
    throw std::runtime_error("pairing_series: tail bound did not reach tolerance (q too close to 1)");
}

// Pairing by truncated traces on the chirality-doubled tower: the full form
// (1/2) Tr(gamma F [F, e]) over the rank-4 free module, the reduced form
// ((1-q^2)^2/4) Tr(gamma F [F, x0]), and the complement pairing with 1 - e
// (which must come out as minus the full value).  Only the shift-free
// component of the integrand contributes to a trace, and that component is
// exact on every retained label, so the truncation error is precisely the
// dropped l > L part -- bounded by pairing_series_tail_bound.
struct DirectPairing {
    double via_x0 = 0.0;         // reduced single-generator trace
    double via_idempotent = 0.0;  // full rank-4 trace
    double via_complement = 0.0;  // pairing with 1 - e
    double tail_bound = 0.0;
};

inline DirectPairing pairing_direct(const TruncatedSpace& sp, const QContext& ctx) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("pairing_direct: spinor-family space required");
    const SparseOperator G = grading_gamma(sp);
    const SparseOperator F = fredholm_F(sp);
    const SparseOperator id = SparseOperator::identity(sp);
    auto gen = [&](XGen g) { return spinor_generator(g, sp, ctx); };

    auto graded_trace = [&](const SparseOperator& a) {
        // Tr(gamma F [F, a])
        return (G * F * (F * a - a * F)).trace().real();
    };

    DirectPairing out;
    const double c = (1.0 - ctx.q * ctx.q) * (1.0 - ctx.q * ctx.q);
    out.via_x0 = 0.25 * c * graded_trace(gen(XGen::x0));

    const AffineMatrix e = idempotent_e(ctx);
    KahanSum<double> full, comp;
    for (int rr = 0; rr < 4; ++rr) {
        AffineElement d = e[rr][rr];
        full.add(graded_trace(represent_affine(d, gen, id)));
        AffineElement cd = (-1.0) * d;
        cd.one += 1.0;  // (1 - e)_{rr}
        comp.add(graded_trace(represent_affine(cd, gen, id)));
    }
    out.via_idempotent = 0.5 * full.value();
    out.via_complement = 0.5 * comp.value();
    out.tail_bound = pairing_series_tail_bound(sp.two_L, ctx);
    return out;
}

}  // namespace q4s
