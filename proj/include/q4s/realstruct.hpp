// The antiunitary real structure J on the chirality-doubled tower, its
// equivariant antilinear extension T, and the diagnostics replacing ideal
// membership for the commutant and first-order conditions: the commutators
// [a, JbJ^{-1}] and [[D,a], JbJ^{-1}] are not zero, but their entries decay
// exponentially along the j and l axes, and they stay smoothing (norms of
// |D|^k times them bounded uniformly in the cutoff).
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "q4s/basis.hpp"
#include "q4s/dirac.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"

namespace q4s {

namespace detail {
inline cplx unit_i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
}  // namespace detail

// J |l,m1,m2;j>_pm = i^{2l+1} (-1)^{j+m1} |l,-m1,-m2;j>_pm.
// Antiunitary; J^2 = -1 because 2j is odd, so J^{-1} = -J.
inline AntilinearOperator J_operator(const TruncatedSpace& sp) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("J_operator: spinor-family space required");
    AntilinearOperator J(sp);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const BasisLabel& x = sp.label(i);
        const int t = sp.index_of(BasisLabel{x.two_l, -x.two_m1, -x.two_m2, x.two_j, x.chi});
        if (t < 0) throw std::logic_error("J_operator: m-flipped label missing");
        const cplx ph = detail::unit_i_pow(x.two_l + 1) *
                        (((x.two_j + x.two_m1) / 2) % 2 == 0 ? 1.0 : -1.0);
        J.set(i, t, ph);
    }
    return J;
}

// T = J composed with the positive diagonal q^{m1 + 3 m2}; T is equivariant,
// T h T^{-1} = S(h)^*, and J is its antiunitary polar part.
inline AntilinearOperator T_operator(const TruncatedSpace& sp, const QContext& ctx) {
    AntilinearOperator T = J_operator(sp);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const BasisLabel& x = sp.label(i);
        T.phase[i] *= ctx.pow_q2(x.two_m1 + 3 * x.two_m2);
    }
    return T;
}

// One of the five coordinate-algebra generators {x0, x1, x1*, x2, x2*}.
struct GenChoice {
    XGen g;
    bool star = false;
};

inline SparseOperator generator_op(GenChoice c, const TruncatedSpace& sp, const QContext& ctx) {
    SparseOperator X = spinor_generator(c.g, sp, ctx);
    return c.star ? X.adjoint() : X;
}

// The commutant and first-order commutators for a generator pair, with the
// conjugation computed as J b J^{-1} (J^{-1} = -J, so J b J = -J b J^{-1}).
struct CommutantOps {
    SparseOperator zero_order;   // [a, J b J^{-1}]
    SparseOperator first_order;  // [[D, a], J b J^{-1}]
};

inline CommutantOps commutant_ops(GenChoice a, GenChoice b, const TruncatedSpace& sp,
                                  const QContext& ctx) {
    const AntilinearOperator J = J_operator(sp);
    const SparseOperator A = generator_op(a, sp, ctx);
    const SparseOperator Bc = J.sandwich(generator_op(b, sp, ctx));
    const SparseOperator D = dirac_D(sp);
    const SparseOperator DA = D * A - A * D;
    return {A * Bc - Bc * A, DA * Bc - Bc * DA};
}

// Closed form of the matrix element
// f(l, 1/2, l) = <l+1,m1,l;1/2| [x2, J x2 J] |l,m1,l;1/2>_+ for half-odd l:
//   f = -[2] q^{-l-4} (1-q^2)^2 sqrt([3][2l+1]) [l+2][l+3] / ([2l+4]^2 [2l+6]).
// It reduces to three products of the l-shift amplitudes of x2 and J x2 J;
// the bracket identity [2] - [2l+6] + [2l+4] = -(q - q^{-1})^2 [l+2][l+3]
// collapses the sum.
inline double f_matrix_element_closed(int two_l, const QContext& ctx) {
    if (two_l % 2 == 0) throw std::invalid_argument("f_matrix_element_closed: half-odd l");
    const double one_minus_q2 = 1.0 - ctx.q * ctx.q;
    const double pref = -q_number2(4, ctx) * ctx.pow_q2(-(two_l + 8)) *
                        one_minus_q2 * one_minus_q2;
    const double num = sqrt_q_product2({6, 2 * two_l + 2}, ctx) *
                       q_number_product2({two_l + 4, two_l + 6}, ctx);
    const double den = q_number_product2(
        {2 * two_l + 8, 2 * two_l + 8, 2 * two_l + 12}, ctx);
    return pref * num / den;
}

// --- decay diagnostics ----------------------------------------------------

enum class DecayAxis { j, l };

struct DecayPoint {
    int two_level = 0;     // doubled axis value: min of source and target label
    double max_entry = 0;  // max |entry| over interior columns at that level
};

struct DecayProfile {
    std::vector<DecayPoint> points;
    double rate = std::numeric_limits<double>::infinity();  // decay per unit level
    bool all_zero = true;
};

// Per-level maxima of |entries| over interior source labels, and the
// least-squares slope of log(max) against the level over the upper half of
// the usable levels.  A weighted step between levels j and j' carries the
// weight of the lower level, so entries are attributed to
// min(source, target).  Levels within a factor 1e-12 of the overall maximum
// are round-off residue of the banded products and are excluded from the
// rate fit.  An all-zero operator reports the +infinity sentinel.
inline DecayProfile decay_profile(const SparseOperator& T, DecayAxis axis) {
    const int margin = T.interior_margin();
    std::map<int, double> maxima;
    for (const auto& [d, amp] : T.components) {
        const int step = (axis == DecayAxis::j) ? d.dj2 : d.dl2;
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if (amp[i] == cplx{}) continue;
            const BasisLabel& x = T.dom->label(i);
            if (!T.dom->is_interior(x, margin)) continue;
            const int src = (axis == DecayAxis::j) ? x.two_j : x.two_l;
            const int lvl = std::min(src, src + step);
            double& m = maxima[lvl];
            m = std::max(m, std::abs(amp[i]));
        }
    }
    DecayProfile p;
    double global_max = 0.0;
    for (const auto& [lvl, m] : maxima) {
        p.points.push_back({lvl, m});
        global_max = std::max(global_max, m);
    }
    std::vector<std::pair<double, double>> pts;  // (level, log max)
    for (const auto& pt : p.points)
        if (pt.max_entry > 1e-12 * global_max)
            pts.emplace_back(0.5 * pt.two_level, std::log(pt.max_entry));
    if (pts.size() < 2) return p;  // all (or almost all) zero
    p.all_zero = false;
    const std::size_t lo = pts.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (std::size_t k = (pts.size() - lo >= 2) ? lo : 0; k < pts.size(); ++k) {
        sx += pts[k].first;
        sy += pts[k].second;
        sxx += pts[k].first * pts[k].first;
        sxy += pts[k].first * pts[k].second;
        n += 1;
    }
    const double denom = n * sxx - sx * sx;
    p.rate = (denom == 0.0) ? 0.0 : -(n * sxy - sx * sy) / denom;
    return p;
}

// Smallest C with max_entry(level) <= C * q^{power * level} over the profile.
inline double decay_prefactor(const DecayProfile& p, const QContext& ctx, int power) {
    double c = 0.0;
    for (const auto& pt : p.points)
        c = std::max(c, pt.max_entry / ctx.pow_q2(static_cast<std::int64_t>(power) *
                                                  pt.two_level));
    return c;
}

// || |D|^k T || on the interior restriction, for k = 0 .. k_max.  A smoothing
// operator keeps these bounded uniformly in the cutoff; for a mere bounded
// operator the k >= 1 norms grow with the cutoff.
inline std::vector<double> smoothing_norms(const SparseOperator& T, int k_max) {
    if (k_max < 0 || k_max > 8)
        throw std::invalid_argument("smoothing_norms: 0 <= k_max <= 8 required");
    const SparseOperator absD = abs_D(*T.dom);
    const int margin = T.interior_margin();
    std::vector<double> norms;
    SparseOperator cur = T;
    for (int k = 0; k <= k_max; ++k) {
        norms.push_back(cur.restrict_interior(margin).norm_estimate());
        if (k < k_max) cur = absD * cur;
    }
    return norms;
}

}  // namespace q4s
