// The quantized enveloping algebra U_q(so(5)): generator actions sigma_l on
// the irrep towers, the three-term coefficients a_l, b_l, c_l, the Casimir
// C_1 of the (K_1, E_1, F_1) subalgebra, the antilinear real structure C on
// integer-l levels, and the generator-level Hopf structure tables.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"

namespace q4s {

enum class UqGen { K1, K2, K1inv, K2inv, E1, E2, F1, F2 };

inline const char* to_string(UqGen g) {
    switch (g) {
        case UqGen::K1: return "K1";
        case UqGen::K2: return "K2";
        case UqGen::K1inv: return "K1inv";
        case UqGen::K2inv: return "K2inv";
        case UqGen::E1: return "E1";
        case UqGen::E2: return "E2";
        case UqGen::F1: return "F1";
        case UqGen::F2: return "F2";
    }
    return "?";
}

// Generator-level Hopf data: coproduct legs, counit value, antipode image
// (a scalar multiple of a single generator), and the star partner.
struct GeneratorHopfData {
    struct Leg {
        UqGen left, right;
    };
    std::vector<Leg> coproduct;       // Delta(h) = sum of left (x) right legs
    double counit = 0.0;              // epsilon(h)
    double antipode_coef = 1.0;       // S(h) = antipode_coef * antipode_gen
    UqGen antipode_gen;
    UqGen star_partner;               // h^*

    static GeneratorHopfData table(UqGen h, const QContext& ctx) {
        const double q = ctx.q;
        GeneratorHopfData d;
        switch (h) {
            case UqGen::K1:
                d = {{{UqGen::K1, UqGen::K1}}, 1.0, 1.0, UqGen::K1inv, UqGen::K1};
                break;
            case UqGen::K2:
                d = {{{UqGen::K2, UqGen::K2}}, 1.0, 1.0, UqGen::K2inv, UqGen::K2};
                break;
            case UqGen::K1inv:
                d = {{{UqGen::K1inv, UqGen::K1inv}}, 1.0, 1.0, UqGen::K1, UqGen::K1inv};
                break;
            case UqGen::K2inv:
                d = {{{UqGen::K2inv, UqGen::K2inv}}, 1.0, 1.0, UqGen::K2, UqGen::K2inv};
                break;
            case UqGen::E1:
                d = {{{UqGen::E1, UqGen::K1}, {UqGen::K1inv, UqGen::E1}}, 0.0, -q, UqGen::E1,
                     UqGen::F1};
                break;
            case UqGen::E2:
                d = {{{UqGen::E2, UqGen::K2}, {UqGen::K2inv, UqGen::E2}}, 0.0, -q * q, UqGen::E2,
                     UqGen::F2};
                break;
            case UqGen::F1:
                d = {{{UqGen::F1, UqGen::K1}, {UqGen::K1inv, UqGen::F1}}, 0.0, -1.0 / q,
                     UqGen::F1, UqGen::E1};
                break;
            case UqGen::F2:
                d = {{{UqGen::F2, UqGen::K2}, {UqGen::K2inv, UqGen::F2}}, 0.0, -1.0 / (q * q),
                     UqGen::F2, UqGen::E2};
                break;
        }
        return d;
    }

    // S(h)^* as (coefficient, generator); used by equivariance checks.
    static std::pair<double, UqGen> antipode_star(UqGen h, const QContext& ctx) {
        GeneratorHopfData d = table(h, ctx);
        GeneratorHopfData s = table(d.antipode_gen, ctx);
        return {d.antipode_coef, s.star_partner};
    }
};

namespace detail {
// [n] for an integer argument.
inline double qn(int n, const QContext& ctx) { return q_number2(2 * n, ctx); }
}  // namespace detail

// The coefficients a_l(j, m2), b_l(j, m2), c_l(j, m2) entering the three-term
// action of E_2; doubled arguments, eps recomputed from (l, j, m2).
enum class SigmaCoef { a, b, c };

inline double sigma_coefficient(SigmaCoef kind, int two_l, int two_j, int two_m2,
                                const QContext& ctx) {
    // eps = 0 for integer l; otherwise the sign of (-1)^{l+1/2-j-m2}/2.
    int two_eps = 0;
    if (two_l % 2 != 0) {
        int e = (two_l + 1 - two_j - two_m2) / 2;
        two_eps = (e % 2 == 0) ? +1 : -1;
    }
    const int abs2e = std::abs(two_eps);
    switch (kind) {
        case SigmaCoef::a: {
            double num = q_number_product2(
                {two_l - two_j - two_m2 + two_eps, two_l + two_j + two_m2 + 6 + two_eps}, ctx);
            double den = q_number_product2(
                {2 * (two_j + abs2e + 1), 2 * (two_j - abs2e + 3)}, ctx);
            double r = num / den;
            return (1.0 / detail::qn(2, ctx)) * std::sqrt(r < 0 && r > -1e-30 ? 0.0 : r);
        }
        case SigmaCoef::b: {
            if (two_eps == 0) return 0.0;  // prefactor 2|eps| kills the term
            double num = sqrt_q_product2({two_l - two_eps * (two_j + 1) - two_m2 + 2,
                                          two_l - two_eps * (two_j + 1) + two_m2 + 4},
                                         ctx);
            double den = q_number_product2({2 * two_j, 2 * (two_j + 2)}, ctx);
            return num / den;
        }
        case SigmaCoef::c: {
            double sign = (two_eps == 0) ? 1.0 : -1.0;  // (-1)^{2 eps}
            double num = q_number_product2(
                {two_l - two_j + two_m2 + 4 - two_eps, two_l + two_j - two_m2 + 2 - two_eps}, ctx);
            double den = q_number_product2(
                {2 * (two_j + abs2e - 1), 2 * (two_j - abs2e + 1)}, ctx);
            double r = num / den;
            return (sign / detail::qn(2, ctx)) * std::sqrt(r < 0 && r > -1e-30 ? 0.0 : r);
        }
    }
    return 0.0;
}

// sigma_l action of a generator on a scalar- or spinor-family space.
inline SparseOperator rep_generator(UqGen h, const TruncatedSpace& space, const QContext& ctx) {
    if (space.family == Family::hat)
        throw std::invalid_argument("rep_generator: hat family not in the domain of sigma_l");

    SparseOperator op(space);
    auto build_E2 = [&]() {
        for (std::size_t i = 0; i < space.size(); ++i) {
            const BasisLabel& x = space.label(i);
            const int tj = x.two_j, tm1 = x.two_m1;
            // |m1 - 1, m2 + 1; j + dj>, dj in {+1, 0, -1}
            const std::array<int, 3> djs = {+2, 0, -2};
            const std::array<SigmaCoef, 3> kinds = {SigmaCoef::a, SigmaCoef::b, SigmaCoef::c};
            for (int t = 0; t < 3; ++t) {
                LabelDisp d{0, -2, +2, djs[t], 0};
                if (!admissible(x + d, space.family)) continue;
                double pre = 0.0;
                switch (t) {
                    case 0: pre = sqrt_q_product2({tj - tm1 + 2, tj - tm1 + 4}, ctx); break;
                    case 1: pre = sqrt_q_product2({tj + tm1, tj - tm1 + 2}, ctx); break;
                    case 2: pre = sqrt_q_product2({tj + tm1, tj + tm1 - 2}, ctx); break;
                }
                if (pre == 0.0) continue;
                double coef = sigma_coefficient(kinds[t], x.two_l, tj, x.two_m2, ctx);
                op.add_entry(i, d, pre * coef);
            }
        }
    };

    switch (h) {
        case UqGen::K1:
        case UqGen::K1inv: {
            const int s = (h == UqGen::K1) ? +1 : -1;
            auto& amp = op.component({});
            for (std::size_t i = 0; i < space.size(); ++i)
                amp[i] = ctx.pow_q2(s * space.label(i).two_m1);
            break;
        }
        case UqGen::K2:
        case UqGen::K2inv: {
            const int s = (h == UqGen::K2) ? +1 : -1;
            auto& amp = op.component({});
            for (std::size_t i = 0; i < space.size(); ++i) {
                const BasisLabel& x = space.label(i);
                amp[i] = ctx.pow_q2(s * (x.two_m2 - x.two_m1));
            }
            break;
        }
        case UqGen::E1: {
            for (std::size_t i = 0; i < space.size(); ++i) {
                const BasisLabel& x = space.label(i);
                LabelDisp d{0, +2, 0, 0, 0};
                if (!admissible(x + d, space.family)) continue;
                op.add_entry(i, d,
                             sqrt_q_product2({x.two_j - x.two_m1, x.two_j + x.two_m1 + 2}, ctx));
            }
            break;
        }
        case UqGen::E2:
            build_E2();
            break;
        case UqGen::F1:
            return rep_generator(UqGen::E1, space, ctx).adjoint();
        case UqGen::F2:
            return rep_generator(UqGen::E2, space, ctx).adjoint();
    }
    return op;
}

// Casimir of the (K_1, K_1^{-1}, E_1, F_1) subalgebra, assembled from the
// represented generators:  q^{-1} K_1^2 + q K_1^{-2} + (q - q^{-1})^2 E_1 F_1.
inline SparseOperator casimir_c1(const TruncatedSpace& space, const QContext& ctx) {
    SparseOperator K1 = rep_generator(UqGen::K1, space, ctx);
    SparseOperator K1i = rep_generator(UqGen::K1inv, space, ctx);
    SparseOperator E1 = rep_generator(UqGen::E1, space, ctx);
    SparseOperator F1 = E1.adjoint();
    const double w = ctx.q - 1.0 / ctx.q;
    SparseOperator c = (1.0 / ctx.q) * (K1 * K1) + ctx.q * (K1i * K1i) + (w * w) * (E1 * F1);
    c.shift_radius = 0;  // block diagonal by construction
    return c;
}

// Antilinear real structure on integer-l levels:
//   C |l, m1, m2; j> = (-q)^{m1} q^{3 m2} |l, -m1, -m2; j>.
inline AntilinearOperator real_structure_C(const TruncatedSpace& space, const QContext& ctx) {
    if (space.family != Family::scalar)
        throw std::invalid_argument("real_structure_C: defined on the scalar family only");
    AntilinearOperator C(space);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const BasisLabel& x = space.label(i);
        BasisLabel y{x.two_l, -x.two_m1, -x.two_m2, x.two_j, x.chi};
        int t = space.index_of(y);
        if (t < 0) throw std::logic_error("real_structure_C: m-flipped label missing");
        double sign = ((x.two_m1 / 2) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{m1}, m1 integer
        C.set(i, t, sign * ctx.pow_q2(x.two_m1 + 3 * x.two_m2));
    }
    return C;
}

}  // namespace q4s
