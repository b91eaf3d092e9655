// The verification suites: each runs a family of numeric checks at the
// configured deformation parameters and cutoffs and returns one Record per
// check.  All tolerances are pinned here; an optional global override can
// replace the two-sided tolerances for exploratory runs.
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "q4s/approx.hpp"
#include "q4s/basis.hpp"
#include "q4s/dirac.hpp"
#include "q4s/fredholm.hpp"
#include "q4s/qnum.hpp"
#include "q4s/realstruct.hpp"
#include "q4s/report.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"
#include "q4s/uqso5.hpp"

namespace q4s {

struct SuiteConfig {
    std::vector<double> qs{0.5};
    int two_L = 25;       // spinor-tower cutoff (doubled, half-odd)
    int simple_K = 40;    // simple-representation plane cutoff
    double tol_override = 0.0;  // > 0 replaces the two-sided tolerances
};

inline std::string half_text(int two_x) {
    if (two_x % 2 == 0) return std::to_string(two_x / 2);
    return std::to_string(two_x) + "/2";
}

// Configuration guard: the decay-based checks need enough interior l-levels
// for the q^l tails to clear the pinned tolerances.  Rejecting here is a
// configuration error (exit 1), never a silent or numeric failure.
inline void validate_config(const SuiteConfig& cfg) {
    if (cfg.two_L % 2 == 0 || cfg.two_L < 5)
        throw std::invalid_argument("cutoff must be a half-odd integer >= 5/2");
    if (cfg.simple_K < 4) throw std::invalid_argument("simple cutoff K must be >= 4");
    if (cfg.qs.empty()) throw std::invalid_argument("at least one q is required");
    for (double q : cfg.qs) {
        if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
        const double budget = 0.5 * (cfg.two_L - 5) * std::abs(std::log(q));
        if (budget < 2.0)
            throw std::invalid_argument(
                "tail bounds exceed budget: q^(interior levels) too large at q = " +
                std::to_string(q) + ", cutoff " + half_text(cfg.two_L) +
                "; raise the cutoff or lower q");
    }
}

namespace detail {
inline double tol_or(const SuiteConfig& cfg, double pinned) {
    return cfg.tol_override > 0.0 ? cfg.tol_override : pinned;
}
}  // namespace detail

// --- relations --------------------------------------------------------------
// The five defining relation families, the second radius identity, and the
// 18 crossed symmetry-coordinate identities, in every representation family.
inline std::vector<Record> run_relations(const SuiteConfig& cfg) {
    std::vector<Record> out;
    const double tol = detail::tol_or(cfg, 1e-9);
    const int two_L_scalar = cfg.two_L - 1;
    for (double q : cfg.qs) {
        QContext ctx(q);
        auto add_family = [&](const std::string& rep, const std::string& cutoff,
                              const RelationResiduals& r, double radius) {
            auto rec = [&](const std::string& id, const std::string& anchor, double v) {
                out.push_back(check_le("relations", rep + "." + id, anchor, q, cutoff, v, tol));
            };
            rec("commute_xx", "x_i x_j = q^2 x_j x_i (i<j)", r.commute_xx);
            rec("commute_xstar", "x_i* x_j = q^2 x_j x_i* (i!=j)", r.commute_xstar);
            rec("commutator_x1", "[x1*,x1] = (1-q^4) x0^2", r.commutator_x1);
            rec("commutator_x2", "[x2*,x2] = x1* x1 - q^4 x1 x1*", r.commutator_x2);
            rec("sphere_radius", "x0^2 + x1 x1* + x2 x2* = 1", r.sphere_radius);
            rec("radius_prime", "q^8 x0^2 + q^4 x1* x1 + x2* x2 = 1", radius);
        };
        for (int sign : {+1, -1}) {
            PlaneSpace pl(cfg.simple_K);
            auto gen = [&](XGen g) { return simple_generator(g, sign, pl, ctx); };
            const PlaneOperator one = PlaneOperator::identity(pl);
            add_family(sign > 0 ? "simple_plus" : "simple_minus", std::to_string(cfg.simple_K),
                       check_relations(gen, one, ctx), radius_residual(gen, one, ctx));
        }
        auto scalar = TruncatedSpace::make(Family::scalar, two_L_scalar);
        {
            auto gen = [&](XGen g) { return scalar_generator(g, scalar, ctx); };
            const SparseOperator one = SparseOperator::identity(scalar);
            add_family("scalar", half_text(two_L_scalar), check_relations(gen, one, ctx),
                       radius_residual(gen, one, ctx));
        }
        auto spinor = TruncatedSpace::make(Family::spinor, cfg.two_L);
        {
            // the chirality-doubled tower carries both spinor representations
            auto gen = [&](XGen g) { return spinor_generator(g, spinor, ctx); };
            const SparseOperator one = SparseOperator::identity(spinor);
            add_family("spinor_both", half_text(cfg.two_L), check_relations(gen, one, ctx),
                       radius_residual(gen, one, ctx));
        }
        out.push_back(check_le("relations", "crossed.scalar",
                               "h x = (h_(1) |> x) h_(2), 18 identities, relative residual", q,
                               half_text(two_L_scalar),
                               crossed_relations_residual(scalar, ctx), tol));
        out.push_back(check_le("relations", "crossed.spinor",
                               "h x = (h_(1) |> x) h_(2), 18 identities, relative residual", q,
                               half_text(cfg.two_L), crossed_relations_residual(spinor, ctx),
                               tol));
    }
    return out;
}

// --- idempotent -------------------------------------------------------------
inline std::vector<Record> run_idempotent(const SuiteConfig& cfg) {
    std::vector<Record> out;
    const double tol9 = detail::tol_or(cfg, 1e-9);
    const double tol12 = detail::tol_or(cfg, 1e-12);
    for (double q : cfg.qs) {
        QContext ctx(q);
        const AffineMatrix e = idempotent_e(ctx);

        // e^2 = e in the simple representation
        {
            PlaneSpace pl(cfg.simple_K);
            auto gen = [&](XGen g) { return simple_generator(g, +1, pl, ctx); };
            const PlaneOperator one = PlaneOperator::identity(pl);
            auto eb = represent_matrix(e, gen, one);
            out.push_back(check_le("idempotent", "e_squared", "e^2 = e", q,
                                   std::to_string(cfg.simple_K),
                                   block_residual(block_mul(eb, eb), eb), tol9));
        }
        // kappa(e*) = e at the symbolic level
        {
            AffineMatrix estar{};
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) estar[r][c] = kappa(e[c][r].star(), ctx);
            out.push_back(check_le("idempotent", "kappa_reality", "kappa(e*) = e", q, "-",
                                   matrix_residual(estar, e), tol12));
        }
        // covariance of e under the symmetry generators, symbolic
        out.push_back(check_le("idempotent", "covariance",
                               "h |> e = s(h_(1)) e s(S(h_(2)))", q, "-",
                               covariance_residual_e(ctx), tol12));

        // highest-weight structure in the left regular representation
        {
            auto scalar = TruncatedSpace::make(Family::scalar, 16);
            auto hw = highest_weight_checks(8, 7, scalar, ctx);
            out.push_back(check_le("idempotent", "hw.top_component",
                                   "x2^l |vac> = |l,0,l;0>", q, "8",
                                   hw.top_component_deficit, tol9));
            out.push_back(check_le("idempotent", "hw.annihilation",
                                   "E_i x2^l |vac> = 0", q, "8", hw.e_annihilation, tol9));
            out.push_back(check_le("idempotent", "hw.v_plus", "v+ (1 - e) = 0", q, "7/2",
                                   hw.v_plus_residual, tol9));
            out.push_back(check_le("idempotent", "hw.v_minus", "v- e = 0", q, "7/2",
                                   hw.v_minus_residual, tol9));
        }
    }
    return out;
}

// --- pairing ----------------------------------------------------------------
inline std::vector<Record> run_pairing(const SuiteConfig& cfg) {
    std::vector<Record> out;
    for (double q : cfg.qs) {
        QContext ctx(q);
        auto a = pairing_simple(ctx, cfg.simple_K);
        out.push_back(check_close("pairing", "simple", "ch(e) = (1-q^2)^2 sum q^{2(k1+k2)} = 1",
                                  q, std::to_string(cfg.simple_K), a.value, 1.0,
                                  detail::tol_or(cfg, 1e-12)));

        auto b = pairing_series(ctx, 1e-10);
        out.push_back(check_close("pairing", "series", "ch(e) as the (l,j) double series = 1",
                                  q, "-", b.value, 1.0, detail::tol_or(cfg, 1e-8)));
        out.push_back(check_le("pairing", "series_tail", "certified series tail", q, "-",
                               b.tail_bound, 1e-10));

        auto sp = TruncatedSpace::make(Family::spinor, cfg.two_L);
        auto c = pairing_direct(sp, ctx);
        const double tol_direct = detail::tol_or(cfg, 1e-6) + c.tail_bound;
        out.push_back(check_close("pairing", "direct.x0",
                                  "(1-q^2)^2/4 Tr(gamma F [F,x0]) = 1", q,
                                  half_text(cfg.two_L), c.via_x0, 1.0, tol_direct));
        out.push_back(check_close("pairing", "direct.idempotent",
                                  "1/2 Tr(gamma F [F,e]) = 1", q, half_text(cfg.two_L),
                                  c.via_idempotent, 1.0, tol_direct));
        out.push_back(check_close("pairing", "direct.complement",
                                  "1/2 Tr(gamma F [F,1-e]) = -1", q, half_text(cfg.two_L),
                                  c.via_complement, -1.0, tol_direct));
        out.push_back(check_close("pairing", "consistency.simple_vs_direct",
                                  "three routes agree", q, half_text(cfg.two_L),
                                  a.value - c.via_x0, 0.0, tol_direct));
        out.push_back(check_close("pairing", "consistency.series_vs_direct",
                                  "three routes agree", q, half_text(cfg.two_L),
                                  b.value - c.via_idempotent, 0.0, tol_direct));
    }
    return out;
}

// --- zeta -------------------------------------------------------------------
inline std::vector<Record> run_zeta(const SuiteConfig& cfg) {
    std::vector<Record> out;
    // eigenvalue multiplicities, q-independent: report once per q for a
    // uniform record shape, cost is negligible
    for (double q : cfg.qs) {
        QContext ctx(q);
        {
            long worst = 0;
            auto sp = TruncatedSpace::make(Family::spinor, 25);
            std::map<int, long> mult;
            for (std::size_t i = 0; i < sp.size(); ++i) ++mult[sp.label(i).two_l];
            for (const auto& [tl, m] : mult) {
                const long n = (tl + 3) / 2;  // |D| eigenvalue level
                worst = std::max(worst, std::abs(3 * m - 4 * (n * n * n - n)));
            }
            out.push_back(check_le("zeta", "multiplicities",
                                   "mult(n) = (4/3)(n^3 - n), n <= 14", q, "25/2",
                                   static_cast<double>(worst), 0.0));
        }
        {
            auto z = zeta_trace(6.0, 20000);
            const double expected =
                (4.0 / 3.0) *
                (riemann_zeta_oracle(3.0).value - riemann_zeta_oracle(5.0).value);
            out.push_back(check_close("zeta", "trace_s6",
                                      "Tr|D|^{-6} = (4/3)(zeta(3) - zeta(5))", q, "-",
                                      z.value.real(), expected, detail::tol_or(cfg, 1e-8)));
        }
        {
            auto f = residue_fit(weight_one(), ctx);
            const double t = detail::tol_or(cfg, 1e-10);
            out.push_back(check_close("zeta", "residue_one.a3",
                                      "Tr(|D|^{-s}) ~ (4/3)/(s-4)", q, "-", f.a3, 4.0 / 3.0, t));
            out.push_back(check_close("zeta", "residue_one.a2", "no pole at s=3", q, "-", f.a2,
                                      0.0, t));
            out.push_back(check_close("zeta", "residue_one.a1", "residue -4/3 at s=2", q, "-",
                                      f.a1, -4.0 / 3.0, t));
            out.push_back(check_close("zeta", "residue_one.a0", "no pole at s=1", q, "-", f.a0,
                                      0.0, t));
        }
        {
            auto f = residue_fit(weight_Lq(), ctx);
            out.push_back(check_close("zeta", "residue_Lq.a1",
                                      "zeta_{L_q} residue 4q/(1-q)^2 at s=2", q, "-", f.a1,
                                      4.0 * q / ((1.0 - q) * (1.0 - q)),
                                      detail::tol_or(cfg, 1e-8)));
        }
        {
            auto f = residue_fit(weight_word({{XGen::x2, false}, {XGen::x2, true}}, "x2_x2s"),
                                 ctx, 1e-7);
            const double q4 = std::pow(q, 4.0);
            out.push_back(check_close("zeta", "residue_x2x2s.a3",
                                      "top residue of x2 x2* is 4/3", q, "-", f.a3, 4.0 / 3.0,
                                      detail::tol_or(cfg, 1e-6)));
            out.push_back(check_close("zeta", "residue_x2x2s.a2",
                                      "subleading residue -4/(1-q^4)", q, "-", f.a2,
                                      -4.0 / (1.0 - q4), detail::tol_or(cfg, 1e-6)));
        }
        {
            auto t = top_residue({{XGen::x0, false}, {XGen::x0, false}}, ctx);
            out.push_back(check_close("zeta", "top_residue_x0sq",
                                      "top residue of x0^2 vanishes", q, "-", t.fitted, 0.0,
                                      detail::tol_or(cfg, 1e-6)));
        }
    }
    return out;
}

// --- real -------------------------------------------------------------------
inline std::vector<Record> run_real(const SuiteConfig& cfg) {
    std::vector<Record> out;
    const std::vector<GenChoice> gens = {{XGen::x0, false},
                                         {XGen::x1, false},
                                         {XGen::x1, true},
                                         {XGen::x2, false},
                                         {XGen::x2, true}};
    auto gen_name = [](GenChoice c) {
        return std::string(to_string(c.g)) + (c.star ? "s" : "");
    };
    for (double q : cfg.qs) {
        QContext ctx(q);
        auto sp = TruncatedSpace::make(Family::spinor, cfg.two_L);
        auto J = J_operator(sp);
        {
            // structural identities, exact in floating point
            double j2 = 0.0;
            for (std::size_t i = 0; i < sp.size(); ++i) {
                const auto pi = static_cast<std::size_t>(J.perm[i]);
                const cplx ph = std::conj(J.phase[i]) * J.phase[pi];
                j2 = std::max(j2, std::abs(ph + 1.0) +
                                      std::abs(static_cast<double>(J.perm[pi]) -
                                               static_cast<double>(i)));
            }
            out.push_back(check_le("real", "J_squared", "J^2 = -1", q, half_text(cfg.two_L),
                                   j2, 0.0));
            auto D = dirac_D(sp);
            auto G = grading_gamma(sp);
            out.push_back(check_le("real", "JD_commute", "J D = D J", q, half_text(cfg.two_L),
                                   (J.sandwich(D) - D).max_abs_entry(), 0.0));
            out.push_back(check_le("real", "Jgamma_commute", "J gamma = gamma J", q,
                                   half_text(cfg.two_L),
                                   (J.sandwich(G) - G).max_abs_entry(), 0.0));
        }
        {
            // T h T^{-1} = S(h)* for every symmetry generator
            auto T = T_operator(sp, ctx);
            double worst = 0.0;
            for (UqGen h : {UqGen::K1, UqGen::K2, UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) {
                const auto [coef, target] = GeneratorHopfData::antipode_star(h, ctx);
                auto rhs = coef * rep_generator(target, sp, ctx);
                // relative residual: the E/F generator entries grow like
                // q^{-l}, so the roundoff scales with the operator itself
                const double scale =
                    std::max(1.0, rhs.interior_max_column_norm(rhs.interior_margin()));
                worst = std::max(
                    worst,
                    relation_residual(T.sandwich(rep_generator(h, sp, ctx)), rhs) / scale);
            }
            out.push_back(check_le("real", "T_equivariance",
                                   "T h T^{-1} = S(h)*, relative residual", q,
                                   half_text(cfg.two_L), worst, detail::tol_or(cfg, 1e-9)));
        }
        {
            // closed-form matrix element of [x2, J x2 J] on the j = 1/2 line
            auto X = spinor_generator(XGen::x2, sp, ctx);
            auto M = -1.0 * (X * J.sandwich(X) - J.sandwich(X) * X);
            const auto& amp = M.components.at(LabelDisp{+2, 0, 0, 0, 0});
            double worst_rel = 0.0;
            for (int tl = 1; tl <= std::min(cfg.two_L - 4, 21); tl += 2) {
                const int i = sp.index_of(BasisLabel{tl, -1, tl, 1, +1});
                const double f = f_matrix_element_closed(tl, ctx);
                worst_rel = std::max(
                    worst_rel,
                    std::abs(amp[static_cast<std::size_t>(i)].real() - f) / std::abs(f));
            }
            out.push_back(check_le("real", "f_closed_form",
                                   "<l+1|[x2,Jx2J]|l> at j=1/2, m2=l, closed form", q,
                                   half_text(cfg.two_L), worst_rel,
                                   detail::tol_or(cfg, 1e-10)));
        }
        {
            // j-axis decay of [a, J b J^{-1}] for all 25 generator pairs
            auto dsp = TruncatedSpace::make(Family::spinor, std::min(cfg.two_L, 21));
            for (GenChoice a : gens)
                for (GenChoice b : gens) {
                    auto ops = commutant_ops(a, b, dsp, ctx);
                    auto p = decay_profile(ops.zero_order, DecayAxis::j);
                    out.push_back(check_le(
                        "real", "jdecay." + gen_name(a) + "." + gen_name(b),
                        "[a, JbJ^{-1}] entries <= 10 q^{2j}", q, half_text(dsp.two_L),
                        decay_prefactor(p, ctx, 2), 10.0));
                }
        }
        {
            // l-axis decay rate for the x2 pairs
            auto lsp = TruncatedSpace::make(Family::spinor, std::max(cfg.two_L, 33));
            const double need = 1.9 * std::abs(ctx.log_q);
            for (GenChoice a : {GenChoice{XGen::x2, false}, GenChoice{XGen::x2, true}}) {
                auto ops = commutant_ops(a, {XGen::x2, false}, lsp, ctx);
                auto p = decay_profile(ops.zero_order, DecayAxis::l);
                out.push_back(check_ge("real", "lrate." + gen_name(a) + ".x2",
                                       "[a, Jx2J^{-1}] decays at least like q^{1.9 l}", q,
                                       half_text(lsp.two_L), p.rate, need));
            }
        }
        {
            // smoothing: || |D|^k [[D,x2], Jx2J^{-1}] || stable across cutoffs
            std::vector<std::vector<double>> norms;
            for (int twoL : {17, 21, 25}) {
                auto ssp = TruncatedSpace::make(Family::spinor, twoL);
                auto ops = commutant_ops({XGen::x2, false}, {XGen::x2, false}, ssp, ctx);
                norms.push_back(smoothing_norms(ops.first_order, 4));
            }
            // Uniform boundedness as a convergence statement: each successive
            // cutoff increment must shrink by at least a factor 2 (geometric
            // convergence of || |D|^k ... || in the cutoff), increments below
            // a 1e-9 relative noise floor counting as fully stabilized.
            double worst = 0.0;
            for (int ik = 0; ik <= 4; ++ik) {
                const auto k = static_cast<std::size_t>(ik);
                const double scale = norms.back()[k];
                const double inc1 = std::abs(norms[1][k] - norms[0][k]);
                const double inc2 = std::abs(norms[2][k] - norms[1][k]);
                if (inc2 <= 1e-9 * scale) continue;
                worst = std::max(worst, inc2 / std::max(inc1, 1e-9 * scale));
            }
            out.push_back(check_le("real", "smoothing",
                                   "|| |D|^k [[D,x2],Jx2J^{-1}] || converges in the cutoff, "
                                   "k<=4, increment ratio",
                                   q, "17/2..25/2", worst, 0.5));
        }
        {
            // the commutator is genuinely nonzero
            auto wsp = TruncatedSpace::make(Family::spinor, std::min(cfg.two_L, 17));
            auto ops = commutant_ops({XGen::x2, false}, {XGen::x2, false}, wsp, ctx);
            out.push_back(check_ge("real", "witness_nonzero", "||[x2, Jx2J^{-1}]|| > 1e-6", q,
                                   half_text(wsp.two_L),
                                   ops.zero_order.restrict_interior(
                                                     ops.zero_order.interior_margin())
                                       .norm_estimate(),
                                   1e-6));
        }
    }
    return out;
}

// --- approx -----------------------------------------------------------------
inline std::vector<Record> run_approx(const SuiteConfig& cfg) {
    std::vector<Record> out;
    const int two_L = std::min(cfg.two_L, 21);
    auto hat = TruncatedSpace::make_hat(two_L, 2);
    auto phys = TruncatedSpace::make(Family::spinor, two_L);
    const std::string hat_cut = half_text(two_L) + "+2";
    for (double q : cfg.qs) {
        QContext ctx(q);
        const double tol = detail::tol_or(cfg, 1e-9);
        auto al = hat_generator(HatGen::alpha, hat, ctx);
        auto be = hat_generator(HatGen::beta, hat, ctx);
        auto A = hat_generator(HatGen::A, hat, ctx);
        auto B = hat_generator(HatGen::B, hat, ctx);
        auto I = SparseOperator::identity(hat);
        auto rec = [&](const std::string& id, const std::string& anchor, double v) {
            out.push_back(check_le("approx", id, anchor, q, hat_cut, v, tol));
        };
        rec("suq2.ba", "beta alpha = q alpha beta", relation_residual(be * al, q * (al * be)));
        rec("suq2.bsa", "beta* alpha = q alpha beta*",
            relation_residual(be.adjoint() * al, q * (al * be.adjoint())));
        rec("suq2.bbs", "[beta, beta*] = 0",
            relation_residual(be * be.adjoint(), be.adjoint() * be));
        rec("suq2.unitary1", "alpha alpha* + beta beta* = 1",
            relation_residual(al * al.adjoint() + be * be.adjoint(), I));
        rec("suq2.unitary2", "alpha* alpha + q^2 beta* beta = 1",
            relation_residual(al.adjoint() * al + (q * q) * (be.adjoint() * be), I));
        rec("s2q.ab", "A B = q^2 B A", relation_residual(A * B, (q * q) * (B * A)));
        rec("s2q.radius1", "B B* + A^2 = 1", relation_residual(B * B.adjoint() + A * A, I));
        rec("s2q.radius2", "B* B + q^4 A^2 = 1",
            relation_residual(B.adjoint() * B + (q * q * q * q) * (A * A), I));
        {
            double worst = 0.0;
            for (const auto& u : {al, be})
                for (const auto& v : {A, B}) {
                    worst = std::max(worst, relation_residual(u * v, v * u));
                    worst = std::max(worst,
                                     relation_residual(u * v.adjoint(), v.adjoint() * u));
                }
            rec("cross_commute", "SU_q(2) factor commutes with S2_q factor", worst);
        }

        auto pq = pq_maps(hat, phys);
        out.push_back(check_le("approx", "pq_identity", "P Q = id", q, hat_cut,
                               (pq.P * pq.Q - SparseOperator::identity(phys)).max_abs_entry(),
                               0.0));
        for (XGen g : {XGen::x0, XGen::x1, XGen::x2}) {
            auto diff = spinor_generator(g, phys, ctx) - pi_tilde(g, pq, ctx);
            auto p = decay_profile(diff, DecayAxis::j);
            out.push_back(check_le("approx", std::string("deviation.") + to_string(g),
                                   "x - P phi(x) Q entries <= 10 q^j per j-level", q,
                                   half_text(two_L), decay_prefactor(p, ctx, 1), 10.0));
            auto tier = smoothing_tier_generator(g, phys, ctx);
            auto pl = decay_profile(spinor_generator(g, phys, ctx) - tier, DecayAxis::l);
            out.push_back(check_le("approx", std::string("tier.") + to_string(g),
                                   "x - smoothing-tier(x) entries <= 10 q^l per l-level", q,
                                   half_text(two_L), decay_prefactor(pl, ctx, 1), 10.0));
        }
    }
    return out;
}

using SuiteFn = std::vector<Record> (*)(const SuiteConfig&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"relations", run_relations}, {"idempotent", run_idempotent},
        {"pairing", run_pairing},     {"zeta", run_zeta},
        {"real", run_real},           {"approx", run_approx},
    };
    return reg;
}

}  // namespace q4s
