#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/uqso5.hpp"

using namespace q4s;

namespace {

// Relative residual of an operator identity; `scale` should reflect the
// magnitude of the intermediate products (cancellations make the entries of
// the finished combination useless as a yardstick).
void check_rel(const SparseOperator& lhs, const SparseOperator& rhs, double scale = 1.0) {
    scale = std::max({scale, lhs.max_abs_entry(), rhs.max_abs_entry(), 1.0});
    CHECK(relation_residual(lhs, rhs) <= 1e-12 * scale);
}

SparseOperator zero_op(const TruncatedSpace& sp) { return SparseOperator(sp); }

struct Reps {
    SparseOperator K1, K2, K1i, K2i, E1, E2, F1, F2;
    explicit Reps(const TruncatedSpace& sp, const QContext& ctx)
        : K1(rep_generator(UqGen::K1, sp, ctx)),
          K2(rep_generator(UqGen::K2, sp, ctx)),
          K1i(rep_generator(UqGen::K1inv, sp, ctx)),
          K2i(rep_generator(UqGen::K2inv, sp, ctx)),
          E1(rep_generator(UqGen::E1, sp, ctx)),
          E2(rep_generator(UqGen::E2, sp, ctx)),
          F1(rep_generator(UqGen::F1, sp, ctx)),
          F2(rep_generator(UqGen::F2, sp, ctx)) {}
};

void check_defining_relations(const TruncatedSpace& sp, const QContext& ctx) {
    const double q = ctx.q;
    Reps r(sp, ctx);

    // Cartan part
    check_rel(r.K1 * r.K1i, SparseOperator::identity(sp));
    check_rel(r.K2 * r.K2i, SparseOperator::identity(sp));
    check_rel(r.K1 * r.K2, r.K2 * r.K1);

    // K_i E_i K_i^{-1} = q^i E_i,  K_i E_j K_i^{-1} = q^{-1} E_j (i != j)
    check_rel(r.K1 * r.E1 * r.K1i, q * r.E1);
    check_rel(r.K2 * r.E2 * r.K2i, (q * q) * r.E2);
    check_rel(r.K1 * r.E2 * r.K1i, (1.0 / q) * r.E2);
    check_rel(r.K2 * r.E1 * r.K2i, (1.0 / q) * r.E1);
    // and the F counterparts
    check_rel(r.K1 * r.F1 * r.K1i, (1.0 / q) * r.F1);
    check_rel(r.K2 * r.F2 * r.K2i, (1.0 / (q * q)) * r.F2);
    check_rel(r.K1 * r.F2 * r.K1i, q * r.F2);
    check_rel(r.K2 * r.F1 * r.K2i, q * r.F1);

    // [E_i, F_j] = delta_ij (K_j^2 - K_j^{-2}) / (q^j - q^{-j})
    const double s1 = r.E1.max_abs_entry(), s2 = r.E2.max_abs_entry();
    check_rel(r.E1 * r.F1 - r.F1 * r.E1,
              (1.0 / (q - 1.0 / q)) * (r.K1 * r.K1 - r.K1i * r.K1i), s1 * s1);
    check_rel(r.E2 * r.F2 - r.F2 * r.E2,
              (1.0 / (q * q - 1.0 / (q * q))) * (r.K2 * r.K2 - r.K2i * r.K2i), s2 * s2);
    check_rel(r.E1 * r.F2 - r.F2 * r.E1, zero_op(sp), s1 * s2);
    check_rel(r.E2 * r.F1 - r.F1 * r.E2, zero_op(sp), s1 * s2);

    // quantum Serre relations
    const double q2 = q * q;
    check_rel(r.E1 * r.E2 * r.E2 - (q2 + 1.0 / q2) * (r.E2 * r.E1 * r.E2) + r.E2 * r.E2 * r.E1,
              zero_op(sp), s1 * s2 * s2);
    check_rel(r.E1 * r.E1 * r.E1 * r.E2 -
                  (q2 + 1.0 + 1.0 / q2) *
                      (r.E1 * r.E1 * r.E2 * r.E1 - r.E1 * r.E2 * r.E1 * r.E1) -
                  r.E2 * r.E1 * r.E1 * r.E1,
              zero_op(sp), s1 * s1 * s1 * s2);
    // same for the F's
    check_rel(r.F1 * r.F2 * r.F2 - (q2 + 1.0 / q2) * (r.F2 * r.F1 * r.F2) + r.F2 * r.F2 * r.F1,
              zero_op(sp), s1 * s2 * s2);
    check_rel(r.F1 * r.F1 * r.F1 * r.F2 -
                  (q2 + 1.0 + 1.0 / q2) *
                      (r.F1 * r.F1 * r.F2 * r.F1 - r.F1 * r.F2 * r.F1 * r.F1) -
                  r.F2 * r.F1 * r.F1 * r.F1,
              zero_op(sp), s1 * s1 * s1 * s2);
}

std::vector<cplx> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& c : v) c = {u(rng), u(rng)};
    return v;
}

}  // namespace

TEST_CASE("defining relations hold in every sigma_l (scalar tower)") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        check_defining_relations(TruncatedSpace::make(Family::scalar, 8), ctx);
    }
}

TEST_CASE("defining relations hold in every sigma_l (spinor tower)") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        check_defining_relations(TruncatedSpace::make(Family::spinor, 7), ctx);
    }
}

TEST_CASE("star structure: F_i is the adjoint of E_i and K_i is self-adjoint") {
    QContext ctx(0.5);
    auto sp = TruncatedSpace::make(Family::spinor, 5);
    Reps r(sp, ctx);
    check_rel(r.F1, r.E1.adjoint());
    check_rel(r.F2, r.E2.adjoint());
    check_rel(r.K1, r.K1.adjoint());
    check_rel(r.K2, r.K2.adjoint());
}

TEST_CASE("antipode property in the representation") {
    // m (S (x) id) Delta(h) = eps(h) 1, evaluated through the generator tables
    QContext ctx(0.4);
    auto sp = TruncatedSpace::make(Family::scalar, 6);
    auto rep = [&](UqGen g) { return rep_generator(g, sp, ctx); };
    for (UqGen h : {UqGen::K1, UqGen::K2, UqGen::K1inv, UqGen::K2inv, UqGen::E1, UqGen::E2,
                    UqGen::F1, UqGen::F2}) {
        auto d = GeneratorHopfData::table(h, ctx);
        SparseOperator acc(sp);
        for (const auto& leg : d.coproduct) {
            auto ls = GeneratorHopfData::table(leg.left, ctx);
            acc += ls.antipode_coef * (rep(ls.antipode_gen) * rep(leg.right));
        }
        check_rel(acc, d.counit * SparseOperator::identity(sp));
    }
}

TEST_CASE("Casimir of the first root subalgebra") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        for (Family fam : {Family::scalar, Family::spinor}) {
            auto sp = TruncatedSpace::make(fam, fam == Family::scalar ? 6 : 5);
            auto C = casimir_c1(sp, ctx);
            REQUIRE(C.components.size() == 1);  // diagonal
            const auto& amp = C.components.begin()->second;
            for (std::size_t i = 0; i < sp.size(); ++i) {
                // eigenvalue q^{2j+1} + q^{-2j-1}
                int e = 2 * sp.label(i).two_j + 2;  // doubled exponent
                double want = ctx.pow_q2(e) + ctx.pow_q2(-e);
                CHECK(std::abs(amp[i] - want) < 1e-12 * want);
            }
            // Casimir commutes with the whole first-root subalgebra
            Reps r(sp, ctx);
            check_rel(C * r.E1, r.E1 * C);
            check_rel(C * r.F1, r.F1 * C);
        }
    }
    // headline value: j = 1/2, q = 1/2 gives q^2 + q^{-2} = 4.25
    QContext ctx(0.5);
    auto sp = TruncatedSpace::make(Family::spinor, 1);
    auto C = casimir_c1(sp, ctx);
    CHECK(std::abs(C.components.begin()->second[0] - 4.25) < 1e-13);
}

TEST_CASE("E2 matrix elements against the three-term coefficients") {
    QContext ctx(0.5);
    auto sp = TruncatedSpace::make(Family::scalar, 4);
    auto E2 = rep_generator(UqGen::E2, sp, ctx);
    // source |l=2, m1=1, m2=-1; j=1> -> targets (m1=0, m2=0), j' in {2, 0}
    int src = sp.index_of(BasisLabel{4, 2, -2, 2, 0});
    REQUIRE(src >= 0);
    std::vector<cplx> e(sp.size(), cplx{});
    e[static_cast<std::size_t>(src)] = 1.0;
    auto w = E2.apply(e);
    auto amp_at = [&](int tj) {
        int t = sp.index_of(BasisLabel{4, 0, 0, tj, 0});
        REQUIRE(t >= 0);
        return w[static_cast<std::size_t>(t)];
    };
    double a = sigma_coefficient(SigmaCoef::a, 4, 2, -2, ctx);
    double c = sigma_coefficient(SigmaCoef::c, 4, 2, -2, ctx);
    // prefactors sqrt([j-m1+1][j-m1+2]) and sqrt([j+m1][j+m1-1]) at j=1, m1=1
    double pre_a = sqrt_q_product2({2, 4}, ctx);
    double pre_c = sqrt_q_product2({4, 2}, ctx);
    CHECK(a != 0.0);
    CHECK(c != 0.0);
    CHECK(std::abs(amp_at(4) - pre_a * a) < 1e-13);
    CHECK(std::abs(amp_at(0) - pre_c * c) < 1e-13);
    // b-branch dies on the scalar tower (eps = 0)
    CHECK(sigma_coefficient(SigmaCoef::b, 4, 2, -2, ctx) == 0.0);
}

TEST_CASE("real structure C on the scalar tower") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto sp = TruncatedSpace::make(Family::scalar, 6);
        auto C = real_structure_C(sp, ctx);

        // C^2 = 1 (C is antilinear, so apply twice on a complex vector)
        auto v = random_vector(sp.size(), 11);
        auto w = C.apply(C.apply(v));
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(w[i] - v[i]) < 1e-12);

        // C sigma(h) C^{-1} = sigma(S(h)^*)  (C^{-1} = C)
        for (UqGen h : {UqGen::K1, UqGen::K1inv, UqGen::E1, UqGen::F1, UqGen::E2, UqGen::F2}) {
            auto [coef, gen] = GeneratorHopfData::antipode_star(h, ctx);
            check_rel(C.sandwich(rep_generator(h, sp, ctx)),
                      coef * rep_generator(gen, sp, ctx));
        }
    }
}
