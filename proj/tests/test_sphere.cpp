#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"

using namespace q4s;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("defining relations in the simple representations") {
    PlaneSpace ps(30);
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        for (int sign : {+1, -1}) {
            auto gen = [&](XGen g) { return simple_generator(g, sign, ps, ctx); };
            auto r = check_relations(gen, PlaneOperator::identity(ps), ctx);
            INFO("q = " << q << ", sign = " << sign);
            CHECK(r.max() < kTol);
        }
    }
}

TEST_CASE("defining relations in the left regular representation") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto sp = TruncatedSpace::make(Family::scalar, 12);
        auto gen = [&](XGen g) { return scalar_generator(g, sp, ctx); };
        auto r = check_relations(gen, SparseOperator::identity(sp), ctx);
        INFO("q = " << q);
        CHECK(r.commute_xx < kTol);
        CHECK(r.commute_xstar < kTol);
        CHECK(r.commutator_x1 < kTol);
        CHECK(r.commutator_x2 < kTol);
        CHECK(r.sphere_radius < kTol);
        CHECK(radius_residual(gen, SparseOperator::identity(sp), ctx) < kTol);
    }
}

TEST_CASE("defining relations in the chiral representations") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto sp = TruncatedSpace::make(Family::spinor, 11);
        auto gen = [&](XGen g) { return spinor_generator(g, sp, ctx); };
        auto r = check_relations(gen, SparseOperator::identity(sp), ctx);
        INFO("q = " << q);
        CHECK(r.commute_xx < kTol);
        CHECK(r.commute_xstar < kTol);
        CHECK(r.commutator_x1 < kTol);
        CHECK(r.commutator_x2 < kTol);
        CHECK(r.sphere_radius < kTol);
        CHECK(radius_residual(gen, SparseOperator::identity(sp), ctx) < kTol);
        // x0 is self-adjoint
        auto X0 = gen(XGen::x0);
        CHECK(relation_residual(X0, X0.adjoint()) < kTol);
    }
}

TEST_CASE("crossed relations with the symmetry generators") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        INFO("q = " << q);
        CHECK(crossed_relations_residual(TruncatedSpace::make(Family::scalar, 12), ctx) < 1e-11);
        CHECK(crossed_relations_residual(TruncatedSpace::make(Family::spinor, 11), ctx) < 1e-11);
    }
}

TEST_CASE("Hopf action on affine elements") {
    QContext ctx(0.5);
    const double q = ctx.q;
    // E_1 |> x_1^* = -q^{3/2} [2] x_0
    auto a = hopf_action(UqGen::E1, AffineElement::gen_star(XGen::x1), ctx);
    CHECK(std::abs(a.x[0] - cplx(-ctx.pow_q(1.5) * q_number2(4, ctx))) < 1e-15);
    // K_2 |> x_2 = q x_2,  K_2 |> x_2^* = q^{-1} x_2^*
    auto b = hopf_action(UqGen::K2, AffineElement::gen(XGen::x2), ctx);
    CHECK(std::abs(b.x[2] - cplx(q)) < 1e-15);
    auto c = hopf_action(UqGen::K2, AffineElement::gen_star(XGen::x2), ctx);
    CHECK(std::abs(c.xs[2] - cplx(1.0 / q)) < 1e-15);
    // counit on the unit: E_i |> 1 = 0, K_i |> 1 = 1
    auto u = hopf_action(UqGen::E2, AffineElement::unit(), ctx);
    CHECK(u.max_abs() == 0.0);
    auto v = hopf_action(UqGen::K1, AffineElement::unit(), ctx);
    CHECK(std::abs(v.one - cplx(1.0)) < 1e-15);
}

TEST_CASE("idempotent: symbolic covariance and reality") {
    for (double q : {0.3, 0.5, 0.8}) {
        INFO("q = " << q);
        CHECK(covariance_residual_e(QContext(q)) < 1e-13);
    }
}

TEST_CASE("idempotent: e^2 = e in every representation") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        INFO("q = " << q);
        const AffineMatrix e = idempotent_e(ctx);

        // simple representations
        PlaneSpace ps(25);
        for (int sign : {+1, -1}) {
            auto gen = [&](XGen g) { return simple_generator(g, sign, ps, ctx); };
            auto E = represent_matrix(e, gen, PlaneOperator::identity(ps));
            CHECK(block_residual(block_mul(E, E), E) < kTol);
        }
        // left regular representation
        {
            auto sp = TruncatedSpace::make(Family::scalar, 10);
            auto gen = [&](XGen g) { return scalar_generator(g, sp, ctx); };
            auto E = represent_matrix(e, gen, SparseOperator::identity(sp));
            CHECK(block_residual(block_mul(E, E), E) < kTol);
        }
        // chiral representations
        {
            auto sp = TruncatedSpace::make(Family::spinor, 9);
            auto gen = [&](XGen g) { return spinor_generator(g, sp, ctx); };
            auto E = represent_matrix(e, gen, SparseOperator::identity(sp));
            CHECK(block_residual(block_mul(E, E), E) < kTol);
        }
    }
}

TEST_CASE("highest weight vectors and the split of the free module") {
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto sp = TruncatedSpace::make(Family::scalar, 12);
        auto rep = highest_weight_checks(6, 5, sp, ctx);
        INFO("q = " << q);
        CHECK(rep.top_component_deficit < 1e-12);
        CHECK(rep.e_annihilation < 1e-12);
        CHECK(rep.v_plus_residual < 1e-12);
        CHECK(rep.v_minus_residual < 1e-12);
    }
}

TEST_CASE("first matrix elements of the left regular representation") {
    QContext ctx(0.5);
    auto sp = TruncatedSpace::make(Family::scalar, 6);
    auto X2 = scalar_generator(XGen::x2, sp, ctx);
    auto v = X2.apply(vacuum_vector(sp));
    // x2 |0,0,0;0> = D+ |1,0,1;0> with D+ = q^{-3/2} sqrt([3][2] / ([3][5]))
    int t = sp.index_of(BasisLabel{2, 0, 2, 0, 0});
    REQUIRE(t >= 0);
    double want = ctx.pow_q(-1.5) * std::sqrt(q_number2(4, ctx) / q_number2(10, ctx));
    CHECK(std::abs(v[static_cast<std::size_t>(t)] - cplx(want)) < 1e-14);
    // single nonzero component
    double total = 0.0;
    for (const auto& c : v) total += std::norm(c);
    CHECK(std::abs(total - want * want) < 1e-14);
}
