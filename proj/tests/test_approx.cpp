#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "q4s/approx.hpp"
#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/realstruct.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"

using namespace q4s;

namespace {
constexpr int kTwoL = 21;
}

TEST_CASE("the hat space carries the SU_q(2) x S2_q relations") {
    auto hat = TruncatedSpace::make_hat(kTwoL, 2);
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto al = hat_generator(HatGen::alpha, hat, ctx);
        auto be = hat_generator(HatGen::beta, hat, ctx);
        auto A = hat_generator(HatGen::A, hat, ctx);
        auto B = hat_generator(HatGen::B, hat, ctx);
        auto I = SparseOperator::identity(hat);

        // SU_q(2) relations
        CHECK(relation_residual(be * al, q * (al * be)) < 1e-9);
        CHECK(relation_residual(be.adjoint() * al, q * (al * be.adjoint())) < 1e-9);
        CHECK(relation_residual(be * be.adjoint(), be.adjoint() * be) < 1e-9);
        CHECK(relation_residual(al * al.adjoint() + be * be.adjoint(), I) < 1e-9);
        CHECK(relation_residual(al.adjoint() * al + (q * q) * (be.adjoint() * be), I) < 1e-9);

        // equatorial sphere relations
        CHECK(relation_residual(A.adjoint(), A) < 1e-15);
        CHECK(relation_residual(A * B, (q * q) * (B * A)) < 1e-9);
        CHECK(relation_residual(B * B.adjoint() + A * A, I) < 1e-9);
        CHECK(relation_residual(B.adjoint() * B + (q * q * q * q) * (A * A), I) < 1e-9);

        // the two tensor factors commute
        for (const auto& u : {al, be})
            for (const auto& v : {A, B}) {
                CHECK(relation_residual(u * v, v * u) < 1e-12);
                CHECK(relation_residual(u * v.adjoint(), v.adjoint() * u) < 1e-12);
            }
    }
}

TEST_CASE("P and Q compress exactly") {
    auto hat = TruncatedSpace::make_hat(kTwoL, 2);
    auto phys = TruncatedSpace::make(Family::spinor, kTwoL);
    auto pq = pq_maps(hat, phys);

    // PQ = id on the physical tower, exactly
    CHECK((pq.P * pq.Q - SparseOperator::identity(phys)).max_abs_entry() == 0.0);

    // QP is an orthogonal projection on the hat space, exactly
    auto QP = pq.Q * pq.P;
    CHECK((QP * QP - QP).max_abs_entry() == 0.0);
    CHECK((QP - QP.adjoint()).max_abs_entry() == 0.0);

    // P kills a hat label outside the physical set (here m1 > j)
    const BasisLabel outside{5, 5, 1, 3, +1};
    REQUIRE(hat.contains(outside));
    REQUIRE(!admissible(outside, Family::spinor));
    std::vector<cplx> e(hat.size(), cplx{});
    e[static_cast<std::size_t>(hat.index_of(outside))] = 1.0;
    for (const auto& c : pq.P.apply(e)) CHECK(c == cplx{});

    // hat cutoff must dominate the physical cutoff
    CHECK_THROWS_AS(pq_maps(TruncatedSpace::make_hat(kTwoL - 4, 2), phys),
                    std::invalid_argument);
}

TEST_CASE("the compressed representation has the expected shift structure") {
    auto hat = TruncatedSpace::make_hat(kTwoL, 2);
    auto phys = TruncatedSpace::make(Family::spinor, kTwoL);
    QContext ctx(0.5);
    auto pq = pq_maps(hat, phys);

    // pi_tilde(x2) = P B Q by definition of phi
    auto B = hat_generator(HatGen::B, hat, ctx);
    CHECK((pi_tilde(XGen::x2, pq, ctx) - pq.P * B * pq.Q).max_abs_entry() == 0.0);

    // pi_tilde(x0) is a sum of exactly two shift components with dl = dj = +-1
    auto t0 = pi_tilde(XGen::x0, pq, ctx);
    std::size_t nonzero = 0;
    for (const auto& [d, amp] : t0.components) {
        bool any = false;
        for (const auto& a : amp) any |= (a != cplx{});
        if (!any) continue;
        ++nonzero;
        CHECK(d.dl2 == d.dj2);
        CHECK(std::abs(d.dl2) == 2);
        CHECK(d.dm1_2 == 0);
        CHECK(d.dm2_2 == 0);
    }
    CHECK(nonzero == 2);

    // compression respects the star: pi_tilde(x1)* = P phi(x1)* Q
    auto t1s = pi_tilde(XGen::x1, pq, ctx).adjoint();
    auto s1t = pq.P * hat_phi(XGen::x1, hat, ctx).adjoint() * pq.Q;
    CHECK((t1s - s1t).max_abs_entry() < 1e-15);
}

TEST_CASE("the deviation from the compressed representation decays like q^j") {
    auto hat = TruncatedSpace::make_hat(kTwoL, 2);
    auto phys = TruncatedSpace::make(Family::spinor, kTwoL);
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto pq = pq_maps(hat, phys);
        for (XGen g : {XGen::x0, XGen::x1, XGen::x2}) {
            auto diff = spinor_generator(g, phys, ctx) - pi_tilde(g, pq, ctx);
            auto p = decay_profile(diff, DecayAxis::j);
            CHECK(!p.all_zero);  // the compression is not exact
            CHECK(decay_prefactor(p, ctx, 1) <= 10.0);  // max entry <= 10 q^j per level
            CHECK(p.rate >= 0.95 * std::abs(ctx.log_q));
        }
    }
}

TEST_CASE("the smoothing-tier coefficient approximation is accurate to q^l") {
    auto phys = TruncatedSpace::make(Family::spinor, kTwoL);
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        for (XGen g : {XGen::x0, XGen::x1, XGen::x2}) {
            auto diff = spinor_generator(g, phys, ctx) - smoothing_tier_generator(g, phys, ctx);
            auto p = decay_profile(diff, DecayAxis::l);
            CHECK(!p.all_zero);
            CHECK(decay_prefactor(p, ctx, 1) <= 10.0);  // max entry <= 10 q^l per level
        }
    }
}

TEST_CASE("the multiplicativity defect of the compression decays like q^j") {
    auto hat = TruncatedSpace::make_hat(kTwoL, 2);
    auto phys = TruncatedSpace::make(Family::spinor, kTwoL);
    for (double q : {0.3, 0.5, 0.8}) {
        QContext ctx(q);
        auto pq = pq_maps(hat, phys);
        auto check_pair = [&](XGen a, XGen b) {
            auto word = pq.P * (hat_phi(a, hat, ctx) * hat_phi(b, hat, ctx)) * pq.Q;
            auto defect = word - pi_tilde(a, pq, ctx) * pi_tilde(b, pq, ctx);
            auto p = decay_profile(defect, DecayAxis::j);
            CHECK(decay_prefactor(p, ctx, 1) <= 10.0);
        };
        check_pair(XGen::x0, XGen::x2);
        check_pair(XGen::x2, XGen::x2);
        check_pair(XGen::x1, XGen::x0);
        check_pair(XGen::x1, XGen::x1);
    }
}
