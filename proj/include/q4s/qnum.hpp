// q-analogue arithmetic: the deformation parameter context, the q-number
// [z] = (q^z - q^{-z}) / (q - q^{-1}), and overflow-safe products of
// q-numbers.  Half-integers are represented throughout as doubled integers
// (store 2z) so that admissibility arithmetic stays exact.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <initializer_list>
#include <span>

namespace q4s {

struct QContext {
    double q;                    // deformation parameter, 0 < q < 1
    double tol_relation = 1e-9;  // residual tolerance for operator relations
    double tol_series = 1e-10;   // certified tail tolerance for series
    double log_q;                // cached log(q)

    explicit QContext(double q_, double tol_rel = 1e-9, double tol_ser = 1e-10)
        : q(q_), tol_relation(tol_rel), tol_series(tol_ser) {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("QContext: q must lie in (0,1)");
        if (!(tol_relation > 0.0) || !(tol_series > 0.0))
            throw std::invalid_argument("QContext: tolerances must be positive");
        log_q = std::log(q);
    }

    // q^z for doubled half-integer 2z.
    double pow_q2(std::int64_t two_z) const {
        return std::exp(0.5 * static_cast<double>(two_z) * log_q);
    }
    // q^z for real z.
    double pow_q(double z) const { return std::exp(z * log_q); }
};

// [z] for real z.
inline double q_number(double z, const QContext& ctx) {
    if (z == 0.0) return 0.0;
    return (ctx.pow_q(z) - ctx.pow_q(-z)) / (ctx.q - 1.0 / ctx.q);
}

// [z] for doubled half-integer 2z.
inline double q_number2(std::int64_t two_z, const QContext& ctx) {
    if (two_z == 0) return 0.0;
    return (ctx.pow_q2(two_z) - ctx.pow_q2(-two_z)) / (ctx.q - 1.0 / ctx.q);
}

// Product accumulator that keeps a separate binary exponent, so that long
// products of large (or tiny) q-numbers cannot overflow intermediately.
class ScaledProduct {
  public:
    void multiply(double x) {
        int e = 0;
        mant_ *= std::frexp(x, &e);
        exp2_ += e;
        // renormalize the mantissa to [0.5, 1) range bookkeeping
        int e2 = 0;
        mant_ = std::frexp(mant_, &e2);
        exp2_ += e2;
    }
    double value() const { return std::ldexp(mant_, static_cast<int>(exp2_)); }

  private:
    double mant_ = 0.5;  // frexp normal form of 1.0
    std::int64_t exp2_ = 1;
};

// Product of q-numbers Pi [z_i] (doubled half-integer inputs), computed with
// magnitude-safe accumulation; returns 0 as soon as any factor vanishes.
inline double q_number_product2(std::span<const std::int64_t> two_zs, const QContext& ctx) {
    ScaledProduct p;
    for (auto two_z : two_zs) {
        if (two_z == 0) return 0.0;
        p.multiply(q_number2(two_z, ctx));
    }
    return p.value();
}

inline double q_number_product2(std::initializer_list<std::int64_t> two_zs, const QContext& ctx) {
    return q_number_product2(std::span<const std::int64_t>(two_zs.begin(), two_zs.size()), ctx);
}

// Real-argument overload (convenience for tests and scripts).
inline double q_number_product(std::initializer_list<double> zs, const QContext& ctx) {
    ScaledProduct p;
    for (double z : zs) {
        if (z == 0.0) return 0.0;
        p.multiply(q_number(z, ctx));
    }
    return p.value();
}

// sqrt(Pi [z_i]); the argument is expected to be nonnegative for admissible
// label data; tiny negative round-off is clamped to zero.
inline double sqrt_q_product2(std::initializer_list<std::int64_t> two_zs, const QContext& ctx) {
    double v = q_number_product2(two_zs, ctx);
    if (v < 0.0) {
        if (v > -1e-30) return 0.0;
        throw std::domain_error("sqrt_q_product2: negative product");
    }
    return std::sqrt(v);
}

// Compensated (Kahan/Neumaier) summation for reproducible series.
template <class T = double>
class KahanSum {
  public:
    void add(T x) {
        T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

  private:
    T sum_ = 0;
    T comp_ = 0;
};

}  // namespace q4s
