// The isospectral Dirac operator on the chirality-doubled tower, the
// derivation delta(T) = [|D|, T] acting exactly on shift components, operator
// zeta traces with certified tails, and residue extraction at s = 3, 4 by
// exact-asymptotics fitting of level sums (the level sums of every weight in
// scope are a cubic polynomial in the level plus an exponentially small
// remainder, so four levels determine the polynomial and a fifth certifies it).
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "q4s/basis.hpp"
#include "q4s/qnum.hpp"
#include "q4s/sparse.hpp"
#include "q4s/sphere.hpp"

namespace q4s {

// D |l,m1,m2;j>_{+-} = (l + 3/2) |l,m1,m2;j>_{-+}
inline SparseOperator dirac_D(const TruncatedSpace& sp) {
    if (sp.family != Family::spinor)
        throw std::invalid_argument("dirac_D: spinor-family space required");
    SparseOperator op(sp);
    for (std::size_t i = 0; i < sp.size(); ++i)
        op.add_entry(i, LabelDisp{0, 0, 0, 0, -2 * sp.label(i).chi},
                     0.5 * (sp.label(i).two_l + 3));
    return op;
}

// |D| = diagonal l + 3/2.
inline SparseOperator abs_D(const TruncatedSpace& sp) {
    SparseOperator op(sp);
    auto& amp = op.component({});
    for (std::size_t i = 0; i < sp.size(); ++i) amp[i] = 0.5 * (sp.label(i).two_l + 3);
    return op;
}

// delta(T) = [|D|, T]: a component shifting l by k is an eigenvector of delta
// with eigenvalue k, so the commutator is computed exactly with no floating
// subtraction.
inline SparseOperator delta_commutator(const SparseOperator& a) {
    SparseOperator out = a;
    for (auto& [d, amp] : out.components) {
        const double k = 0.5 * d.dl2;
        for (auto& c : amp) c *= k;
    }
    return out;
}

// --- zeta traces ------------------------------------------------------------

// Direct-summation Riemann zeta with a certified bracket: the midpoint
// integral completes the tail, and the midpoint-rule error per term is at
// most s(s+1) n^{-s-2} / 24.
struct ZetaOracle {
    double value = 0.0;
    double error_bound = 0.0;
};

inline ZetaOracle riemann_zeta_oracle(double s, long n_terms = 100000) {
    if (!(s > 1.0)) throw std::invalid_argument("riemann_zeta_oracle: s > 1 required");
    if (n_terms < 10) throw std::invalid_argument("riemann_zeta_oracle: too few terms");
    KahanSum<double> sum;
    for (long n = 1; n <= n_terms; ++n) sum.add(std::pow(static_cast<double>(n), -s));
    const double nd = static_cast<double>(n_terms);
    ZetaOracle z;
    z.value = sum.value() + std::pow(nd + 0.5, 1.0 - s) / (s - 1.0);
    z.error_bound = s * std::pow(nd, -s - 1.0) / 24.0;
    return z;
}

// Tr(|D|^{-s}) for Re s > 4: sum of (4/3)(n^3 - n) n^{-s} over the eigenvalue
// levels n = l + 3/2 up to n_max, with the integral tail bound
// (4/3) n_max^{4 - Re s} / (Re s - 4).
struct ZetaTrace {
    std::complex<double> value;
    double tail_bound = 0.0;
};

inline ZetaTrace zeta_trace(std::complex<double> s, long n_max) {
    if (!(s.real() > 4.0)) throw std::invalid_argument("zeta_trace: Re s > 4 required");
    if (n_max < 2) throw std::invalid_argument("zeta_trace: n_max >= 2 required");
    KahanSum<double> re, im;
    for (long n = 2; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        const std::complex<double> t =
            (4.0 / 3.0) * (nd * nd * nd - nd) * std::exp(-s * std::log(nd));
        re.add(t.real());
        im.add(t.imag());
    }
    ZetaTrace z;
    z.value = {re.value(), im.value()};
    z.tail_bound = (4.0 / 3.0) * std::pow(static_cast<double>(n_max), 4.0 - s.real()) /
                   (s.real() - 4.0);
    return z;
}

// --- diagonal weights and level sums ----------------------------------------

struct DiagonalWeight {
    std::string name;
    std::function<double(const BasisLabel&, const QContext&)> eval;
    // True when eval ignores m1; level sums then use one m1 representative
    // per (j, m2, chi) and weight it by the orbit size 2j + 1.
    bool m1_independent = false;
};

// Visit every admissible spinor label (both chiralities) at fixed level
// l = n - 3/2.
template <class Fn>
void for_each_label_at_level(int n, Fn&& fn) {
    const int tl = 2 * n - 3;
    for (int chi : {-1, +1})
        for (int tj = 1; tj <= tl; tj += 2)
            for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
                for (int tm2 = -(tl + 1 - tj); tm2 <= tl + 1 - tj; tm2 += 2)
                    fn(BasisLabel{tl, tm1, tm2, tj, chi});
}

// g(n) = sum of the weight over all labels at level l = n - 3/2.
inline double level_sum(const DiagonalWeight& w, int n, const QContext& ctx) {
    if (n < 2) throw std::invalid_argument("level_sum: n >= 2 required");
    KahanSum<long double> s;
    if (w.m1_independent) {
        const int tl = 2 * n - 3;
        for (int chi : {-1, +1})
            for (int tj = 1; tj <= tl; tj += 2)
                for (int tm2 = -(tl + 1 - tj); tm2 <= tl + 1 - tj; tm2 += 2)
                    s.add(static_cast<long double>(tj + 1) *
                          w.eval(BasisLabel{tl, -tj, tm2, tj, chi}, ctx));
    } else {
        for_each_label_at_level(n, [&](const BasisLabel& x) {
            s.add(static_cast<long double>(w.eval(x, ctx)));
        });
    }
    return static_cast<double>(s.value());
}

// --- residue extraction -------------------------------------------------------

// Cubic asymptotics of the level sums: g(n) = a3 n^3 + a2 n^2 + a1 n + a0
// plus an exponentially small remainder.  The zeta function
// zeta_w(s) = sum g(n) n^{-s} then extends meromorphically with
// Res_{s=4} = a3 and Res_{s=3} = a2 (a1, a0 are diagnostics).
struct ResidueFit {
    double a3 = 0, a2 = 0, a1 = 0, a0 = 0;
    int fit_start = 0;       // levels used: fit_start .. fit_start + 3
    double certificate = 0;  // max coefficient change against the previous fit level
    double certificate_scale = 0;  // max |coefficient|
};

namespace detail {
// Cubic through the level sums at N, N+h, N+2h, N+3h.  The wide spacing
// h ~ N/4 matters: round-off in the level sums enters the fitted
// coefficients through factors N^k / h^3, which unit spacing amplifies by
// N^3 but proportional spacing keeps O(1).
inline ResidueFit cubic_through_levels(const DiagonalWeight& w, int N, int h,
                                       const QContext& ctx) {
    long double g[4];
    for (int i = 0; i < 4; ++i) g[i] = level_sum(w, N + i * h, ctx);
    // Newton forward differences in the node variable t = (n - N)/h
    const long double c0 = g[0];
    const long double c1 = g[1] - g[0];
    const long double c2 = g[2] - 2 * g[1] + g[0];
    const long double c3 = g[3] - 3 * g[2] + 3 * g[1] - g[0];
    // monomials in t
    const long double b3 = c3 / 6;
    const long double b2 = c2 / 2 - c3 / 2;
    const long double b1 = c1 - c2 / 2 + c3 / 3;
    const long double b0 = c0;
    // monomials in u = n - N, then in n
    const long double hl = h;
    const long double u3 = b3 / (hl * hl * hl);
    const long double u2 = b2 / (hl * hl);
    const long double u1 = b1 / hl;
    const long double Nl = N;
    ResidueFit r;
    r.a3 = static_cast<double>(u3);
    r.a2 = static_cast<double>(u2 - 3 * Nl * u3);
    r.a1 = static_cast<double>(u1 - 2 * Nl * u2 + 3 * Nl * Nl * u3);
    r.a0 = static_cast<double>(b0 - Nl * u1 + Nl * Nl * u2 - Nl * Nl * Nl * u3);
    r.fit_start = N;
    return r;
}
}  // namespace detail

// A cubic interpolated through four level sums absorbs part of the remainder,
// so a held-out-level check is far weaker than it looks; coefficient
// stability between two disjoint fit windows is the honest certificate.  The
// remainder shrinks at least geometrically in the start level, so agreement
// of two fits within coef_tol bounds the error of the later fit by a small
// multiple of coef_tol.
// When certify_top_only is set, only a3 enters the stability certificate:
// the lower coefficients converge more slowly (their remainder carries extra
// powers of the level) and a caller interested in the top residue alone
// should not pay for them.
inline ResidueFit residue_fit(const DiagonalWeight& w, const QContext& ctx,
                              double coef_tol = 2e-9, bool certify_top_only = false) {
    ResidueFit prev;
    bool have_prev = false;
    std::string diag;
    for (int N : {8, 12, 16, 24, 32, 48, 64, 96, 128, 160, 192}) {
        ResidueFit r = detail::cubic_through_levels(w, N, std::max(2, N / 4), ctx);
        r.certificate_scale = std::max({std::abs(r.a3), std::abs(r.a2), std::abs(r.a1),
                                        std::abs(r.a0)});
        if (have_prev) {
            r.certificate =
                certify_top_only
                    ? std::abs(r.a3 - prev.a3)
                    : std::max({std::abs(r.a3 - prev.a3), std::abs(r.a2 - prev.a2),
                                std::abs(r.a1 - prev.a1), std::abs(r.a0 - prev.a0)});
            if (r.certificate <= coef_tol) return r;
            diag += " N=" + std::to_string(N) + ":agree=" + std::to_string(r.certificate);
        }
        prev = r;
        have_prev = true;
    }
    throw std::runtime_error("residue_fit: coefficients did not stabilize (" + w.name + ");" +
                             diag);
}

// --- the shipped weights ------------------------------------------------------

inline DiagonalWeight weight_one() {
    return {"one", [](const BasisLabel&, const QContext&) { return 1.0; }, true};
}

// q^{j + 1/2} on one chirality component: the diagonal
// compact-but-not-trace-class reference operator, normalized so that the
// level sum is exactly 4 sum_{k=1}^{n-1} k (n-k) q^k and the zeta function
// is 4q/(1-q)^2 (zeta(s-1) - (1+q)/(1-q) zeta(s)) + holomorphic.
inline DiagonalWeight weight_Lq() {
    return {"Lq",
            [](const BasisLabel& x, const QContext& c) {
                return x.chi == 1 ? c.pow_q2(x.two_j + 1) : 0.0;
            },
            true};
}

// Diagonal of the compressed basis element built from the auxiliary-space
// diagonal generators: value q^{2k(j+m1)} * q^{n(l-j+m2-eps)} on each
// physical label (zero weight is impossible: the exponents are nonnegative
// integers on the admissible set).
inline DiagonalWeight weight_compressed_diagonal(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("weight_compressed_diagonal: k, n >= 0");
    return {"compressed_k" + std::to_string(k) + "_n" + std::to_string(n),
            [k, n](const BasisLabel& x, const QContext& c) {
                const int te = two_epsilon(x, Family::spinor);
                // doubled exponents: 2k(j+m1) -> k(two_j+two_m1); n(l-j+m2-eps)
                const std::int64_t e = static_cast<std::int64_t>(k) * (x.two_j + x.two_m1) * 2 +
                                       static_cast<std::int64_t>(n) *
                                           (x.two_l - x.two_j + x.two_m2 - te);
                return c.pow_q2(e);
            }};
}

// --- words in the generators and their diagonal weights ------------------------

struct WordFactor {
    XGen g;
    bool star = false;
};

namespace detail {
struct CanonicalLess {
    bool operator()(const BasisLabel& a, const BasisLabel& b) const {
        return canonical_less(a, b);
    }
};
using LocalVec = std::map<BasisLabel, double, CanonicalLess>;

// Apply one generator (or its adjoint) to a finitely supported vector using
// only the label-local matrix elements; no global truncation is involved, so
// the result is exact.
inline LocalVec apply_local(const WordFactor& f, const LocalVec& v, const QContext& ctx) {
    LocalVec out;
    for (const auto& [lab, c] : v) {
        if (!f.star) {
            spinor_label_entries(f.g, lab, ctx,
                                 [&](LabelDisp d, double a) { out[lab + d] += a * c; });
        } else {
            // adjoint: sources mu with an entry mu -> lab contribute conj(a)
            const int dm1 = (f.g == XGen::x1) ? +2 : 0;
            for (int dl = -2; dl <= 2; dl += 2) {
                for (int dj = -2; dj <= 2; dj += 2) {
                    const LabelDisp d{dl, dm1, (f.g == XGen::x2) ? +2 : 0,
                                      (f.g == XGen::x2) ? 0 : dj, 0};
                    const BasisLabel mu = lab + (-d);
                    if (!admissible(mu, Family::spinor)) continue;
                    spinor_label_entries(f.g, mu, ctx, [&](LabelDisp dd, double a) {
                        if (dd == d) out[mu] += a * c;
                    });
                    if (f.g == XGen::x2) break;  // x2 has no j shift; dj loop collapses
                }
            }
        }
    }
    return out;
}
// Enumerate <dst| f |src> as (dst, amplitude) pairs for one factor.
template <class Cb>
void entries_from(const WordFactor& f, const BasisLabel& src, const QContext& ctx, Cb&& cb) {
    if (!f.star) {
        spinor_label_entries(f.g, src, ctx, [&](LabelDisp d, double a) { cb(src + d, a); });
        return;
    }
    // adjoint: sources mu with an entry mu -> src contribute the same amplitude
    const int dm1 = (f.g == XGen::x1) ? +2 : 0;
    for (int dl = -2; dl <= 2; dl += 2) {
        for (int dj = -2; dj <= 2; dj += 2) {
            const LabelDisp d{dl, dm1, (f.g == XGen::x2) ? +2 : 0,
                              (f.g == XGen::x2) ? 0 : dj, 0};
            const BasisLabel mu = src + (-d);
            if (admissible(mu, Family::spinor)) {
                spinor_label_entries(f.g, mu, ctx, [&](LabelDisp dd, double a) {
                    if (dd == d) cb(mu, a);
                });
            }
            if (f.g == XGen::x2) break;  // x2 has no j shift; dj loop collapses
        }
    }
}
}  // namespace detail

// <lab| word |lab>, with the word applied right-to-left.
inline double word_diagonal_entry(const std::vector<WordFactor>& word, const BasisLabel& lab,
                                  const QContext& ctx) {
    if (word.size() == 2) {
        // allocation-free fast path: <lab| f1 f2 |lab> = sum_mu <lab|f1|mu><mu|f2|lab>
        double s = 0.0;
        detail::entries_from(word[1], lab, ctx, [&](const BasisLabel& mu, double a2) {
            detail::entries_from(word[0], mu, ctx, [&](const BasisLabel& dst, double a1) {
                if (dst == lab) s += a1 * a2;
            });
        });
        return s;
    }
    detail::LocalVec v;
    v[lab] = 1.0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = detail::apply_local(*it, v, ctx);
    auto found = v.find(lab);
    return found == v.end() ? 0.0 : found->second;
}

inline DiagonalWeight weight_word(const std::vector<WordFactor>& word, const std::string& name) {
    // x2 and x2* never touch (j, m1) and their amplitudes ignore m1
    bool only_x2 = true;
    for (const auto& f : word) only_x2 = only_x2 && (f.g == XGen::x2);
    return {name,
            [word](const BasisLabel& x, const QContext& c) {
                return word_diagonal_entry(word, x, c);
            },
            only_x2};
}

// --- top residue ----------------------------------------------------------------

// The classical-points symbol kills x0 and x1 and sends x2 to the unit
// circle generator, so the circle integral of a word is 2 pi exactly when the
// word avoids x0, x1 and balances x2 against x2*; the top residue is then
// (2 / 3 pi) * (2 pi) = 4/3.
struct TopResidue {
    double fitted = 0.0;     // a3 from the residue fit of the word's diagonal
    double classical = 0.0;  // (2/3 pi) * circle integral of the symbol
};

inline TopResidue top_residue(const std::vector<WordFactor>& word, const QContext& ctx) {
    TopResidue r;
    int winding = 0;
    bool killed = false;
    for (const auto& f : word) {
        if (f.g != XGen::x2) killed = true;
        winding += f.star ? -1 : +1;
    }
    r.classical = (!killed && winding == 0) ? 4.0 / 3.0 : 0.0;
    std::string name = "word";
    for (const auto& f : word) name += std::string("_") + to_string(f.g) + (f.star ? "s" : "");
    r.fitted = residue_fit(weight_word(word, name), ctx, 1e-7, /*certify_top_only=*/true).a3;
    return r;
}

}  // namespace q4s
