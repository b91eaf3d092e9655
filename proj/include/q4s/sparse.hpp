// Sparse operators decomposed into shift components keyed by a constant label
// displacement.  Every component is a weighted label translation, so its
// singular values are the absolute amplitudes; this drives the trace-norm
// upper bound and the interior-domain semantics (an expression of accumulated
// shift radius r is exact on columns at distance > r from truncation walls).
//
// BandedOperator is generic over the underlying enumerated space; it is used
// both on the irrep towers (TruncatedSpace) and on the truncated l^2(N^2)
// plane (PlaneSpace).
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "q4s/basis.hpp"

namespace q4s {

using cplx = std::complex<double>;

// Space adaptor requirements: size(), label(i) -> LabelT, index_of(LabelT),
// is_interior(LabelT, margin); nested LabelT/DispT with the operations above.

// Sparse banded operator from `dom` to `cod` (usually the same space).  Each
// component stores a dense amplitude array indexed by the source label's
// position in `dom`; the target is source-label + displacement, looked up in
// `cod` (entries whose shifted label leaves `cod` are dropped — they live on
// the truncation boundary by construction).
template <class Space>
class BandedOperator {
  public:
    using Label = typename Space::LabelT;
    using Disp = typename Space::DispT;

    const Space* dom = nullptr;
    const Space* cod = nullptr;
    std::map<Disp, std::vector<cplx>> components;
    int shift_radius = 0;  // accumulated max per-factor step (any axis)
    int shift_radius_l = 0;  // accumulated max per-factor step along l only

    BandedOperator() = default;
    explicit BandedOperator(const Space& space) : dom(&space), cod(&space) {}
    BandedOperator(const Space& dom_, const Space& cod_) : dom(&dom_), cod(&cod_) {}

    static BandedOperator identity(const Space& space) {
        BandedOperator op(space);
        auto& amp = op.component({});
        for (std::size_t i = 0; i < space.size(); ++i) amp[i] = 1.0;
        return op;
    }

    std::vector<cplx>& component(const Disp& d) {
        auto it = components.find(d);
        if (it == components.end())
            it = components.emplace(d, std::vector<cplx>(dom->size(), cplx{})).first;
        shift_radius = std::max(shift_radius, d.max_step());
        shift_radius_l = std::max(shift_radius_l, d.l_step());
        return it->second;
    }

    // Adds amplitude at the given source index; silently drops the entry when
    // the shifted label leaves `cod` (truncation boundary).
    void add_entry(std::size_t src, const Disp& d, cplx a) {
        if (a == cplx{}) return;
        if (cod->index_of(dom->label(src) + d) < 0) return;
        component(d)[src] += a;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        std::vector<cplx> w(cod->size(), cplx{});
        for (const auto& [d, amp] : components) {
            for (std::size_t i = 0; i < amp.size(); ++i) {
                if (amp[i] == cplx{}) continue;
                int t = cod->index_of(dom->label(i) + d);
                if (t >= 0) w[static_cast<std::size_t>(t)] += amp[i] * v[i];
            }
        }
        return w;
    }

    BandedOperator operator*(const BandedOperator& rhs) const {  // this ∘ rhs
        if (rhs.cod != dom)
            throw std::invalid_argument("BandedOperator: composition space mismatch");
        BandedOperator out(*rhs.dom, *cod);
        for (const auto& [d1, amp1] : components) {
            for (const auto& [d2, amp2] : rhs.components) {
                const Disp d = d1 + d2;
                std::vector<cplx>* acc = nullptr;
                for (std::size_t i = 0; i < amp2.size(); ++i) {
                    if (amp2[i] == cplx{}) continue;
                    const Label mid = rhs.dom->label(i) + d2;
                    const int mi = dom->index_of(mid);
                    if (mi < 0) continue;
                    const cplx a1 = amp1[static_cast<std::size_t>(mi)];
                    if (a1 == cplx{}) continue;
                    if (cod->index_of(mid + d1) < 0) continue;
                    if (!acc) acc = &out.component(d);
                    (*acc)[i] += a1 * amp2[i];
                }
            }
        }
        out.shift_radius = shift_radius + rhs.shift_radius;
        out.shift_radius_l = shift_radius_l + rhs.shift_radius_l;
        return out;
    }

    BandedOperator& operator+=(const BandedOperator& rhs) {
        if (rhs.dom != dom || rhs.cod != cod)
            throw std::invalid_argument("BandedOperator: sum space mismatch");
        for (const auto& [d, amp] : rhs.components) {
            auto& mine = component(d);
            for (std::size_t i = 0; i < amp.size(); ++i) mine[i] += amp[i];
        }
        shift_radius = std::max(shift_radius, rhs.shift_radius);
        shift_radius_l = std::max(shift_radius_l, rhs.shift_radius_l);
        return *this;
    }
    BandedOperator operator+(const BandedOperator& rhs) const {
        BandedOperator out = *this;
        out += rhs;
        return out;
    }
    BandedOperator operator-(const BandedOperator& rhs) const {
        BandedOperator out = *this;
        out += (-1.0) * rhs;
        return out;
    }
    friend BandedOperator operator*(cplx c, const BandedOperator& op) {
        BandedOperator out = op;
        for (auto& [d, amp] : out.components)
            for (auto& a : amp) a *= c;
        return out;
    }

    // Matrix adjoint: entry (src -> src+d, a) becomes (src+d -> src, conj a).
    BandedOperator adjoint() const {
        BandedOperator out(*cod, *dom);
        for (const auto& [d, amp] : components) {
            auto& oamp = out.component(-d);
            for (std::size_t i = 0; i < amp.size(); ++i) {
                if (amp[i] == cplx{}) continue;
                int t = cod->index_of(dom->label(i) + d);
                if (t >= 0) oamp[static_cast<std::size_t>(t)] += std::conj(amp[i]);
            }
        }
        out.shift_radius = shift_radius;
        out.shift_radius_l = shift_radius_l;
        return out;
    }

    BandedOperator conj_entries() const {
        BandedOperator out = *this;
        for (auto& [d, amp] : out.components)
            for (auto& a : amp) a = std::conj(a);
        return out;
    }

    cplx trace() const {
        KahanSum<double> re, im;
        auto it = components.find(Disp{});
        if (it != components.end())
            for (const auto& a : it->second) {
                re.add(a.real());
                im.add(a.imag());
            }
        return {re.value(), im.value()};
    }

    // Upper bound for the trace norm: each component is a weighted label
    // translation whose singular values are |amplitudes|.
    double trace_norm_upper() const {
        KahanSum<double> s;
        for (const auto& [d, amp] : components)
            for (const auto& a : amp) s.add(std::abs(a));
        return s.value();
    }

    double column_norm(std::size_t i) const {
        double s = 0.0;
        for (const auto& [d, amp] : components) s += std::norm(amp[i]);
        return std::sqrt(s);
    }

    double max_abs_entry() const {
        double m = 0.0;
        for (const auto& [d, amp] : components)
            for (const auto& a : amp) m = std::max(m, std::abs(a));
        return m;
    }

    // Margin (in the domain space's wall units) inside which this expression
    // is exact: l-radius on the irrep towers, any-axis radius elsewhere.
    int interior_margin() const { return dom->margin_for(shift_radius_l, shift_radius); }

    // Max Euclidean column norm over interior source labels; margin in the
    // space's step units.  Throws when the interior is empty.
    double interior_max_column_norm(int margin) const {
        double m = 0.0;
        bool any = false;
        for (std::size_t i = 0; i < dom->size(); ++i) {
            if (!dom->is_interior(dom->label(i), margin)) continue;
            any = true;
            m = std::max(m, column_norm(i));
        }
        if (!any)
            throw std::runtime_error(
                "interior_max_column_norm: empty interior (cutoff too small for word length)");
        return m;
    }

    // Zeroes all columns whose source label is not interior at the given
    // margin (used before norm estimation to discard boundary artifacts).
    BandedOperator restrict_interior(int margin) const {
        BandedOperator out = *this;
        for (auto& [d, amp] : out.components)
            for (std::size_t i = 0; i < amp.size(); ++i)
                if (!dom->is_interior(dom->label(i), margin)) amp[i] = cplx{};
        return out;
    }

    // Deterministic power-iteration estimate of the operator norm.
    double norm_estimate(int max_iter = 200, double rel_tol = 1e-12) const {
        if (dom->size() == 0) return 0.0;
        std::vector<cplx> v(dom->size());
        double nrm = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto r = seed_for(i);
            v[i] = cplx{1.0 + static_cast<double>(r % 1000) / 1000.0,
                        static_cast<double>((r / 1000) % 1000) / 1000.0};
            nrm += std::norm(v[i]);
        }
        nrm = std::sqrt(nrm);
        for (auto& c : v) c /= nrm;
        const BandedOperator at = adjoint();
        double lam = 0.0;
        for (int it = 0; it < max_iter; ++it) {
            std::vector<cplx> w = at.apply(apply(v));
            double n2 = 0.0;
            for (const auto& c : w) n2 += std::norm(c);
            if (n2 == 0.0) return 0.0;
            double lam_new = std::sqrt(std::sqrt(n2));  // ||T*T v|| -> ||T||^2
            double inv = 1.0 / std::sqrt(n2);
            for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] * inv;
            if (it > 0 && std::abs(lam_new - lam) <= rel_tol * std::max(1.0, lam)) {
                lam = lam_new;
                break;
            }
            lam = lam_new;
        }
        return lam;
    }

  private:
    std::size_t seed_for(std::size_t i) const {
        // deterministic per-index seed (splitmix64 of the position)
        std::uint64_t k = static_cast<std::uint64_t>(i) + 0x9E3779B97F4A7C15ull;
        k = (k ^ (k >> 30)) * 0xBF58476D1CE4E5B9ull;
        k = (k ^ (k >> 27)) * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(k ^ (k >> 31));
    }
};

using SparseOperator = BandedOperator<TruncatedSpace>;
using PlaneOperator = BandedOperator<PlaneSpace>;

// Antiunitary (or antilinear) operator of permutation-with-phase form:
// action xi |-> sum_i phase[i] * conj(xi[i]) * e_{perm[i]}.  Covers the
// real structures C and J and the equivariant antilinear T.
struct AntilinearOperator {
    const TruncatedSpace* space = nullptr;
    std::vector<int> perm;
    std::vector<cplx> phase;

    explicit AntilinearOperator(const TruncatedSpace& s)
        : space(&s), perm(s.size(), -1), phase(s.size(), cplx{}) {}

    void set(std::size_t src, int dst, cplx ph) {
        perm[src] = dst;
        phase[src] = ph;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        std::vector<cplx> w(space->size(), cplx{});
        for (std::size_t i = 0; i < v.size(); ++i)
            if (perm[i] >= 0) w[static_cast<std::size_t>(perm[i])] += phase[i] * std::conj(v[i]);
        return w;
    }

    // For an invertible antilinear U with U|i> = phase_i |perm(i)>, the
    // sandwich U b U^{-1} of a shift operator is again a shift operator:
    // the b-entry (src -> src+d, a) contributes the entry
    // (perm(src) -> perm(src+d), conj(a) * phase_{src+d} / phase_src).
    SparseOperator sandwich(const SparseOperator& b) const {
        if (b.dom != space || b.cod != space)
            throw std::invalid_argument("AntilinearOperator::sandwich: space mismatch");
        SparseOperator out(*space);
        for (const auto& [d, amp] : b.components) {
            for (std::size_t i = 0; i < amp.size(); ++i) {
                if (amp[i] == cplx{}) continue;
                int t = space->index_of(space->label(i) + d);
                if (t < 0) continue;
                int psrc = perm[i];
                int pdst = perm[static_cast<std::size_t>(t)];
                if (psrc < 0 || pdst < 0) continue;
                LabelDisp nd = displacement(space->label(psrc), space->label(pdst));
                out.component(nd)[static_cast<std::size_t>(psrc)] +=
                    std::conj(amp[i]) * phase[static_cast<std::size_t>(t)] / phase[i];
            }
        }
        out.shift_radius = b.shift_radius;
        out.shift_radius_l = b.shift_radius_l;
        return out;
    }
};

// Residual of an operator identity: max interior column norm of LHS - RHS,
// with the interior margin taken from the accumulated shift radii.
template <class Space>
double relation_residual(const BandedOperator<Space>& lhs, const BandedOperator<Space>& rhs) {
    BandedOperator<Space> diff = lhs - rhs;
    return diff.interior_max_column_norm(diff.interior_margin());
}

}  // namespace q4s
