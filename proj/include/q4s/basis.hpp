// Basis labels (l, m1, m2, j, chirality) with half-integer entries stored as
// doubled integers, their admissibility constraints for the three label
// families (scalar tower l in N, spinor tower l in N+1/2, and the extended
// "hat" label set), and enumerated truncated Hilbert spaces with canonical
// ordering and bidirectional index maps.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "q4s/qnum.hpp"

namespace q4s {

enum class Family { scalar, spinor, hat };

// chirality: 0 = none (scalar family), +1 / -1 for the two spinor components.
struct BasisLabel {
    int two_l = 0;
    int two_m1 = 0;
    int two_m2 = 0;
    int two_j = 0;
    int chi = 0;

    bool operator==(const BasisLabel&) const = default;
};

// Canonical ordering: (two_l, chirality, two_j, two_m1, two_m2) ascending.
inline bool canonical_less(const BasisLabel& a, const BasisLabel& b) {
    if (a.two_l != b.two_l) return a.two_l < b.two_l;
    if (a.chi != b.chi) return a.chi < b.chi;
    if (a.two_j != b.two_j) return a.two_j < b.two_j;
    if (a.two_m1 != b.two_m1) return a.two_m1 < b.two_m1;
    return a.two_m2 < b.two_m2;
}

struct LabelHash {
    std::size_t operator()(const BasisLabel& x) const {
        // small fields; pack into one 64-bit word
        auto u = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint32_t>(v) & 0xFFF); };
        std::uint64_t k = u(x.two_l) | (u(x.two_m1) << 12) | (u(x.two_m2) << 24) |
                          (u(x.two_j) << 36) | (u(x.chi) << 48);
        // splitmix64 finalizer
        k += 0x9E3779B97F4A7C15ull;
        k = (k ^ (k >> 30)) * 0xBF58476D1CE4E5B9ull;
        k = (k ^ (k >> 27)) * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(k ^ (k >> 31));
    }
};

inline bool admissible(const BasisLabel& x, Family fam) {
    const int al = x.two_l, am1 = std::abs(x.two_m1), am2 = std::abs(x.two_m2), aj = x.two_j;
    switch (fam) {
        case Family::scalar:
            // l in N, 0 <= j <= l, j - |m1| in N, l - j - |m2| in 2N
            if (x.chi != 0) return false;
            if (al < 0 || al % 2 != 0) return false;
            if (aj < 0 || aj > al || aj % 2 != 0) return false;
            if (aj - am1 < 0 || (aj - am1) % 2 != 0) return false;
            {
                int r = al - aj - am2;  // = 2(l - j - |m2|)
                return r >= 0 && r % 4 == 0;
            }
        case Family::spinor:
            // l in N+1/2, 1/2 <= j <= l, j - |m1| in N, l + 1/2 - j - |m2| in N
            if (x.chi != 1 && x.chi != -1) return false;
            if (al < 1 || al % 2 == 0) return false;
            if (aj < 1 || aj > al || aj % 2 == 0) return false;
            if (aj - am1 < 0 || (aj - am1) % 2 != 0) return false;
            {
                int r = al + 1 - aj - am2;  // = 2(l + 1/2 - j - |m2|)
                return r >= 0 && r % 2 == 0;
            }
        case Family::hat:
            // l in Z/2, l + j in Z, j + m1 in N, l + 1/2 - j + m2 in N
            if (x.chi != 1 && x.chi != -1) return false;
            if ((al + aj) % 2 != 0) return false;
            if (aj + x.two_m1 < 0 || (aj + x.two_m1) % 2 != 0) return false;
            {
                int r = al + 1 - aj + x.two_m2;  // = 2(l + 1/2 - j + m2)
                return r >= 0 && r % 2 == 0;
            }
    }
    return false;
}

// Doubled epsilon in {-1, 0, +1}: the unique value with l + eps - j - m2 in 2N
// for admissible scalar/spinor labels; 0 for integer l, otherwise the sign
// eps = (1/2)(-1)^{l + 1/2 - j - m2}.  Hat labels use the same sign formula.
inline int two_epsilon(const BasisLabel& x, Family fam) {
    if (fam == Family::scalar) return 0;
    int e = x.two_l + 1 - x.two_j - x.two_m2;  // = 2(l + 1/2 - j - m2), even
    if (e % 2 != 0) throw std::logic_error("two_epsilon: non-integer sign exponent");
    return ((e / 2) % 2 == 0) ? +1 : -1;
}

// dim V_l = (2/3)(l+5/2)(l+3/2)(l+1/2) for the spinor tower (half-integer l).
inline std::int64_t dim_spinor_level(int two_l) {
    if (two_l < 1 || two_l % 2 == 0)
        throw std::invalid_argument("dim_spinor_level: requires half-odd-integer l >= 1/2");
    std::int64_t a = two_l + 5, b = two_l + 3, c = two_l + 1;  // doubled factors
    // (2/3) * (a/2)(b/2)(c/2) = a*b*c/12
    std::int64_t num = a * b * c;
    if (num % 12 != 0) throw std::logic_error("dim_spinor_level: non-integer result");
    return num / 12;
}

// Constant label displacement of a shift component on the irrep towers.
struct LabelDisp {
    int dl2 = 0, dm1_2 = 0, dm2_2 = 0, dj2 = 0, dchi = 0;

    bool operator==(const LabelDisp&) const = default;
    auto operator<=>(const LabelDisp&) const = default;
    LabelDisp operator+(const LabelDisp& o) const {
        return {dl2 + o.dl2, dm1_2 + o.dm1_2, dm2_2 + o.dm2_2, dj2 + o.dj2, dchi + o.dchi};
    }
    LabelDisp operator-() const { return {-dl2, -dm1_2, -dm2_2, -dj2, -dchi}; }
    int l_step() const { return std::abs(dl2); }
    // Largest doubled coordinate step; used for interior margins.
    int max_step() const {
        int m = std::abs(dl2);
        m = std::max(m, std::abs(dm1_2));
        m = std::max(m, std::abs(dm2_2));
        m = std::max(m, std::abs(dj2));
        return m;
    }
};

inline BasisLabel operator+(const BasisLabel& x, const LabelDisp& d) {
    return {x.two_l + d.dl2, x.two_m1 + d.dm1_2, x.two_m2 + d.dm2_2, x.two_j + d.dj2,
            x.chi + d.dchi};
}

inline LabelDisp displacement(const BasisLabel& from, const BasisLabel& to) {
    return {to.two_l - from.two_l, to.two_m1 - from.two_m1, to.two_m2 - from.two_m2,
            to.two_j - from.two_j, to.chi - from.chi};
}

// Enumerated, canonically ordered basis of a truncated direct sum of levels.
class TruncatedSpace {
  public:
    using LabelT = BasisLabel;
    using DispT = LabelDisp;

    Family family;
    int two_L;        // upper cutoff on 2l
    int slack = 0;    // hat family: margin added around the physical label set

    static TruncatedSpace make(Family fam, int two_L) {
        if (fam == Family::hat)
            throw std::invalid_argument("TruncatedSpace::make: use make_hat for the hat family");
        if (two_L < 0) throw std::invalid_argument("TruncatedSpace: negative cutoff");
        if (fam == Family::scalar && two_L % 2 != 0)
            throw std::invalid_argument("TruncatedSpace: scalar cutoff must be an integer");
        if (fam == Family::spinor && two_L % 2 == 0)
            throw std::invalid_argument("TruncatedSpace: spinor cutoff must be a half-odd-integer");
        TruncatedSpace s;
        s.family = fam;
        s.two_L = two_L;
        const bool spinor = (fam == Family::spinor);
        for (int tl = spinor ? 1 : 0; tl <= two_L; tl += 2) {
            for (int chi : spinor ? std::vector<int>{-1, +1} : std::vector<int>{0}) {
                for (int tj = spinor ? 1 : 0; tj <= tl; tj += 2) {
                    for (int tm1 = -tj; tm1 <= tj; tm1 += 2) {
                        int span = spinor ? tl + 1 - tj : tl - tj;  // 2*max|m2|
                        int step = spinor ? 2 : 4;
                        for (int tm2 = -span; tm2 <= span; tm2 += step) {
                            BasisLabel x{tl, tm1, tm2, tj, chi};
                            if (admissible(x, fam)) s.labels_.push_back(x);
                        }
                    }
                }
            }
        }
        s.finish();
        return s;
    }

    // Hat label set truncated around the physical (spinor) label set at
    // cutoff 2L, with `slack` extra whole steps on each artificial wall so
    // that compressed products of bounded word length are exact on the
    // physical interior.
    static TruncatedSpace make_hat(int two_L, int slack) {
        if (two_L % 2 == 0 || two_L < 1)
            throw std::invalid_argument("TruncatedSpace::make_hat: spinor-style cutoff required");
        if (slack < 1) throw std::invalid_argument("TruncatedSpace::make_hat: slack >= 1 required");
        TruncatedSpace s;
        s.family = Family::hat;
        s.two_L = two_L + 2 * slack;
        s.slack = slack;
        const int w = 2 * slack;
        for (int tl = -w; tl <= s.two_L; ++tl) {
            for (int chi : {-1, +1}) {
                for (int tj = -w; tj <= tl + w; ++tj) {
                    if ((tl + tj) % 2 != 0) continue;
                    for (int tm1 = -tj; tm1 <= tj + w; tm1 += 2) {
                        for (int tm2 = tj - tl - 1; tm2 <= tl + 1 - tj + w; tm2 += 2) {
                            BasisLabel x{tl, tm1, tm2, tj, chi};
                            if (admissible(x, Family::hat)) s.labels_.push_back(x);
                        }
                    }
                }
            }
        }
        s.finish();
        return s;
    }

    std::size_t size() const { return labels_.size(); }
    const BasisLabel& label(std::size_t i) const { return labels_[i]; }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    // -1 if absent.
    int index_of(const BasisLabel& x) const {
        auto it = index_.find(x);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const BasisLabel& x) const { return index_.find(x) != index_.end(); }

    // True when the label sits at doubled distance >= margin2 from every
    // *artificial* truncation wall (natural admissibility walls are exact and
    // do not shrink the interior).
    // Wall-margin selection: only the l-cutoff is artificial on the scalar
    // and spinor towers; the hat set is capped on every axis.
    int margin_for(int radius_l, int radius_any) const {
        return family == Family::hat ? radius_any : radius_l;
    }

    bool is_interior(const BasisLabel& x, int margin2) const {
        switch (family) {
            case Family::scalar:
            case Family::spinor:
                return x.two_l <= two_L - margin2;
            case Family::hat: {
                const int w = 2 * slack;
                if (x.two_l > two_L - margin2 || x.two_l < -w + margin2) return false;
                if (x.two_j > x.two_l + w - margin2 || x.two_j < -w + margin2) return false;
                if (x.two_m1 > x.two_j + w - margin2) return false;
                if (x.two_m2 > x.two_l + 1 - x.two_j + w - margin2) return false;
                return true;
            }
        }
        return false;
    }

  private:
    std::vector<BasisLabel> labels_;
    std::unordered_map<BasisLabel, int, LabelHash> index_;

    void finish() {
        std::sort(labels_.begin(), labels_.end(), canonical_less);
        labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
        index_.reserve(labels_.size() * 2);
        for (std::size_t i = 0; i < labels_.size(); ++i)
            index_.emplace(labels_[i], static_cast<int>(i));
    }
};

struct PlaneLabel {
    int k1 = 0, k2 = 0;
    bool operator==(const PlaneLabel&) const = default;
};
struct PlaneDisp {
    int dk1 = 0, dk2 = 0;
    bool operator==(const PlaneDisp&) const = default;
    auto operator<=>(const PlaneDisp&) const = default;
    PlaneDisp operator+(const PlaneDisp& o) const { return {dk1 + o.dk1, dk2 + o.dk2}; }
    PlaneDisp operator-() const { return {-dk1, -dk2}; }
    int l_step() const { return max_step(); }
    int max_step() const { return std::max(std::abs(dk1), std::abs(dk2)); }
};
inline PlaneLabel operator+(const PlaneLabel& x, const PlaneDisp& d) {
    return {x.k1 + d.dk1, x.k2 + d.dk2};
}

// Truncated l^2(N^2) basis for the simple representations: labels (k1, k2)
// with 0 <= k1, k2 <= K, row-major indexing.
class PlaneSpace {
  public:
    using LabelT = PlaneLabel;
    using DispT = PlaneDisp;

    explicit PlaneSpace(int K) : K_(K) {
        if (K < 1) throw std::invalid_argument("PlaneSpace: K >= 1 required");
    }
    int K() const { return K_; }
    std::size_t size() const {
        return static_cast<std::size_t>(K_ + 1) * static_cast<std::size_t>(K_ + 1);
    }
    int index_of(const PlaneLabel& x) const {
        if (x.k1 < 0 || x.k2 < 0 || x.k1 > K_ || x.k2 > K_) return -1;
        return x.k1 * (K_ + 1) + x.k2;
    }
    PlaneLabel label(std::size_t i) const {
        return {static_cast<int>(i) / (K_ + 1), static_cast<int>(i) % (K_ + 1)};
    }
    int margin_for(int, int radius_any) const { return radius_any; }

    bool is_interior(const PlaneLabel& x, int margin) const {
        return x.k1 <= K_ - margin && x.k2 <= K_ - margin;
    }

  private:
    int K_;
};

// Parse a half-integer given as "25/2" or as a decimal like "12.5"; returns
// the doubled value.
inline int parse_half_integer(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("not a half-integer: " + text); };
    try {
        if (auto pos = text.find('/'); pos != std::string::npos) {
            if (text.substr(pos + 1) != "2") bad();
            return std::stoi(text.substr(0, pos));
        }
        double v = std::stod(text);
        double two = v * 2.0;
        if (two != std::round(two)) bad();
        return static_cast<int>(std::llround(two));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        bad();
    }
    return 0;
}

}  // namespace q4s
