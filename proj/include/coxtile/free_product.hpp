#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coxtile/homology.hpp"

namespace coxtile {

// Declared homology profile of the abstract chamber X, e.g. the torus
// profile (1,2,1). The flag records whether the degree-2 generator is
// representable by a smoothly embedded torus (the X' side of the pair).
struct ChamberHomologyProfile {
    HomologyProfile profile;
    bool torus_generator = false;

    static ChamberHomologyProfile torus(bool smooth_torus_generator) {
        ChamberHomologyProfile p;
        p.profile = HomologyProfile::from_ranks({1, 2, 1});
        p.torus_generator = smooth_torus_generator;
        return p;
    }
    static ChamberHomologyProfile contractible() {
        ChamberHomologyProfile p;
        p.profile = HomologyProfile::from_ranks({1});
        return p;
    }
};

// H_*(P_n) for P_n a boundary sum of n copies of the chamber: degree 0
// stays rank 1, every positive degree picks up n copies of the chamber
// group.
inline HomologyProfile truncation_homology(const ChamberHomologyProfile& chamber, long long n) {
    if (n < 1) throw std::invalid_argument("truncation_homology: n must be >= 1");
    if (chamber.profile.groups.empty() || chamber.profile.groups[0].rank != 1)
        throw std::invalid_argument("truncation_homology: chamber must be connected");
    HomologyProfile out;
    out.groups.push_back({1, {}});
    for (std::size_t k = 1; k < chamber.profile.groups.size(); ++k) {
        HomologyProfile::Group g;
        g.rank = n * chamber.profile.groups[k].rank;
        for (long long i = 0; i < n; ++i)
            for (long long t : chamber.profile.groups[k].torsion) g.torsion.push_back(t);
        std::sort(g.torsion.begin(), g.torsion.end());
        out.groups.push_back(std::move(g));
    }
    return out;
}

// --- free product of Z^2 factors ---------------------------------------

// pi_1 of the infinite union: a free product with one Z^2 factor per
// group element, factors labeled by W normal forms.
struct Syllable {
    std::string factor;
    long long a = 0, b = 0;

    bool zero() const { return a == 0 && b == 0; }
    bool operator==(const Syllable& o) const { return factor == o.factor && a == o.a && b == o.b; }
};

struct FreeProductWord {
    std::vector<Syllable> syllables;

    bool operator==(const FreeProductWord& o) const { return syllables == o.syllables; }
    bool operator!=(const FreeProductWord& o) const { return !(*this == o); }
    bool identity() const { return syllables.empty(); }
};

// Merge same-factor neighbors, drop zero syllables.
inline FreeProductWord fp_normal_form(const FreeProductWord& w) {
    FreeProductWord out;
    for (const auto& s : w.syllables) {
        if (s.zero()) continue;
        if (!out.syllables.empty() && out.syllables.back().factor == s.factor) {
            out.syllables.back().a += s.a;
            out.syllables.back().b += s.b;
            if (out.syllables.back().zero()) out.syllables.pop_back();
        } else {
            out.syllables.push_back(s);
        }
    }
    return out;
}

inline FreeProductWord fp_multiply(const FreeProductWord& x, const FreeProductWord& y) {
    FreeProductWord w;
    w.syllables = x.syllables;
    w.syllables.insert(w.syllables.end(), y.syllables.begin(), y.syllables.end());
    return fp_normal_form(w);
}

inline FreeProductWord fp_inverse(const FreeProductWord& x) {
    FreeProductWord w;
    for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it)
        w.syllables.push_back({it->factor, -it->a, -it->b});
    return fp_normal_form(w);
}

inline bool fp_commute(const FreeProductWord& x, const FreeProductWord& y) {
    return fp_multiply(x, y) == fp_multiply(y, x);
}

inline FreeProductWord fp_cyclic_reduce(FreeProductWord w) {
    w = fp_normal_form(w);
    while (w.syllables.size() >= 2 && w.syllables.front().factor == w.syllables.back().factor) {
        Syllable s = w.syllables.back();
        w.syllables.pop_back();
        w.syllables.front().a += s.a;
        w.syllables.front().b += s.b;
        if (w.syllables.front().zero()) w.syllables.erase(w.syllables.begin());
        w = fp_normal_form(w);
    }
    return w;
}

// The unique factor this element conjugates into, when its cyclic
// reduction is a single syllable; nullopt otherwise (including for the
// identity).
inline std::optional<std::string> fp_conjugate_into_factor(const FreeProductWord& w) {
    FreeProductWord c = fp_cyclic_reduce(w);
    if (c.syllables.size() == 1) return c.syllables[0].factor;
    return std::nullopt;
}

// --- randomized commuting-pair law -------------------------------------

struct Z2FactorReport {
    long long commuting_pairs = 0;
    long long commuting_violations = 0;  // pairs failing commute/common-factor
    long long cross_pairs = 0;
    long long cross_violations = 0;  // cross-factor pairs that commute
    std::uint64_t seed = 0;
    bool ok() const { return commuting_violations == 0 && cross_violations == 0; }
};

// Commuting elements built by conjugating one factor must commute and
// conjugate into that same factor; elements rooted in distinct factors
// must not commute.
inline Z2FactorReport z2_in_factor_property(const std::vector<std::string>& factors,
                                            long long samples, std::uint64_t seed) {
    if (factors.size() < 2)
        throw std::invalid_argument("z2_in_factor_property: need at least 2 factors");
    Z2FactorReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    auto rand_pair = [&](long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return std::make_pair(d(rng), d(rng));
    };
    auto rand_nonzero = [&]() {
        for (;;) {
            auto [a, b] = rand_pair(-3, 3);
            if (a != 0 || b != 0) return std::make_pair(a, b);
        }
    };
    std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
    auto rand_word = [&](int len) {
        FreeProductWord w;
        for (int i = 0; i < len; ++i) {
            auto [a, b] = rand_nonzero();
            w.syllables.push_back({factors[pick(rng)], a, b});
        }
        return fp_normal_form(w);
    };

    std::uniform_int_distribution<int> len(0, 4);
    for (long long i = 0; i < samples; ++i) {
        // conjugated commuting pair in one factor
        const std::string& f = factors[pick(rng)];
        FreeProductWord g = rand_word(len(rng));
        auto [a1, b1] = rand_nonzero();
        auto [a2, b2] = rand_nonzero();
        FreeProductWord x = fp_multiply(fp_multiply(g, {{{f, a1, b1}}}), fp_inverse(g));
        FreeProductWord y = fp_multiply(fp_multiply(g, {{{f, a2, b2}}}), fp_inverse(g));
        rep.commuting_pairs++;
        auto fx = fp_conjugate_into_factor(x);
        auto fy = fp_conjugate_into_factor(y);
        if (!fp_commute(x, y) || !fx || !fy || *fx != f || *fy != f)
            rep.commuting_violations++;
    }
    for (long long i = 0; i < samples; ++i) {
        // cross-factor pair
        std::size_t i1 = pick(rng), i2 = pick(rng);
        while (i2 == i1) i2 = pick(rng);
        auto [a1, b1] = rand_nonzero();
        auto [a2, b2] = rand_nonzero();
        FreeProductWord x{{{factors[i1], a1, b1}}};
        FreeProductWord y{{{factors[i2], a2, b2}}};
        rep.cross_pairs++;
        if (fp_commute(x, y)) rep.cross_violations++;
    }
    return rep;
}

}  // namespace coxtile
