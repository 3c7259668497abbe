#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "coxtile/common.hpp"

namespace coxtile {

// Legendrian data for a 2-handle attaching curve in standard form.
struct LegendrianCurve {
    long long tb = 0;       // Thurston-Bennequin number
    long long rot = 0;      // rotation number
    long long framing = 0;  // handle framing

    bool stein_framing() const { return framing == tb - 1; }
};

// <c1(X), alpha> for the generator alpha given by the difference of the
// two 2-handles: the rotation numbers subtract.
inline long long chern_evaluation(const LegendrianCurve& green, const LegendrianCurve& blue) {
    if (!green.stein_framing() || !blue.stein_framing())
        throw std::invalid_argument("chern_evaluation: framing != tb - 1, Stein condition fails");
    return blue.rot - green.rot;
}

struct AdjunctionInput {
    long long c1_eval = 0;   // <c1, alpha>
    long long self_int = 0;  // alpha . alpha
    long long k = 0;         // [S] = k alpha, k != 0
};

// 2g - 2 >= |<c1,[S]>| + [S].[S], so g >= ceil((|k c1| + k^2 sq + 2)/2).
// The analytic hypotheses (Stein structure, non-negative self-
// intersection) are the caller's assertions, not checked here.
inline long long adjunction_genus_bound(const AdjunctionInput& in) {
    if (in.k == 0) throw std::invalid_argument("adjunction_genus_bound: k must be nonzero");
    long long rhs = std::llabs(in.k * in.c1_eval) + in.k * in.k * in.self_int;
    if (rhs < -2) return 0;  // vacuous bound
    return (rhs + 2 + 1) / 2;  // ceil((rhs + 2) / 2)
}

// Genus bound for an essential surface in a boundary sum: the surface
// class projects nontrivially to at least one summand, and any summand
// it hits bounds its genus. Orientation reversal does not change the
// bounds.
inline long long boundary_sum_genus_bound(const std::vector<long long>& summand_bounds,
                                          const std::vector<bool>& nonzero_projection) {
    if (summand_bounds.size() != nonzero_projection.size())
        throw std::invalid_argument("boundary_sum_genus_bound: size mismatch");
    bool any = false;
    long long best = 0;
    for (std::size_t i = 0; i < summand_bounds.size(); ++i) {
        if (!nonzero_projection[i]) continue;
        if (!any || summand_bounds[i] < best) best = summand_bounds[i];
        any = true;
    }
    if (!any)
        throw std::invalid_argument(
            "boundary_sum_genus_bound: all projections zero, surface not essential");
    return best;
}

// The clasp family X_m: adding m positive clasps raises the Chern
// evaluation to 2 + m. The stated exclusion (no essential surface of
// genus <= 2 + m) is stronger than what the adjunction arithmetic
// gives directly; both numbers are reported, neither reconciled.
struct FamilyClaimReport {
    long long m = 0;
    long long c1_eval = 0;             // 2 + m
    long long direct_bound = 0;        // adjunction at k = 1
    long long claimed_exclusion = 0;   // stated: genus <= 2 + m excluded, so >= 3 + m
};

inline FamilyClaimReport clasp_family_claim(long long m) {
    if (m < 0) throw std::invalid_argument("clasp_family_claim: m must be >= 0");
    FamilyClaimReport rep;
    rep.m = m;
    rep.c1_eval = 2 + m;
    rep.direct_bound = adjunction_genus_bound({rep.c1_eval, 0, 1});
    rep.claimed_exclusion = 3 + m;
    return rep;
}

}  // namespace coxtile
