#pragma once

#include <vector>

namespace vcmkit {

/// Exponent vector of a monomial.
using Monomial = std::vector<int>;

/// Minimal generators of a monomial ideal. The unit ideal is {0-vector}; the
/// zero ideal is the empty list.
using MonomialGens = std::vector<Monomial>;

/// Divisibility-minimal, sorted generating set.
[[nodiscard]] MonomialGens minimalize(MonomialGens gens);

[[nodiscard]] bool ideal_contains(const MonomialGens& ideal, const Monomial& m);

/// I : m = < g / gcd(g, m) >.
[[nodiscard]] MonomialGens colon(const MonomialGens& ideal, const Monomial& m);

/// Intersection via pairwise lcms.
[[nodiscard]] MonomialGens intersect(const MonomialGens& a, const MonomialGens& b);

/// I : J = ∩_j (I : b_j) for J = <b_1, ..., b_s>.
[[nodiscard]] MonomialGens colon(const MonomialGens& ideal, const MonomialGens& by);

/// I : B^∞ by iterated colon ideals I : B, I : B^2, ... up to B^degree_bound.
/// Works on arbitrary (not necessarily squarefree) monomial ideals. Throws
/// BoundExceeded when no fixpoint is reached within the bound.
[[nodiscard]] MonomialGens saturation_oracle(const MonomialGens& ideal, const MonomialGens& b_gens,
                                             int degree_bound);

}  // namespace vcmkit
