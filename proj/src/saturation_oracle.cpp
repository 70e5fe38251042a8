#include "vcmkit/saturation_oracle.hpp"

#include <algorithm>

#include "vcmkit/errors.hpp"

namespace vcmkit {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

}  // namespace

MonomialGens minimalize(MonomialGens gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const int da = degree(a);
    const int db = degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialGens out;
  for (const Monomial& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return divides(h, g); })) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ideal_contains(const MonomialGens& ideal, const Monomial& m) {
  return std::any_of(ideal.begin(), ideal.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialGens colon(const MonomialGens& ideal, const Monomial& m) {
  MonomialGens out;
  out.reserve(ideal.size());
  for (const Monomial& g : ideal) {
    Monomial q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
    out.push_back(std::move(q));
  }
  return minimalize(std::move(out));
}

MonomialGens intersect(const MonomialGens& a, const MonomialGens& b) {
  MonomialGens out;
  for (const Monomial& g : a) {
    for (const Monomial& h : b) {
      Monomial l(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) l[i] = std::max(g[i], h[i]);
      out.push_back(std::move(l));
    }
  }
  return minimalize(std::move(out));
}

MonomialGens colon(const MonomialGens& ideal, const MonomialGens& by) {
  if (by.empty()) {
    // I : 0 is the unit ideal.
    if (ideal.empty()) return {};
    return {Monomial(ideal.front().size(), 0)};
  }
  MonomialGens acc = colon(ideal, by.front());
  for (std::size_t j = 1; j < by.size(); ++j) acc = intersect(acc, colon(ideal, by[j]));
  return acc;
}

MonomialGens saturation_oracle(const MonomialGens& ideal, const MonomialGens& b_gens, int degree_bound) {
  MonomialGens current = minimalize(ideal);
  for (int k = 1; k <= degree_bound; ++k) {
    MonomialGens next = colon(current, b_gens);
    // I ⊆ I : B always, so equal generating sets means the chain stabilised.
    if (next == current) return current;
    current = std::move(next);
  }
  throw BoundExceeded("saturation_oracle: no fixpoint within degree bound " + std::to_string(degree_bound));
}

}  // namespace vcmkit
