#ifndef BOREL_MULTISINK_HPP
#define BOREL_MULTISINK_HPP

// The greedy candidate for the lex-least monomial of a multi-Rees fiber.

#include <optional>
#include <vector>

#include "borel_sort.hpp"
#include "tproduct.hpp"

namespace borel {

/// T_min over mu * t^beta. Block by block, take the Borel-least element of
/// L_l-Borel(M_l^beta_l) dividing what is left of mu, and Borel-sort it. The
/// family is reduced first; generators keep their original (unreduced) form,
/// so the answer lives in the family's own ring. Empty when some step has no divisor.
inline std::optional<TProduct> t_min(const IdealFamily& family, const Monomial& mu,
                                     const std::vector<Exponent>& beta) {
  family.validate();
  if (beta.size() != family.size())
    throw InvalidArgument("beta has " + std::to_string(beta.size()) + " entries for " +
                          std::to_string(family.size()) + " ideals");
  if (mu.num_vars() != family.n) throw InvalidArgument("mu lives in the wrong ring");
  const ReducedFamily red = reduce_family(family);
  const std::size_t n = family.n;

  // The constant parts come off first: the reduced fiber sits over mu / prod m_i^beta_i.
  Monomial rest = mu;
  for (std::size_t b = 0; b < family.size(); ++b) {
    const Monomial fixed = power(red.stripped[b], beta[b]);
    if (!divides(fixed, rest)) return std::nullopt;
    rest = quotient(rest, fixed);
  }
  std::vector<GeneratorVar> tvars;
  for (std::size_t b = 0; b < family.size(); ++b) {
    if (beta[b] == 0) continue;
    const auto& E = red.family.entries[b].poset.support;
    const Monomial M = project(red.family.entries[b].generator, E);
    auto mu_b = min_borel_divisor(M, beta[b], project(rest, E));
    if (!mu_b) return std::nullopt;
    for (const auto& f : borel_sort(M, *mu_b, beta[b]).factors)
      tvars.push_back({red.stripped[b] * embed(f, E, n), b + 1});
    rest = quotient(rest, embed(*mu_b, E, n));
  }
  return TProduct(rest, std::move(tvars));
}

/// Single ideal: bs(M, mu, k) as a product of T-variables in block 0.
inline TProduct sort_product(const Monomial& M, const Monomial& mu, Exponent k) {
  std::vector<GeneratorVar> vars;
  for (const auto& f : borel_sort(M, mu, k).factors) vars.push_back({f, 0});
  return TProduct(Monomial(M.num_vars()), std::move(vars));
}

} // namespace borel

#endif
