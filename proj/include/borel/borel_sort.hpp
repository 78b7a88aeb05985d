#ifndef BOREL_BOREL_SORT_HPP
#define BOREL_BOREL_SORT_HPP

// The Borel sort: a canonical factorization of mu in Borel(M^k) into k factors
// from Borel(M), built by peeling off the largest variable of mu.

#include <vector>

#include "borel.hpp"

namespace borel {

struct SortResult {
  std::vector<Monomial> factors;

  Monomial product() const {
    if (factors.empty()) throw InvalidArgument("empty sort result");
    Monomial p(factors.front().num_vars());
    for (const auto& f : factors) p = p * f;
    return p;
  }
};

enum class SplitMode { up, left, down };

/// gamma / x_s^e, where gamma is the Borel-least element of Borel(M) avoiding
/// x_{s+1}..x_n with x_s-exponent e (e = q for up/left, q + 1 for down).
inline Monomial split_monomial(const Monomial& M, std::size_t s, Exponent q, SplitMode mode) {
  Monomial::check_index(M.num_vars(), s);
  if (s == 1) throw InvalidArgument("split_monomial: s must be greater than 1");
  const Degree e = mode == SplitMode::down ? Degree(q) + 1 : Degree(q);
  if (e > sigma(M, s))
    throw InvalidArgument("split_monomial: exponent " + std::to_string(e) + " exceeds sigma_" +
                          std::to_string(s) + "(M)");
  std::vector<Exponent> g(M.num_vars(), 0);
  for (std::size_t i = 1; i + 1 < s; ++i) g[i - 1] = M.exponent(i);
  g[s - 2] = static_cast<Exponent>(sigma(M, s - 1) - e);
  // g[s-1] would be e; it is divided out
  return Monomial(std::move(g));
}

namespace detail {

inline void borel_sort_into(const Monomial& M, const Monomial& mu, Exponent k,
                            std::vector<Monomial>& out) {
  const std::size_t n = M.num_vars();
  const std::size_t s = mu.max_index();
  const Exponent d = static_cast<Exponent>(M.degree());

  if (s == 0 || mu.exponent(s) == mu.degree()) {
    // mu is 1 or a pure power x_s^{dk}: every factor is x_s^d
    Monomial f = s == 0 ? Monomial(n) : Monomial::variable(n, s, d);
    out.insert(out.end(), k, f);
    return;
  }

  const Exponent A = mu.exponent(s);
  const Exponent q = A / k;
  const Exponent r = A % k;
  const Monomial xs_q = Monomial::variable(n, s, q);
  const Monomial without_s = mu.with_exponent(s, 0);

  if (r > 0) {
    Monomial M_up = split_monomial(M, s, q, SplitMode::up);
    auto mu_up = min_borel_divisor(M_up, k - r, mu);
    if (!mu_up) throw InvalidArgument("borel_sort: no upper divisor (input outside Borel(M^k)?)");
    Monomial M_down = split_monomial(M, s, q, SplitMode::down);
    Monomial mu_down = quotient(without_s, *mu_up);

    std::vector<Monomial> up, down;
    borel_sort_into(M_up, *mu_up, k - r, up);
    borel_sort_into(M_down, mu_down, r, down);
    const Monomial xs_q1 = Monomial::variable(n, s, q + 1);
    for (const auto& u : up) out.push_back(xs_q * u);
    for (const auto& w : down) out.push_back(xs_q1 * w);
  } else {
    Monomial M_left = split_monomial(M, s, q, SplitMode::left);
    std::vector<Monomial> left;
    borel_sort_into(M_left, without_s, k, left);
    for (const auto& l : left) out.push_back(xs_q * l);
  }
}

} // namespace detail

/// bs(M, mu) with k factors. Requires mu in Borel(M^k).
inline SortResult borel_sort(const Monomial& M, const Monomial& mu, Exponent k) {
  detail::check_same_ambient(M, mu);
  if (k == 0) throw InvalidArgument("borel_sort: k must be positive");
  if (!factors_exist(mu, M, k))
    throw InvalidArgument("borel_sort: " + to_string(mu) + " is not in Borel(" + to_string(M) + ")^" +
                          std::to_string(k));
  SortResult res;
  res.factors.reserve(k);
  detail::borel_sort_into(M, mu, k, res.factors);
  return res;
}

} // namespace borel

#endif
