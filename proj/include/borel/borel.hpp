#ifndef BOREL_BOREL_HPP
#define BOREL_BOREL_HPP

// Principal Borel sets: closure, sigma-membership, minimal divisors and the
// reverse moves that walk a divisor down to the minimal one.

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace borel {

/// Borel(M): everything reachable from M by moves x_j -> x_i with i < j.
/// Sorted ascending in grevlex.
inline std::vector<Monomial> borel_closure(const Monomial& M) {
  std::unordered_set<Monomial, MonomialHash> seen{M};
  std::deque<Monomial> queue{M};
  const std::size_t n = M.num_vars();
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 2; j <= n; ++j) {
      if (m.exponent(j) == 0) continue;
      for (std::size_t i = 1; i < j; ++i) {
        Monomial next = apply_move(m, i, j);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

namespace detail {

inline void check_same_degree(const Monomial& a, const Monomial& b, const char* who) {
  check_same_ambient(a, b);
  if (a.degree() != b.degree())
    throw InvalidArgument(std::string(who) + ": degree mismatch (" + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()) + ")");
}

/// sigma-domination without the degree check.
inline bool sigma_dominated(const Monomial& m, const Monomial& M) {
  Degree sm = 0, sM = 0;
  for (std::size_t j = m.num_vars(); j > 0; --j) {
    sm += m.exponents()[j - 1];
    sM += M.exponents()[j - 1];
    if (sm > sM) return false;
  }
  return true;
}

} // namespace detail

/// m in Borel(M), by sigma_i(m) <= sigma_i(M) for all i.
inline bool borel_member(const Monomial& m, const Monomial& M) {
  detail::check_same_degree(m, M, "borel_member");
  return detail::sigma_dominated(m, M);
}

enum class BorelRelation { less, equal, greater, incomparable };

/// m is below m2 when m2 is reachable from m by Borel moves, i.e. m2 in Borel(m).
/// So M is the least element of Borel(M).
inline BorelRelation borel_compare(const Monomial& m, const Monomial& m2) {
  detail::check_same_degree(m, m2, "borel_compare");
  if (m == m2) return BorelRelation::equal;
  if (detail::sigma_dominated(m2, m)) return BorelRelation::less;
  if (detail::sigma_dominated(m, m2)) return BorelRelation::greater;
  return BorelRelation::incomparable;
}

/// The Borel-minimal element of Borel(M^k) dividing mu, if any. Greedy from x_n
/// down: take as much of each variable as mu, the sigma bound and the degree
/// budget allow. Borel(M^k) is never built.
inline std::optional<Monomial> min_borel_divisor(const Monomial& M, Exponent k, const Monomial& mu) {
  detail::check_same_ambient(M, mu);
  if (k == 0) throw InvalidArgument("min_borel_divisor: k must be positive");
  const std::size_t n = M.num_vars();
  const Degree target = M.degree() * k;
  const std::vector<Degree> sig = sigma_vector(M);
  std::vector<Exponent> e(n, 0);
  Degree assigned = 0;
  for (std::size_t j = n; j > 0; --j) {
    Degree cap = std::min<Degree>(mu.exponents()[j - 1], sig[j - 1] * k - assigned);
    cap = std::min(cap, target - assigned);
    e[j - 1] = static_cast<Exponent>(cap);
    assigned += cap;
  }
  if (assigned != target) return std::nullopt;
  return Monomial(std::move(e));
}

/// m in Borel(M^k), with the degree checked rather than thrown on.
inline bool factors_exist(const Monomial& N, const Monomial& M, Exponent k) {
  detail::check_same_ambient(N, M);
  if (N.degree() != M.degree() * k) return false;
  return detail::sigma_dominated(N, power(M, k));
}

// A reverse move (x_j/x_i) m with i < j: one x_i becomes x_j.
struct Move {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

/// One reverse move (x_j/x_i) m that stays in Borel(M), still divides mu and
/// brings m closer to the minimal divisor M'. j is the largest index with
/// sigma_j(m) < sigma_j(M'); among the admissible i < j the smallest is taken,
/// which gives the grevlex-smallest result.
inline Move reverse_step_toward(const Monomial& m, const Monomial& M, const Monomial& mu) {
  if (!borel_member(m, M)) throw InvalidArgument("reverse_step_toward: m is not in Borel(M)");
  if (!divides(m, mu)) throw InvalidArgument("reverse_step_toward: m does not divide mu");
  auto target = min_borel_divisor(M, 1, mu);
  // target exists because m itself is a candidate
  if (*target == m) throw InvalidArgument("reverse_step_toward: m is already the minimal divisor");
  const auto sm = sigma_vector(m);
  const auto st = sigma_vector(*target);
  std::size_t j = 0;
  for (std::size_t idx = m.num_vars(); idx > 0; --idx)
    if (sm[idx - 1] < st[idx - 1]) {
      j = idx;
      break;
    }
  for (std::size_t i = 1; i < j; ++i) {
    if (m.exponent(i) == 0) continue;
    Monomial moved = apply_move(m, j, i);
    if (divides(moved, mu) && detail::sigma_dominated(moved, M)) return {i, j};
  }
  throw InvalidArgument("reverse_step_toward: no admissible move (inconsistent input)");
}

struct FactorMove {
  std::size_t factor = 0; // 0-based position in the factor list
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const FactorMove&, const FactorMove&) = default;
};

/// The factorized version: given factors of P' in Borel(M) whose product divides
/// mu but is not the minimal divisor P of Borel(M^k), finds a factor and a
/// reverse move (x_j/x_i) on it keeping everything admissible.
inline FactorMove factorization_step(const std::vector<Monomial>& factors, const Monomial& M,
                                     const Monomial& mu) {
  if (factors.empty()) throw InvalidArgument("factorization_step: no factors");
  Monomial prod(M.num_vars());
  for (const auto& f : factors) {
    if (!borel_member(f, M)) throw InvalidArgument("factorization_step: factor not in Borel(M)");
    prod = prod * f;
  }
  if (!divides(prod, mu)) throw InvalidArgument("factorization_step: product does not divide mu");
  const auto k = static_cast<Exponent>(factors.size());
  auto target = min_borel_divisor(M, k, mu);
  if (*target == prod) throw InvalidArgument("factorization_step: product is already minimal");

  const auto sp = sigma_vector(prod);
  const auto st = sigma_vector(*target);
  const auto sM = sigma_vector(M);
  std::size_t j = 0;
  for (std::size_t idx = M.num_vars(); idx > 0; --idx)
    if (sp[idx - 1] < st[idx - 1]) {
      j = idx;
      break;
    }
  for (std::size_t l = 0; l < factors.size(); ++l) {
    if (sigma(factors[l], j) >= sM[j - 1]) continue;
    for (std::size_t i = 1; i < j; ++i) {
      if (factors[l].exponent(i) == 0) continue;
      if (detail::sigma_dominated(apply_move(factors[l], j, i), M)) return {l, i, j};
    }
  }
  throw InvalidArgument("factorization_step: no admissible move (inconsistent input)");
}

} // namespace borel

#endif
