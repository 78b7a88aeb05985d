#ifndef BOREL_TESTS_ORACLES_HPP
#define BOREL_TESTS_ORACLES_HPP

// Slow, obviously-correct reference computations. Nothing here calls the
// greedy or recursive code paths being checked.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "borel/monomial.hpp"

namespace oracle {

using borel::Exponent;
using borel::Monomial;

/// Every monomial of degree d in n variables.
inline std::vector<Monomial> all_monomials(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (n == 0) return out;
  rec(0, d);
  return out;
}

/// Every monomial dividing mu.
inline std::vector<Monomial> all_divisors(const Monomial& mu) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(mu.num_vars(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == e.size()) {
      out.emplace_back(e);
      return;
    }
    for (Exponent a = 0; a <= mu.exponents()[i]; ++a) {
      e[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// The Borel closure by literally applying moves until nothing new appears
/// (depth-first, std::set, no hashing).
inline std::set<std::vector<Exponent>> closure_by_moves(const Monomial& M) {
  std::set<std::vector<Exponent>> seen{M.exponents()};
  std::vector<std::vector<Exponent>> stack{M.exponents()};
  while (!stack.empty()) {
    auto e = stack.back();
    stack.pop_back();
    for (std::size_t j = 1; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        auto f = e;
        --f[j];
        ++f[i];
        if (seen.insert(f).second) stack.push_back(f);
      }
    }
  }
  return seen;
}

inline bool sigma_leq(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  long sa = 0, sb = 0;
  for (std::size_t j = a.size(); j > 0; --j) {
    sa += a[j - 1];
    sb += b[j - 1];
    if (sa > sb) return false;
  }
  return true;
}

/// Borel-minimal element of closure(M^k) dividing mu: the unique element whose
/// sigma-vector dominates every other candidate's.
inline std::optional<Monomial> min_divisor(const Monomial& M, Exponent k, const Monomial& mu) {
  std::vector<Exponent> Mk = M.exponents();
  for (auto& x : Mk) x *= k;
  std::vector<std::vector<Exponent>> cands;
  for (const auto& c : closure_by_moves(Monomial(Mk))) {
    bool div = true;
    for (std::size_t i = 0; i < c.size(); ++i) div = div && c[i] <= mu.exponents()[i];
    if (div) cands.push_back(c);
  }
  if (cands.empty()) return std::nullopt;
  std::optional<std::vector<Exponent>> best;
  for (const auto& c : cands) {
    bool dominates_all = true;
    for (const auto& o : cands) dominates_all = dominates_all && sigma_leq(o, c);
    if (dominates_all) {
      if (best) throw std::logic_error("two Borel-minimal divisors");
      best = c;
    }
  }
  if (!best) throw std::logic_error("no Borel-minimal divisor among candidates");
  return Monomial(*best);
}

/// grevlex written out from the definition, independent of borel::compare.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.num_vars(); i > 0; --i)
    if (a.exponents()[i - 1] != b.exponents()[i - 1]) return a.exponents()[i - 1] < b.exponents()[i - 1];
  return false;
}

/// All k-element multisets of `gens` (given as indices into gens sorted grevlex
/// descending, nonincreasing) whose product is mu. Each is returned as its factor
/// list, largest variable first.
inline std::vector<std::vector<Monomial>> factorizations(std::vector<Monomial> gens, const Monomial& mu,
                                                         unsigned k) {
  std::sort(gens.begin(), gens.end(), grevlex_greater);
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> cur;
  std::function<void(std::size_t, const std::vector<Exponent>&)> rec = [&](std::size_t from,
                                                                            const std::vector<Exponent>& rest) {
    if (cur.size() == k) {
      if (std::all_of(rest.begin(), rest.end(), [](Exponent x) { return x == 0; })) out.push_back(cur);
      return;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
      const auto& ge = gens[g].exponents();
      bool ok = true;
      for (std::size_t i = 0; i < ge.size() && ok; ++i) ok = ge[i] <= rest[i];
      if (!ok) continue;
      auto r = rest;
      for (std::size_t i = 0; i < ge.size(); ++i) r[i] -= ge[i];
      cur.push_back(gens[g]);
      rec(g, r);
      cur.pop_back();
    }
  };
  rec(0, mu.exponents());
  return out;
}

/// Lex order on K[T] with T_m > T_n iff m >grevlex n: compare the descending
/// variable lists position by position; a proper prefix is smaller.
inline bool lex_less(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] == b[i]) continue;
    return grevlex_greater(b[i], a[i]);
  }
  return a.size() < b.size();
}

inline std::optional<std::vector<Monomial>> lex_min_factorization(const std::vector<Monomial>& gens,
                                                                  const Monomial& mu, unsigned k) {
  auto all = factorizations(gens, mu, k);
  if (all.empty()) return std::nullopt;
  return *std::min_element(all.begin(), all.end(), lex_less);
}

} // namespace oracle

#endif
