#ifndef BOREL_QUADRICS_HPP
#define BOREL_QUADRICS_HPP

// Explicit quadric sets: exchange relations inside one principal Borel set,
// their Borel-sort form, and the symmetric / principal / bi-principal families
// for a family of L-Borel ideals.

#include <algorithm>
#include <iterator>
#include <unordered_set>
#include <vector>

#include "borel_sort.hpp"
#include "tproduct.hpp"

namespace borel {

namespace detail {

using MonomialSet = std::unordered_set<Monomial, MonomialHash>;

inline void push_if_nonzero(std::vector<Binomial>& out, TProduct a, TProduct b, const TermOrder& order) {
  if (a == b) return;
  out.push_back(make_binomial(std::move(a), std::move(b), order));
}

inline TProduct tprod(std::size_t n, std::initializer_list<GeneratorVar> vars, Monomial x = Monomial()) {
  if (x.num_vars() == 0) x = Monomial(n);
  return TProduct(std::move(x), std::vector<GeneratorVar>(vars));
}

/// T_m T_n - T_{(x_s/x_t) m} T_{(x_t/x_s) n} for s < t taken from `vars`, both
/// moved monomials in `gens`; all variables in block `label`.
inline void exchange_quadrics(const std::vector<Monomial>& gens, const MonomialSet& members,
                              const std::vector<std::size_t>& vars, std::size_t label, const TermOrder& order,
                              std::vector<Binomial>& out) {
  const std::size_t n = gens.empty() ? 0 : gens.front().num_vars();
  for (const auto& m : gens)
    for (const auto& q : gens)
      for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
          const std::size_t s = vars[a], t = vars[b];
          if (m.exponent(t) == 0 || q.exponent(s) == 0) continue;
          Monomial m2 = apply_move(m, s, t), q2 = apply_move(q, t, s);
          if (!members.count(m2) || !members.count(q2)) continue;
          push_if_nonzero(out, tprod(n, {{m, label}, {q, label}}), tprod(n, {{m2, label}, {q2, label}}), order);
        }
}

inline std::vector<std::size_t> all_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

} // namespace detail

/// Exchange relations of the toric ring of Borel(M), block 0. Both moved
/// generators are required to lie in Borel(M).
inline std::vector<Binomial> quadrics_single(const Monomial& M, const TermOrder& order = TermOrder::single()) {
  auto gens = borel_closure(M);
  detail::MonomialSet members(gens.begin(), gens.end());
  std::vector<Binomial> out;
  detail::exchange_quadrics(gens, members, detail::all_vars(M.num_vars()), 0, order, out);
  canonicalize(out, order);
  return out;
}

/// T_m T_n - T_{mu1} T_{mu2} with {mu1, mu2} = bs(M, mn) over all pairs of generators.
inline std::vector<Binomial> quadrics_bs_form(const Monomial& M, const TermOrder& order = TermOrder::single()) {
  auto gens = borel_closure(M);
  const std::size_t n = M.num_vars();
  std::vector<Binomial> out;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      auto s = borel_sort(M, gens[a] * gens[b], 2);
      detail::push_if_nonzero(out, detail::tprod(n, {{gens[a], 0}, {gens[b], 0}}),
                              detail::tprod(n, {{s.factors[0], 0}, {s.factors[1], 0}}), order);
    }
  canonicalize(out, order);
  return out;
}

struct QuadricSet {
  std::vector<Binomial> symmetric;
  std::vector<Binomial> fiber_principal;
  std::vector<Binomial> fiber_biprincipal;

  std::vector<Binomial> fiber() const {
    auto out = fiber_principal;
    out.insert(out.end(), fiber_biprincipal.begin(), fiber_biprincipal.end());
    return out;
  }

  std::vector<Binomial> all() const {
    auto out = symmetric;
    auto f = fiber();
    out.insert(out.end(), f.begin(), f.end());
    return out;
  }
};

/// The three quadric types for a family. Moves run over the essential variables
/// of each ideal and must land inside its generating set. Generators are used
/// as given; an unreduced family gives the isomorphic copy of the reduced set.
inline QuadricSet quadrics_multi(const IdealFamily& family, const TermOrder& order = TermOrder::multi()) {
  family.validate();
  const std::size_t n = family.n, r = family.size();
  std::vector<std::vector<Monomial>> gens(r);
  std::vector<detail::MonomialSet> members(r);
  std::vector<std::vector<std::size_t>> ess(r);
  for (std::size_t b = 0; b < r; ++b) {
    gens[b] = family.generators(b + 1);
    members[b] = detail::MonomialSet(gens[b].begin(), gens[b].end());
    ess[b] = essential_variables(gens[b]);
  }

  QuadricSet q;
  for (std::size_t b = 0; b < r; ++b) {
    const std::size_t label = b + 1;
    const auto& E = ess[b];
    // x_s T_m - x_t T_{(x_s/x_t) m}
    for (const auto& m : gens[b])
      for (std::size_t a = 0; a < E.size(); ++a)
        for (std::size_t c = a + 1; c < E.size(); ++c) {
          const std::size_t s = E[a], t = E[c];
          if (m.exponent(t) == 0) continue;
          Monomial m2 = apply_move(m, s, t);
          if (!members[b].count(m2)) continue;
          detail::push_if_nonzero(q.symmetric, detail::tprod(n, {{m, label}}, Monomial::variable(n, s)),
                                  detail::tprod(n, {{m2, label}}, Monomial::variable(n, t)), order);
        }
    detail::exchange_quadrics(gens[b], members[b], E, label, order, q.fiber_principal);
  }

  // T_{m t_i} T_{n t_j} - T_{(x_t/x_s) m t_i} T_{(x_s/x_t) n t_j}, i < j
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(ess[i].begin(), ess[i].end(), ess[j].begin(), ess[j].end(), std::back_inserter(common));
      for (const auto& m : gens[i])
        for (const auto& g : gens[j])
          for (std::size_t a = 0; a < common.size(); ++a)
            for (std::size_t c = a + 1; c < common.size(); ++c) {
              const std::size_t s = common[a], t = common[c];
              if (m.exponent(s) == 0 || g.exponent(t) == 0) continue;
              Monomial m2 = apply_move(m, t, s), g2 = apply_move(g, s, t);
              if (!members[i].count(m2) || !members[j].count(g2)) continue;
              detail::push_if_nonzero(q.fiber_biprincipal, detail::tprod(n, {{m, i + 1}, {g, j + 1}}),
                                      detail::tprod(n, {{m2, i + 1}, {g2, j + 1}}), order);
            }
    }
  canonicalize(q.symmetric, order);
  canonicalize(q.fiber_principal, order);
  canonicalize(q.fiber_biprincipal, order);
  return q;
}

} // namespace borel

#endif
