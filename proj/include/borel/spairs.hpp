#ifndef BOREL_SPAIRS_HPP
#define BOREL_SPAIRS_HPP

// Buchberger's criterion for pure-difference binomials. Reduction only ever
// touches the lead term, which is enough to decide reduction to zero.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tproduct.hpp"

namespace borel {

struct SPairFailure {
  std::size_t first, second; // indices into the input
  Binomial remainder;        // irreducible lead
};

struct SPairReport {
  std::size_t pairs = 0;   // pairs examined (after the product criterion)
  std::size_t skipped = 0; // coprime leads
  std::optional<SPairFailure> failure;

  bool pass() const { return !failure; }
};

/// Lead-reduces p - q by gs. Empty when it reaches zero.
inline std::optional<Binomial> reduce_binomial(TProduct p, TProduct q, const std::vector<Binomial>& gs,
                                               const TermOrder& order, std::size_t max_steps = 100000) {
  for (std::size_t step = 0;; ++step) {
    if (p == q) return std::nullopt;
    if (order.less(p, q)) std::swap(p, q);
    if (step >= max_steps)
      throw ResourceLimit("binomial reduction exceeded " + std::to_string(max_steps) + " steps");
    const Binomial* hit = nullptr;
    for (const auto& g : gs)
      if (divides(g.lhs, p)) {
        hit = &g;
        break;
      }
    if (!hit) return Binomial{std::move(p), std::move(q)};
    p = quotient(p, hit->lhs) * hit->rhs;
  }
}

/// Checks that every S-pair reduces to zero. Pairs go in order of increasing
/// total degree of the lcm of their leads, ties by index; the first failure stops the run.
inline SPairReport verify_groebner_by_spairs(std::vector<Binomial> gs, const TermOrder& order,
                                             std::size_t max_pairs = 5000000) {
  for (auto& g : gs)
    if (order.less(g.lhs, g.rhs)) std::swap(g.lhs, g.rhs);
  SPairReport rep;
  struct Pair {
    Degree deg;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gcd(gs[i].lhs, gs[j].lhs).is_one()) {
        ++rep.skipped;
        continue;
      }
      pairs.push_back({lcm(gs[i].lhs, gs[j].lhs).total_degree(), i, j});
      if (pairs.size() > max_pairs) throw ResourceLimit("more than " + std::to_string(max_pairs) + " S-pairs");
    }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return std::tie(a.deg, a.i, a.j) < std::tie(b.deg, b.i, b.j); });
  for (const auto& pr : pairs) {
    ++rep.pairs;
    const auto& a = gs[pr.i];
    const auto& b = gs[pr.j];
    TProduct L = lcm(a.lhs, b.lhs);
    auto rem = reduce_binomial(quotient(L, a.lhs) * a.rhs, quotient(L, b.lhs) * b.rhs, gs, order);
    if (rem) {
      rep.failure = SPairFailure{pr.i, pr.j, std::move(*rem)};
      return rep;
    }
  }
  return rep;
}

inline std::string format_report(const SPairReport& rep, const std::vector<Binomial>& gs) {
  std::string out = "# certificate: s-pairs (" + std::to_string(rep.pairs) + " pairs reduced, " +
                    std::to_string(rep.skipped) + " skipped by coprime leads)\n";
  if (rep.failure) {
    out += "FAIL pair (" + to_string(gs[rep.failure->first]) + ", " + to_string(gs[rep.failure->second]) + ")\n";
    out += "# remainder " + to_string(rep.failure->remainder) + "\n";
    out += "FAIL\n";
  } else {
    out += "PASS\n";
  }
  return out;
}

} // namespace borel

#endif
