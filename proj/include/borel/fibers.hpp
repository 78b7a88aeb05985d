#ifndef BOREL_FIBERS_HPP
#define BOREL_FIBERS_HPP

// Fibers of the toric map, fiber graphs against a binomial set, and the
// unique-sink certificate over every image up to a degree bound.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

#include "multisink.hpp"
#include "tproduct.hpp"

namespace borel {

struct Limits {
  std::size_t max_vertices = 100000;    // per fiber
  std::size_t max_checks = 10000000;    // divisibility checks per fiber graph
};

/// Everything mapping to x^mu t^beta. Per block, generator multisets are
/// produced in nonincreasing order; the x-part is whatever is left of mu. In a
/// fiber-ring context only products with x-part 1 count. Ascending in `order`.
inline std::vector<TProduct> enumerate_fiber(const ToricContext& ctx, const Image& img, const TermOrder& order,
                                             const Limits& limits = {}) {
  if (img.t.size() != ctx.num_blocks()) throw InvalidArgument("image has the wrong number of t-degrees");
  if (img.x.num_vars() != ctx.n()) throw InvalidArgument("image lives in the wrong ring");
  std::vector<TProduct> out;
  std::vector<GeneratorVar> chosen;
  // generators largest first, so multisets come out nonincreasing
  std::vector<std::vector<Monomial>> gens;
  for (const auto& b : ctx.blocks()) gens.emplace_back(b.gens.rbegin(), b.gens.rend());

  auto rec = [&](auto&& self, std::size_t block, std::size_t left, std::size_t from, const Monomial& rest) -> void {
    if (block == gens.size()) {
      if (!ctx.allow_xpart() && !rest.is_unit()) return;
      if (out.size() >= limits.max_vertices)
        throw ResourceLimit("fiber over " + to_string(img, ctx) + " has more than " +
                            std::to_string(limits.max_vertices) + " vertices");
      out.emplace_back(rest, chosen);
      return;
    }
    if (left == 0) {
      std::size_t next = block + 1;
      self(self, next, next < gens.size() ? img.t[next] : 0, 0, rest);
      return;
    }
    for (std::size_t g = from; g < gens[block].size(); ++g) {
      const Monomial& m = gens[block][g];
      if (!divides(m, rest)) continue;
      chosen.push_back({m, ctx.blocks()[block].label});
      self(self, block, left - 1, g, quotient(rest, m));
      chosen.pop_back();
    }
  };
  if (!gens.empty()) rec(rec, 0, img.t[0], 0, img.x);
  std::sort(out.begin(), out.end(), [&](const TProduct& a, const TProduct& b) { return order.less(a, b); });
  return out;
}

/// Fiber over mu t^beta for a family's multi-Rees algebra.
inline std::vector<TProduct> enumerate_fiber(const IdealFamily& family, const Monomial& mu,
                                             const std::vector<Exponent>& beta, const Limits& limits = {}) {
  auto ctx = ToricContext::from_family(family, true);
  return enumerate_fiber(ctx, Image{mu, beta}, TermOrder::multi(), limits);
}

/// Factorizations of mu into k elements of Borel(M), as products in K[T].
inline std::vector<TProduct> enumerate_fiber(const Monomial& M, const Monomial& mu, Exponent k,
                                             const Limits& limits = {}) {
  auto ctx = ToricContext::principal(M, false);
  return enumerate_fiber(ctx, Image{mu, {k}}, TermOrder::single(), limits);
}

struct FiberEdge {
  std::size_t from; // larger vertex
  std::size_t to;
  std::size_t witness; // index into the binomial list
  friend bool operator==(const FiberEdge&, const FiberEdge&) = default;
};

struct FiberGraph {
  std::vector<TProduct> vertices; // ascending
  std::vector<FiberEdge> edges;   // sorted by (from, to)
};

namespace detail {

/// Sub-products of p of total degree 2, each once.
inline std::vector<TProduct> degree_two_divisors(const TProduct& p) {
  std::vector<TProduct> out;
  const auto& vs = p.tvars();
  const std::size_t n = p.num_vars();
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i == 0 || !(vs[i] == vs[i - 1])) distinct.push_back(i);
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    const auto& va = vs[distinct[a]];
    std::size_t ca = (a + 1 < distinct.size() ? distinct[a + 1] : vs.size()) - distinct[a];
    if (ca >= 2) out.emplace_back(Monomial(n), std::vector<GeneratorVar>{va, va});
    for (std::size_t b = a + 1; b < distinct.size(); ++b)
      out.emplace_back(Monomial(n), std::vector<GeneratorVar>{va, vs[distinct[b]]});
    for (std::size_t x = 1; x <= n; ++x)
      if (p.xpart().exponent(x) > 0) out.emplace_back(Monomial::variable(n, x), std::vector<GeneratorVar>{va});
  }
  for (std::size_t x = 1; x <= n; ++x) {
    Exponent e = p.xpart().exponent(x);
    if (e >= 2) out.emplace_back(Monomial::variable(n, x, 2), std::vector<GeneratorVar>{});
    if (e == 0) continue;
    for (std::size_t y = x + 1; y <= n; ++y)
      if (p.xpart().exponent(y) > 0)
        out.emplace_back(Monomial::variable(n, x) * Monomial::variable(n, y), std::vector<GeneratorVar>{});
  }
  return out;
}

} // namespace detail

/// Directed fiber graph: u -> v whenever u = w * lead(b) and v = w * trail(b)
/// for some b in the set, i.e. u - v is a monomial multiple of b.
inline FiberGraph fiber_graph(std::vector<TProduct> vertices, const std::vector<Binomial>& binomials,
                              const TermOrder& order, const Limits& limits = {}) {
  FiberGraph g;
  std::sort(vertices.begin(), vertices.end(), [&](const TProduct& a, const TProduct& b) { return order.less(a, b); });
  g.vertices = std::move(vertices);
  std::unordered_map<TProduct, std::size_t, TProductHash> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);

  const bool quadratic = std::all_of(binomials.begin(), binomials.end(), [](const Binomial& b) {
    return b.lhs.total_degree() == 2 && b.rhs.total_degree() == 2;
  });
  std::size_t checks = 0;
  auto count = [&](std::size_t k) {
    checks += k;
    if (checks > limits.max_checks)
      throw ResourceLimit("fiber graph needs more than " + std::to_string(limits.max_checks) + " divisibility checks");
  };
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto trail = [&](const Binomial& b) -> const TProduct& { return order.greater(b.lhs, b.rhs) ? b.rhs : b.lhs; };
  auto add_edge = [&](std::size_t u, const TProduct& w, std::size_t bi) {
    auto it = index.find(w * trail(binomials[bi]));
    if (it == index.end()) throw InvalidArgument("binomial " + to_string(binomials[bi]) + " leaves the fiber");
    if (seen.insert({u, it->second}).second) g.edges.push_back({u, it->second, bi});
  };

  if (quadratic) {
    std::unordered_map<TProduct, std::vector<std::size_t>, TProductHash> by_lead;
    for (std::size_t bi = 0; bi < binomials.size(); ++bi) by_lead[lead_term(binomials[bi], order)].push_back(bi);
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
      auto subs = detail::degree_two_divisors(g.vertices[u]);
      count(subs.size());
      for (const auto& s : subs) {
        auto it = by_lead.find(s);
        if (it == by_lead.end()) continue;
        TProduct w = quotient(g.vertices[u], s);
        for (std::size_t bi : it->second) add_edge(u, w, bi);
      }
    }
  } else {
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
      count(binomials.size());
      for (std::size_t bi = 0; bi < binomials.size(); ++bi) {
        const TProduct& lead = lead_term(binomials[bi], order);
        if (divides(lead, g.vertices[u])) add_edge(u, quotient(g.vertices[u], lead), bi);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const FiberEdge& a, const FiberEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return g;
}

struct Certificate {
  bool empty = false;
  bool connected = true;
  std::vector<std::size_t> sinks; // vertex indices, ascending

  bool unique_sink() const { return sinks.size() == 1; }
};

inline Certificate certify(const FiberGraph& g) {
  Certificate c;
  const std::size_t V = g.vertices.size();
  if (V == 0) {
    c.empty = true;
    return c;
  }
  std::vector<std::vector<std::size_t>> adj(V);
  std::vector<bool> has_out(V, false);
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
    has_out[e.from] = true;
  }
  std::vector<bool> seen(V, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  c.connected = reached == V;
  for (std::size_t v = 0; v < V; ++v)
    if (!has_out[v]) c.sinks.push_back(v);
  return c;
}

inline std::string to_dot(const FiberGraph& g, const std::vector<Binomial>& binomials) {
  std::ostringstream out;
  out << "digraph fiber {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << " [label=\"" << to_string(g.vertices[i]) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << to_string(binomials[e.witness]) << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---- bounded certificate -----------------------------------------------------

struct FiberFailure {
  Image image;
  std::vector<TProduct> sinks;
  bool connected = false;
};

struct FiberReport {
  std::size_t bound = 0;
  std::size_t images = 0;
  std::size_t vertices = 0;
  std::vector<FiberFailure> failures; // sorted by image
  std::vector<std::string> detail;    // one line per image when verbose

  bool pass() const { return failures.empty(); }
};

struct VerifyOptions {
  std::size_t bound = 3;
  unsigned jobs = 1;
  bool verbose = false;
  Limits limits;
};

/// Every image of a product of total degree <= bound in K[x, T] with at least one
/// T. Built from generator multisets (times x-monomials when x-parts are allowed).
inline std::vector<Image> images_up_to(const ToricContext& ctx, std::size_t bound) {
  std::set<Image, ImageLess> images;
  const std::size_t n = ctx.n();
  std::vector<GeneratorVar> all;
  for (const auto& b : ctx.blocks())
    for (const auto& g : b.gens) all.push_back({g, b.label});

  std::vector<Monomial> xmonos{Monomial(n)};
  if (ctx.allow_xpart()) {
    std::vector<Monomial> frontier{Monomial(n)};
    for (std::size_t d = 1; d < bound; ++d) {
      std::set<std::vector<Exponent>> next;
      for (const auto& m : frontier)
        for (std::size_t i = 1; i <= n; ++i) next.insert((m * Monomial::variable(n, i)).exponents());
      frontier.clear();
      for (const auto& e : next) frontier.emplace_back(e);
      xmonos.insert(xmonos.end(), frontier.begin(), frontier.end());
    }
  }

  Image cur{Monomial(n), std::vector<Exponent>(ctx.num_blocks(), 0)};
  auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
    if (depth > 0)
      for (const auto& x : xmonos) {
        if (x.degree() + depth > bound) continue;
        images.insert(Image{cur.x * x, cur.t});
      }
    if (depth == bound) return;
    for (std::size_t g = from; g < all.size(); ++g) {
      Image saved = cur;
      cur.x = cur.x * all[g].generator;
      ++cur.t[ctx.position(all[g].block)];
      self(self, g, depth + 1);
      cur = std::move(saved);
    }
  };
  rec(rec, 0, 0);
  return {images.begin(), images.end()};
}

inline FiberReport verify_groebner_by_fibers(const ToricContext& ctx, const std::vector<Binomial>& binomials,
                                             const TermOrder& order, const VerifyOptions& opt = {}) {
  if (opt.bound < 2) throw InvalidArgument("fiber certificate needs bound >= 2");
  for (const auto& b : binomials) check_homogeneous(b, ctx);
  FiberReport rep;
  rep.bound = opt.bound;
  const auto images = images_up_to(ctx, opt.bound);
  rep.images = images.size();

  struct Result {
    std::size_t vertices = 0, edges = 0;
    Certificate cert;
    std::vector<TProduct> sinks;
  };
  std::vector<Result> results(images.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;

  auto work = [&] {
    try {
      for (std::size_t i = next++; i < images.size(); i = next++) {
        auto g = fiber_graph(enumerate_fiber(ctx, images[i], order, opt.limits), binomials, order, opt.limits);
        auto& r = results[i];
        r.vertices = g.vertices.size();
        r.edges = g.edges.size();
        r.cert = certify(g);
        for (std::size_t s : r.cert.sinks) r.sinks.push_back(g.vertices[s]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next = images.size();
    }
  };
  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& r = results[i];
    rep.vertices += r.vertices;
    if (r.vertices > 0 && !r.cert.unique_sink()) rep.failures.push_back({images[i], r.sinks, r.cert.connected});
    if (opt.verbose)
      rep.detail.push_back((r.vertices == 0 || r.cert.unique_sink() ? "ok " : "bad ") + to_string(images[i], ctx) +
                           " vertices=" + std::to_string(r.vertices) + " edges=" + std::to_string(r.edges) +
                           " sinks=" + std::to_string(r.cert.sinks.size()));
  }
  return rep;
}

inline std::string format_report(const FiberReport& rep, const ToricContext& ctx) {
  std::string out = "# certificate: bounded-fiber (total degree <= " + std::to_string(rep.bound) + ")\n";
  out += "# images: " + std::to_string(rep.images) + ", vertices: " + std::to_string(rep.vertices) + "\n";
  for (const auto& line : rep.detail) out += line + "\n";
  for (const auto& f : rep.failures) out += "FAIL " + to_string(f.image, ctx) + " sinks=" + std::to_string(f.sinks.size()) + "\n";
  out += rep.pass() ? "PASS\n" : "FAIL\n";
  return out;
}

} // namespace borel

#endif
