#ifndef BOREL_TPRODUCT_HPP
#define BOREL_TPRODUCT_HPP

// Monomials of the presenting ring K[x, T]: an x-part times a multiset of
// toric variables T_{m t_i}, the lex order on top of the variable order, and
// pure-difference binomials.

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "family.hpp"

namespace borel {

/// T_{m t_block}. Block 0 is the single-ideal ring without t-variables.
struct GeneratorVar {
  Monomial generator;
  std::size_t block = 0;

  friend bool operator==(const GeneratorVar&, const GeneratorVar&) = default;
};

/// Variable order: lower block is larger; inside a block the grevlex-larger generator is larger.
inline std::strong_ordering compare(const GeneratorVar& a, const GeneratorVar& b) {
  if (a.block != b.block) return b.block <=> a.block;
  return compare(a.generator, b.generator, Order::grevlex);
}

struct VarGreater {
  bool operator()(const GeneratorVar& a, const GeneratorVar& b) const { return compare(a, b) > 0; }
};

/// x^alpha * T^gamma with tvars kept sorted largest first.
class TProduct {
public:
  TProduct() = default;
  explicit TProduct(std::size_t n) : xpart_(n) {}
  TProduct(Monomial xpart, std::vector<GeneratorVar> tvars) : xpart_(std::move(xpart)), tvars_(std::move(tvars)) {
    std::sort(tvars_.begin(), tvars_.end(), VarGreater{});
    for (const auto& v : tvars_)
      if (v.generator.num_vars() != xpart_.num_vars())
        throw InvalidArgument("toric variable lives in a different ring than the x-part");
  }

  const Monomial& xpart() const { return xpart_; }
  const std::vector<GeneratorVar>& tvars() const { return tvars_; }
  std::size_t num_vars() const { return xpart_.num_vars(); }
  std::size_t t_degree() const { return tvars_.size(); }
  Degree total_degree() const { return xpart_.degree() + tvars_.size(); }
  bool is_one() const { return xpart_.is_unit() && tvars_.empty(); }

  /// No repeated T-variable and no x-exponent above 1.
  bool is_squarefree() const {
    for (std::size_t i = 1; i < tvars_.size(); ++i)
      if (tvars_[i] == tvars_[i - 1]) return false;
    return std::all_of(xpart_.exponents().begin(), xpart_.exponents().end(), [](Exponent e) { return e <= 1; });
  }

  friend bool operator==(const TProduct&, const TProduct&) = default;

private:
  Monomial xpart_;
  std::vector<GeneratorVar> tvars_;
};

namespace detail {

// Merge helpers over the sorted variable lists. `op` receives the counts.
template <typename Op>
std::vector<GeneratorVar> merge_counts(const std::vector<GeneratorVar>& a, const std::vector<GeneratorVar>& b, Op op) {
  std::vector<GeneratorVar> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const GeneratorVar* v;
    if (j >= b.size() || (i < a.size() && compare(a[i], b[j]) >= 0))
      v = &a[i];
    else
      v = &b[j];
    std::size_t ca = 0, cb = 0;
    while (i < a.size() && a[i] == *v) ++ca, ++i;
    while (j < b.size() && b[j] == *v) ++cb, ++j;
    std::size_t c = op(ca, cb);
    out.insert(out.end(), c, *v);
  }
  return out;
}

} // namespace detail

inline TProduct operator*(const TProduct& a, const TProduct& b) {
  auto vars = detail::merge_counts(a.tvars(), b.tvars(), [](std::size_t x, std::size_t y) { return x + y; });
  return TProduct(a.xpart() * b.xpart(), std::move(vars));
}

inline bool divides(const TProduct& a, const TProduct& b) {
  if (!divides(a.xpart(), b.xpart())) return false;
  bool ok = true;
  detail::merge_counts(a.tvars(), b.tvars(), [&](std::size_t x, std::size_t y) {
    ok = ok && x <= y;
    return std::size_t{0};
  });
  return ok;
}

/// a / b; b must divide a.
inline TProduct quotient(const TProduct& a, const TProduct& b) {
  if (!divides(b, a)) throw InvalidArgument("quotient: divisor does not divide dividend");
  auto vars = detail::merge_counts(a.tvars(), b.tvars(), [](std::size_t x, std::size_t y) { return x - y; });
  return TProduct(quotient(a.xpart(), b.xpart()), std::move(vars));
}

inline TProduct lcm(const TProduct& a, const TProduct& b) {
  auto vars = detail::merge_counts(a.tvars(), b.tvars(), [](std::size_t x, std::size_t y) { return std::max(x, y); });
  return TProduct(lcm(a.xpart(), b.xpart()), std::move(vars));
}

inline TProduct gcd(const TProduct& a, const TProduct& b) {
  auto vars = detail::merge_counts(a.tvars(), b.tvars(), [](std::size_t x, std::size_t y) { return std::min(x, y); });
  return TProduct(gcd(a.xpart(), b.xpart()), std::move(vars));
}

struct TProductHash {
  std::size_t operator()(const TProduct& p) const noexcept {
    std::size_t h = MonomialHash{}(p.xpart());
    for (const auto& v : p.tvars()) h = h * 1000003u ^ (MonomialHash{}(v.generator) + v.block * 0x9e37u);
    return h;
  }
};

/// The lex order on K[x, T]: every T above every x, T variables ordered as in
/// compare(GeneratorVar), then x1 > x2 > ... > xn. In single-ideal mode all
/// T-variables sit in block 0 and the comparison is the same.
class TermOrder {
public:
  enum class Mode { single, multi };

  explicit TermOrder(Mode mode = Mode::multi) : mode_(mode) {}
  static TermOrder single() { return TermOrder(Mode::single); }
  static TermOrder multi() { return TermOrder(Mode::multi); }

  Mode mode() const { return mode_; }

  std::strong_ordering compare(const TProduct& a, const TProduct& b) const {
    const auto& x = a.tvars();
    const auto& y = b.tvars();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      auto c = borel::compare(x[i], y[i]);
      if (c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() <=> y.size();
    return borel::compare(a.xpart(), b.xpart(), Order::lex);
  }

  bool less(const TProduct& a, const TProduct& b) const { return compare(a, b) < 0; }
  bool greater(const TProduct& a, const TProduct& b) const { return compare(a, b) > 0; }

private:
  Mode mode_;
};

/// lhs - rhs with lhs the larger side.
struct Binomial {
  TProduct lhs;
  TProduct rhs;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline Binomial make_binomial(TProduct a, TProduct b, const TermOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) throw InvalidArgument("binomial with equal sides");
  if (c < 0) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline const TProduct& lead_term(const Binomial& b, const TermOrder& order) {
  return order.compare(b.lhs, b.rhs) >= 0 ? b.lhs : b.rhs;
}

struct BinomialLess {
  const TermOrder* order;
  bool operator()(const Binomial& a, const Binomial& b) const {
    auto c = order->compare(a.lhs, b.lhs);
    if (c != 0) return c < 0;
    return order->less(a.rhs, b.rhs);
  }
};

/// Sorts by (lead, trail) ascending and removes duplicates.
inline void canonicalize(std::vector<Binomial>& bs, const TermOrder& order) {
  std::sort(bs.begin(), bs.end(), BinomialLess{&order});
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
}

inline bool squarefree_leads(const std::vector<Binomial>& bs, const TermOrder& order) {
  return std::all_of(bs.begin(), bs.end(), [&](const Binomial& b) { return lead_term(b, order).is_squarefree(); });
}

// ---- the toric map ---------------------------------------------------------

/// Generating sets of the blocks of K[x, T] -> K[x, t].
class ToricContext {
public:
  struct Block {
    std::size_t label;           // t-index printed and stored in GeneratorVar
    std::vector<Monomial> gens;  // ascending grevlex
  };

  ToricContext() = default;

  /// The toric ring K[Borel(M)] (allow_xpart = false) or the Rees algebra of Borel(M).
  static ToricContext principal(const Monomial& M, bool rees = false) {
    ToricContext c;
    c.n_ = M.num_vars();
    c.allow_xpart_ = rees;
    c.add_block(rees ? 1 : 0, borel_closure(M));
    return c;
  }

  /// Multi-Rees algebra (allow_xpart = true) or multi-fiber ring of a family.
  static ToricContext from_family(const IdealFamily& family, bool rees = true) {
    family.validate();
    ToricContext c;
    c.n_ = family.n;
    c.allow_xpart_ = rees;
    for (std::size_t b = 1; b <= family.size(); ++b) c.add_block(b, family.generators(b));
    return c;
  }

  std::size_t n() const { return n_; }
  bool allow_xpart() const { return allow_xpart_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }

  /// Position of a block label among the blocks.
  std::size_t position(std::size_t label) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].label == label) return i;
    throw InvalidArgument("no block t" + std::to_string(label));
  }

  bool contains(const GeneratorVar& v) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].label == v.block) return members_[i].count(v.generator) != 0;
    return false;
  }

  GeneratorVar var(std::size_t label, const Monomial& g) const {
    GeneratorVar v{g, label};
    if (!contains(v)) throw InvalidArgument(to_string(g) + " is not a generator of block t" + std::to_string(label));
    return v;
  }

private:
  void add_block(std::size_t label, std::vector<Monomial> gens) {
    for (const auto& g : gens)
      if (g.degree() != gens.front().degree()) throw InvalidArgument("block generators of mixed degree");
    members_.emplace_back(gens.begin(), gens.end());
    blocks_.push_back({label, std::move(gens)});
  }

  std::size_t n_ = 0;
  bool allow_xpart_ = true;
  std::vector<Block> blocks_;
  std::vector<std::unordered_set<Monomial, MonomialHash>> members_;
};

/// phi(x^alpha T^gamma) = x^alpha * prod(generators) * t^(block counts).
struct Image {
  Monomial x;
  std::vector<Exponent> t; // per block position

  friend bool operator==(const Image&, const Image&) = default;
};

inline Image toric_image(const TProduct& p, const ToricContext& ctx) {
  Image img{p.xpart(), std::vector<Exponent>(ctx.num_blocks(), 0)};
  for (const auto& v : p.tvars()) {
    if (!ctx.contains(v))
      throw InvalidArgument(to_string(v.generator) + " is not a generator of block t" + std::to_string(v.block));
    img.x = img.x * v.generator;
    ++img.t[ctx.position(v.block)];
  }
  return img;
}

struct ImageLess {
  bool operator()(const Image& a, const Image& b) const {
    if (a.t != b.t) return a.t < b.t;
    return compare(a.x, b.x, Order::grevlex) < 0;
  }
};

/// Checks that both sides have one image.
inline void check_homogeneous(const Binomial& b, const ToricContext& ctx) {
  if (!(toric_image(b.lhs, ctx) == toric_image(b.rhs, ctx)))
    throw InvalidArgument("binomial sides have different images");
}

// ---- text ------------------------------------------------------------------

inline std::string var_text(const GeneratorVar& v) {
  if (v.block == 0) return to_string(v.generator);
  return "t" + std::to_string(v.block) + ":" + to_string(v.generator);
}

/// Vertex labels: `x1^2*x2 | t1:x3*x4, t2:x3^2`.
inline std::string to_string(const TProduct& p) {
  std::string out = to_string(p.xpart()) + " |";
  if (p.tvars().empty()) return out + " 1";
  for (std::size_t i = 0; i < p.tvars().size(); ++i) out += (i ? ", " : " ") + var_text(p.tvars()[i]);
  return out;
}

/// Product form used inside binomials: `x3*T[t1:x4]^2`.
inline std::string side_text(const TProduct& p) {
  std::vector<std::string> parts;
  if (!p.xpart().is_unit()) parts.push_back(to_string(p.xpart()));
  const auto& vs = p.tvars();
  for (std::size_t i = 0; i < vs.size();) {
    std::size_t j = i;
    while (j < vs.size() && vs[j] == vs[i]) ++j;
    std::string s = "T[" + var_text(vs[i]) + "]";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(std::move(s));
    i = j;
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

inline std::string to_string(const Binomial& b) { return side_text(b.lhs) + " - " + side_text(b.rhs); }

/// `x1*x2*x3 t1*t2*t3`; in single-ideal mode the t-part is `t^k`.
inline std::string to_string(const Image& img, const ToricContext& ctx) {
  std::string t;
  for (std::size_t i = 0; i < img.t.size(); ++i) {
    if (img.t[i] == 0) continue;
    if (!t.empty()) t += '*';
    std::size_t label = ctx.blocks()[i].label;
    t += label == 0 ? std::string("t") : "t" + std::to_string(label);
    if (img.t[i] > 1) t += "^" + std::to_string(img.t[i]);
  }
  return to_string(img.x) + " " + (t.empty() ? "1" : t);
}

} // namespace borel

#endif
