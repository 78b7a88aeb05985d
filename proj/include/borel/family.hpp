#ifndef BOREL_FAMILY_HPP
#define BOREL_FAMILY_HPP

// Linear posets, principal L-Borel ideals and ordered families of them.

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "borel.hpp"

namespace borel {

/// The linear poset whose support U is ordered x_i > x_j for i < j; everything
/// outside U is incomparable. An empty or one-element support is the antichain.
struct LinearPoset {
  std::vector<std::size_t> support; // ascending, 1-based

  LinearPoset() = default;
  explicit LinearPoset(std::vector<std::size_t> vars) : support(std::move(vars)) {
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
      throw InvalidArgument("linear poset support lists a variable twice");
  }

  static LinearPoset full(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    return LinearPoset(std::move(all));
  }

  bool contains(std::size_t i) const { return std::binary_search(support.begin(), support.end(), i); }

  /// x_j <_L x_i.
  bool below(std::size_t j, std::size_t i) const { return i < j && contains(i) && contains(j); }

  friend bool operator==(const LinearPoset&, const LinearPoset&) = default;
};

/// L-Borel(m): write m = m1*m2 with m1 on the support, then {m2 * n : n in Borel(m1)},
/// the Borel closure taken inside K[support]. Ascending grevlex.
inline std::vector<Monomial> lborel_closure(const LinearPoset& L, const Monomial& m) {
  for (std::size_t v : L.support) Monomial::check_index(m.num_vars(), v);
  auto [on, off] = split_on(m, L.support);
  std::vector<Monomial> out;
  for (const auto& g : borel_closure(project(on, L.support)))
    out.push_back(off * embed(g, L.support, m.num_vars()));
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

/// Variables dividing some generator whose exponent is not the same in all of them.
inline std::vector<std::size_t> essential_variables(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw InvalidArgument("essential_variables: empty generator set");
  const Monomial& first = gens.front();
  for (const auto& g : gens) {
    detail::check_same_ambient(g, first);
    if (g.degree() != first.degree())
      throw InvalidArgument("essential_variables: generators are not all of one degree");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= first.num_vars(); ++i) {
    Exponent lo = first.exponent(i), hi = lo;
    for (const auto& g : gens) {
      lo = std::min(lo, g.exponent(i));
      hi = std::max(hi, g.exponent(i));
    }
    if (hi > 0 && lo != hi) out.push_back(i);
  }
  return out;
}

struct FamilyEntry {
  std::string name;
  LinearPoset poset;
  Monomial generator;

  friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

/// Ordered family I_1..I_r of principal L-Borel ideals in K[x1..xn]; entry i is t_{i+1}.
struct IdealFamily {
  std::size_t n = 0;
  std::vector<FamilyEntry> entries;

  std::size_t size() const { return entries.size(); }

  void validate() const {
    if (entries.empty()) throw InvalidArgument("family has no ideals");
    for (const auto& e : entries) {
      if (e.generator.num_vars() != n)
        throw InvalidArgument("ideal " + e.name + ": generator lives in the wrong ring");
      if (e.generator.is_unit()) throw InvalidArgument("ideal " + e.name + ": generator is 1");
      for (std::size_t v : e.poset.support) Monomial::check_index(n, v);
    }
  }

  std::vector<Monomial> generators(std::size_t block) const {
    return lborel_closure(entry(block).poset, entry(block).generator);
  }

  std::vector<std::size_t> essential(std::size_t block) const {
    return essential_variables(generators(block));
  }

  /// 1-based block access.
  const FamilyEntry& entry(std::size_t block) const {
    if (block < 1 || block > entries.size())
      throw InvalidArgument("block index " + std::to_string(block) + " out of range");
    return entries[block - 1];
  }

  /// Single principal Borel ideal on all of x1..xn.
  static IdealFamily principal(const Monomial& M, std::string name = "I1") {
    IdealFamily f;
    f.n = M.num_vars();
    f.entries.push_back({std::move(name), LinearPoset::full(f.n), M});
    return f;
  }

  friend bool operator==(const IdealFamily&, const IdealFamily&) = default;
};

struct ReducedFamily {
  IdealFamily family;
  std::vector<Monomial> stripped; // per block, M_i = M'_i * stripped_i

  bool trivial() const {
    return std::all_of(stripped.begin(), stripped.end(), [](const Monomial& m) { return m.is_unit(); });
  }
};

/// Replaces each (L_i, M_i) by (L_{E_i}, M'_i) where M'_i is the part of M_i on the
/// essential variables E_i. The ideals change by the monomial factor only, which
/// leaves the multi-Rees algebra unchanged up to isomorphism.
inline ReducedFamily reduce_family(const IdealFamily& family) {
  family.validate();
  ReducedFamily out;
  out.family.n = family.n;
  for (std::size_t b = 1; b <= family.size(); ++b) {
    const auto& e = family.entry(b);
    auto E = family.essential(b);
    auto [on, off] = split_on(e.generator, E);
    out.family.entries.push_back({e.name, LinearPoset(E), on});
    out.stripped.push_back(off);
  }
  return out;
}

inline bool is_reduced(const IdealFamily& family) { return reduce_family(family).family == family; }

// ---- family files ---------------------------------------------------------
//
//   # comment
//   vars = 4
//   ideal I1: support = x3,x4 ; generator = x3*x4^2

inline std::string to_string(const LinearPoset& L) {
  std::string out;
  for (std::size_t v : L.support) {
    if (!out.empty()) out += ',';
    out += 'x' + std::to_string(v);
  }
  return out;
}

inline std::string format_family(const IdealFamily& f) {
  std::string out = "vars = " + std::to_string(f.n) + "\n";
  for (const auto& e : f.entries)
    out += "ideal " + e.name + ": support = " + to_string(e.poset) + " ; generator = " +
           to_string(e.generator) + "\n";
  return out;
}

namespace detail {

struct LineCursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, pos + 1); }
  void expect(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  std::string_view until(char stop) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != stop) ++pos;
    return text.substr(start, pos - start);
  }
};

inline std::vector<std::size_t> parse_support(LineCursor& c, std::size_t n) {
  std::vector<std::size_t> vars;
  c.skip_ws();
  if (c.pos < c.text.size() && c.text[c.pos] == ';') return vars;
  while (true) {
    c.skip_ws();
    if (c.pos >= c.text.size() || c.text[c.pos] != 'x') c.fail("expected a variable");
    std::size_t col = c.pos;
    ++c.pos;
    auto v = parse_uint<std::size_t>(c.text, c.pos, 0, c.line, "variable index");
    if (v < 1 || v > n)
      throw ParseError("variable x" + std::to_string(v) + " outside x1..x" + std::to_string(n), c.line,
                       col + 1);
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      throw ParseError("variable x" + std::to_string(v) + " listed twice", c.line, col + 1);
    vars.push_back(v);
    c.skip_ws();
    if (c.pos < c.text.size() && c.text[c.pos] == ',') {
      ++c.pos;
      continue;
    }
    return vars;
  }
}

} // namespace detail

inline IdealFamily parse_family(std::string_view text) {
  IdealFamily f;
  bool have_vars = false;
  std::size_t line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = text.substr(line_start, nl == std::string_view::npos ? text.npos : nl - line_start);
    line_start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    detail::LineCursor c{line, 0, line_no};
    if (c.at_end() || line[c.pos] == '#') continue;

    if (!have_vars) {
      c.expect("vars");
      c.expect("=");
      c.skip_ws();
      f.n = detail::parse_uint<std::size_t>(line, c.pos, 0, line_no, "variable count");
      if (f.n == 0) throw ParseError("variable count must be positive", line_no, c.pos);
      if (!c.at_end()) c.fail("unexpected text after variable count");
      have_vars = true;
      continue;
    }

    c.expect("ideal");
    c.skip_ws();
    std::size_t name_start = c.pos;
    while (c.pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[c.pos])) || line[c.pos] == '_' || line[c.pos] == '-'))
      ++c.pos;
    if (c.pos == name_start) c.fail("expected an ideal name");
    std::string name(line.substr(name_start, c.pos - name_start));
    for (const auto& e : f.entries)
      if (e.name == name) throw ParseError("duplicate ideal name '" + name + "'", line_no, name_start + 1);
    c.expect(":");
    c.expect("support");
    c.expect("=");
    auto support = detail::parse_support(c, f.n);
    c.expect(";");
    c.expect("generator");
    c.expect("=");
    std::size_t gen_col = c.pos;
    auto gen_text = c.until('#');
    Monomial gen = parse_monomial(gen_text, f.n, 1, line_no, gen_col);
    if (gen.is_unit()) throw ParseError("generator must not be 1", line_no, gen_col + 1);
    f.entries.push_back({std::move(name), LinearPoset(std::move(support)), std::move(gen)});
  }
  if (!have_vars) throw ParseError("missing 'vars = N' header", line_no, 1);
  if (f.entries.empty()) throw ParseError("family has no ideals", line_no, 1);
  return f;
}

inline IdealFamily read_family(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str());
}

} // namespace borel

#endif
