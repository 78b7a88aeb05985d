#ifndef BOREL_MONOMIAL_HPP
#define BOREL_MONOMIAL_HPP

// Dense exponent-vector monomials over a fixed ambient variable count n.
// Variables are x1..xn in the API (1-based) and stored 0-based.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace borel {

using Exponent = std::uint32_t;
using Degree = std::uint64_t;

enum class Order { grevlex, lex };

class Monomial {
public:
  Monomial() = default;

  /// The unit monomial in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}

  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (Exponent e : exps_) degree_ += e;
  }

  /// x_i^e in n variables.
  static Monomial variable(std::size_t n, std::size_t i, Exponent e = 1) {
    check_index(n, i);
    Monomial m(n);
    m.exps_[i - 1] = e;
    m.degree_ = e;
    return m;
  }

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Degree degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  /// Exponent of x_i, 1 <= i <= n.
  Exponent exponent(std::size_t i) const {
    check_index(exps_.size(), i);
    return exps_[i - 1];
  }

  /// Raw 0-based exponents.
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  /// Largest index whose variable divides the monomial, 0 for the unit.
  std::size_t max_index() const noexcept {
    for (std::size_t i = exps_.size(); i > 0; --i)
      if (exps_[i - 1] != 0) return i;
    return 0;
  }

  /// Indices (1-based, ascending) of the variables dividing the monomial.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) out.push_back(i + 1);
    return out;
  }

  Monomial with_exponent(std::size_t i, Exponent e) const {
    check_index(exps_.size(), i);
    Monomial m = *this;
    m.degree_ = m.degree_ - m.exps_[i - 1] + e;
    m.exps_[i - 1] = e;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  static void check_index(std::size_t n, std::size_t i) {
    if (i < 1 || i > n)
      throw InvalidArgument("variable index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
  }

private:
  std::vector<Exponent> exps_;
  Degree degree_ = 0;
};

namespace detail {

inline void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw InvalidArgument("monomials live in different rings (" + std::to_string(a.num_vars()) +
                          " vs " + std::to_string(b.num_vars()) + " variables)");
}

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw InvalidArgument("exponent overflow");
  return out;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("exponent overflow");
  return out;
}

} // namespace detail

/// sigma_i(m) = a_i + a_{i+1} + ... + a_n.
inline Degree sigma(const Monomial& m, std::size_t i) {
  Monomial::check_index(m.num_vars(), i);
  Degree s = 0;
  const auto& e = m.exponents();
  for (std::size_t j = i - 1; j < e.size(); ++j) s += e[j];
  return s;
}

/// All tail sums at once: out[i-1] = sigma_i(m).
inline std::vector<Degree> sigma_vector(const Monomial& m) {
  const auto& e = m.exponents();
  std::vector<Degree> out(e.size(), 0);
  Degree s = 0;
  for (std::size_t j = e.size(); j > 0; --j) {
    s += e[j - 1];
    out[j - 1] = s;
  }
  return out;
}

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, Order order) {
  detail::check_same_ambient(a, b);
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  if (order == Order::lex) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return x[i] <=> y[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Same degree: the one with the smaller exponent on the last differing variable is larger.
  for (std::size_t i = x.size(); i > 0; --i)
    if (x[i - 1] != y[i - 1]) return y[i - 1] <=> x[i - 1];
  return std::strong_ordering::equal;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, Order::grevlex) < 0;
  }
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, Order::grevlex) > 0;
  }
};

inline bool divides(const Monomial& m, const Monomial& mu) {
  detail::check_same_ambient(m, mu);
  const auto& x = m.exponents();
  const auto& y = mu.exponents();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = detail::checked_add(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

/// a / b; b must divide a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw InvalidArgument("quotient: divisor does not divide dividend");
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents()[i] - b.exponents()[i];
  return Monomial(std::move(e));
}

inline Monomial power(const Monomial& m, Exponent k) {
  std::vector<Exponent> e(m.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_mul(m.exponents()[i], k);
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

/// (x_i / x_j) * m. A Borel move when i < j, a reverse Borel move when i > j.
inline Monomial apply_move(const Monomial& m, std::size_t i, std::size_t j) {
  Monomial::check_index(m.num_vars(), i);
  Monomial::check_index(m.num_vars(), j);
  if (i == j) throw InvalidArgument("apply_move: i and j must differ");
  if (m.exponent(j) == 0)
    throw InvalidArgument("apply_move: x" + std::to_string(j) + " does not divide the monomial");
  std::vector<Exponent> e = m.exponents();
  e[j - 1] -= 1;
  e[i - 1] = detail::checked_add(e[i - 1], 1);
  return Monomial(std::move(e));
}

/// Keeps only the variables in `vars` (1-based, ascending), renumbered 1..|vars|.
inline Monomial project(const Monomial& m, const std::vector<std::size_t>& vars) {
  std::vector<Exponent> e;
  e.reserve(vars.size());
  for (std::size_t v : vars) e.push_back(m.exponent(v));
  return Monomial(std::move(e));
}

/// Inverse of project: places the k-th exponent of `m` on variable vars[k] of an n-variable ring.
inline Monomial embed(const Monomial& m, const std::vector<std::size_t>& vars, std::size_t n) {
  if (m.num_vars() != vars.size()) throw InvalidArgument("embed: variable list size mismatch");
  std::vector<Exponent> e(n, 0);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    Monomial::check_index(n, vars[k]);
    e[vars[k] - 1] = m.exponents()[k];
  }
  return Monomial(std::move(e));
}

/// Splits m into (part on vars, part off vars).
inline std::pair<Monomial, Monomial> split_on(const Monomial& m, const std::vector<std::size_t>& vars) {
  std::vector<Exponent> on(m.num_vars(), 0), off = m.exponents();
  for (std::size_t v : vars) {
    Monomial::check_index(m.num_vars(), v);
    on[v - 1] = off[v - 1];
    off[v - 1] = 0;
  }
  return {Monomial(std::move(on)), Monomial(std::move(off))};
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.num_vars() * 0x9e3779b97f4a7c15ULL;
    for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

// Text grammar:  monomial := "1" | factor ("*" factor)* ;  factor := "x" INT ("^" INT)?
// `base` is the index of the first variable (1 by default; 0 allows x0..x{n-1}).

inline std::string to_string(const Monomial& m, std::size_t base = 1) {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + base);
    if (e[i] >= 2) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  return out;
}

namespace detail {

/// Parses an unsigned decimal at text[pos]; advances pos.
template <typename Int>
Int parse_uint(std::string_view text, std::size_t& pos, std::size_t column_offset, std::size_t line,
               const char* what) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (start == pos)
    throw ParseError(std::string("expected ") + what, line, column_offset + start + 1);
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc{}) throw ParseError(std::string(what) + " too large", line, column_offset + start + 1);
  return value;
}

} // namespace detail

/// Parses a monomial in n variables. `line` and `column_offset` only affect error positions.
inline Monomial parse_monomial(std::string_view text, std::size_t n, std::size_t base = 1,
                               std::size_t line = 0, std::size_t column_offset = 0) {
  // Surrounding whitespace is tolerated; none is allowed inside.
  std::size_t lead = 0;
  while (lead < text.size() && (text[lead] == ' ' || text[lead] == '\t')) ++lead;
  column_offset += lead;
  text.remove_prefix(lead);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty monomial", line, column_offset + 1);
  if (text == "1") return Monomial(n);

  std::vector<Exponent> e(n, 0);
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] != 'x')
      throw ParseError("expected 'x'", line, column_offset + pos + 1);
    std::size_t var_col = pos;
    ++pos;
    auto index = detail::parse_uint<std::size_t>(text, pos, column_offset, line, "variable index");
    if (index < base || index - base >= n)
      throw ParseError("variable x" + std::to_string(index) + " outside x" + std::to_string(base) +
                           "..x" + std::to_string(base + n - 1),
                       line, column_offset + var_col + 1);
    Exponent exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = detail::parse_uint<Exponent>(text, pos, column_offset, line, "exponent");
    }
    e[index - base] = detail::checked_add(e[index - base], exp);
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", line, column_offset + pos + 1);
    ++pos;
  }
  return Monomial(std::move(e));
}

} // namespace borel

#endif
