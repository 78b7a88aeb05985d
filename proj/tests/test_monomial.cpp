#include <gtest/gtest.h>

#include <random>

#include "borel/monomial.hpp"
#include "oracles.hpp"

using namespace borel;

namespace {

Monomial mono(const char* s, std::size_t n = 4) { return parse_monomial(s, n); }

} // namespace

TEST(Sigma, TailSums) {
  EXPECT_EQ(sigma(mono("x2^2*x4"), 2), 3u);
  EXPECT_EQ(sigma(Monomial(4), 3), 0u);
  EXPECT_EQ(sigma(mono("x1^2*x2*x3"), 3), 1u);
  EXPECT_THROW(sigma(mono("x1"), 0), InvalidArgument);
  EXPECT_THROW(sigma(mono("x1"), 5), InvalidArgument);
}

TEST(Sigma, FirstIsDegreeAndDecreasing) {
  for (unsigned d = 0; d <= 4; ++d)
    for (const auto& m : oracle::all_monomials(4, d)) {
      EXPECT_EQ(sigma(m, 1), m.degree());
      for (std::size_t i = 1; i < 4; ++i) EXPECT_GE(sigma(m, i), sigma(m, i + 1));
      auto v = sigma_vector(m);
      for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(v[i - 1], sigma(m, i));
    }
}

TEST(Compare, KnownPairs) {
  EXPECT_EQ(compare(mono("x1^2*x4"), mono("x2^2*x3"), Order::grevlex), std::strong_ordering::less);
  EXPECT_EQ(compare(mono("x2^2*x3"), mono("x1^2*x4"), Order::lex), std::strong_ordering::less);
  auto m = mono("x1*x3^2");
  EXPECT_EQ(compare(m, m, Order::grevlex), std::strong_ordering::equal);
  EXPECT_EQ(compare(m, m, Order::lex), std::strong_ordering::equal);
  EXPECT_THROW(compare(mono("x1", 3), mono("x1", 4), Order::lex), InvalidArgument);
}

TEST(Compare, GrevlexMatchesDefinition) {
  std::vector<Monomial> all;
  for (unsigned d = 0; d <= 3; ++d)
    for (auto& m : oracle::all_monomials(3, d)) all.push_back(m);
  for (const auto& a : all)
    for (const auto& b : all) {
      bool gt = oracle::grevlex_greater(a, b);
      EXPECT_EQ(compare(a, b, Order::grevlex) > 0, gt) << to_string(a) << " " << to_string(b);
    }
}

TEST(Compare, BothOrdersRefineBorelMoves) {
  for (const auto& m : oracle::all_monomials(4, 3))
    for (std::size_t j = 2; j <= 4; ++j)
      for (std::size_t i = 1; i < j; ++i) {
        if (m.exponent(j) == 0) continue;
        auto up = apply_move(m, i, j);
        EXPECT_TRUE(compare(m, up, Order::grevlex) < 0);
        EXPECT_TRUE(compare(m, up, Order::lex) < 0);
      }
}

TEST(Divides, Basics) {
  EXPECT_TRUE(divides(mono("x1*x2*x3"), mono("x1^2*x2*x3")));
  EXPECT_FALSE(divides(mono("x3*x4^2"), mono("x1^2*x2*x3")));
  EXPECT_TRUE(divides(Monomial(4), mono("x2")));
}

TEST(ApplyMove, Arithmetic) {
  EXPECT_EQ(apply_move(mono("x1*x2*x3"), 1, 3), mono("x1^2*x2"));
  EXPECT_EQ(apply_move(mono("x2^2*x4"), 4, 2), mono("x2*x4^2"));
  EXPECT_THROW(apply_move(mono("x1^2"), 2, 3), InvalidArgument);
  EXPECT_THROW(apply_move(mono("x1^2"), 1, 1), InvalidArgument);
  EXPECT_THROW(apply_move(mono("x1^2"), 1, 7), InvalidArgument);
}

TEST(ApplyMove, PreservesDegreeAndInverts) {
  for (const auto& m : oracle::all_monomials(4, 3))
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = 1; j <= 4; ++j) {
        if (i == j || m.exponent(j) == 0) continue;
        auto moved = apply_move(m, i, j);
        EXPECT_EQ(moved.degree(), m.degree());
        EXPECT_EQ(apply_move(moved, j, i), m);
      }
}

TEST(Arithmetic, Overflow) {
  Monomial big = Monomial::variable(2, 1, std::numeric_limits<Exponent>::max());
  EXPECT_THROW(big * mono("x1", 2), InvalidArgument);
  EXPECT_THROW(power(mono("x1^70000", 2), 70000), InvalidArgument);
  EXPECT_EQ(power(mono("x1*x2^2", 2), 3), mono("x1^3*x2^6", 2));
  EXPECT_EQ(quotient(mono("x1^3*x2"), mono("x1")), mono("x1^2*x2"));
  EXPECT_THROW(quotient(mono("x1"), mono("x2")), InvalidArgument);
  EXPECT_EQ(gcd(mono("x1^3*x2"), mono("x1*x3")), mono("x1"));
  EXPECT_EQ(lcm(mono("x1^3*x2"), mono("x1*x3")), mono("x1^3*x2*x3"));
}

TEST(Text, RoundTrip) {
  EXPECT_EQ(to_string(mono("x1*x3^2*x4^2")), "x1*x3^2*x4^2");
  EXPECT_EQ(to_string(mono("x4*x1")), "x1*x4");
  EXPECT_EQ(to_string(mono("x2^1")), "x2");
  EXPECT_EQ(to_string(mono("1")), "1");
  EXPECT_EQ(to_string(mono("x1*x1")), "x1^2");
  auto m = parse_monomial("x0^2*x1^5*x2^13*x3^7*x4^3", 5, 0);
  EXPECT_EQ(m.exponent(1), 2u);
  EXPECT_EQ(to_string(m, 0), "x0^2*x1^5*x2^13*x3^7*x4^3");

  std::mt19937 rng(7);
  std::uniform_int_distribution<Exponent> ex(0, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Exponent> e(5);
    for (auto& x : e) x = ex(rng);
    Monomial r(e);
    EXPECT_EQ(parse_monomial(to_string(r), 5), r);
  }
}

TEST(Text, Errors) {
  auto column_of = [](const char* s, std::size_t n) -> std::size_t {
    try {
      parse_monomial(s, n);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  EXPECT_EQ(column_of("x1*y2", 4), 4u);
  EXPECT_EQ(column_of("x5", 4), 1u);
  EXPECT_EQ(column_of("x1^", 4), 4u);
  EXPECT_EQ(column_of("x1 x2", 4), 3u);
  EXPECT_EQ(column_of("", 4), 1u);
  EXPECT_EQ(column_of("x0", 4), 1u);
  EXPECT_THROW(parse_monomial("x1^99999999999", 2), ParseError);
}

TEST(ProjectEmbed, RoundTrip) {
  auto m = mono("x1*x3^2*x4");
  std::vector<std::size_t> vars{3, 4};
  auto p = project(m, vars);
  EXPECT_EQ(p, mono("x1^2*x2", 2));
  EXPECT_EQ(embed(p, vars, 4), mono("x3^2*x4"));
  auto [on, off] = split_on(m, vars);
  EXPECT_EQ(on, mono("x3^2*x4"));
  EXPECT_EQ(off, mono("x1"));
}
