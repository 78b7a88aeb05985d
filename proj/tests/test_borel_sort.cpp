#include <gtest/gtest.h>

#include "borel/borel_sort.hpp"
#include "oracles.hpp"

using namespace borel;

namespace {

Monomial mono(const char* s, std::size_t n = 4) { return parse_monomial(s, n); }
Monomial mono0(const char* s) { return parse_monomial(s, 5, 0); }

std::vector<std::string> texts(const SortResult& r, std::size_t base = 1) {
  std::vector<std::string> out;
  for (const auto& f : r.factors) out.push_back(to_string(f, base));
  return out;
}

} // namespace

TEST(Split, TableauxExample) {
  auto M = mono0("x1*x3^2*x4^2");
  // x_4 is index 5 here since x0 is the first variable.
  EXPECT_EQ(to_string(split_monomial(M, 5, 0, SplitMode::up), 0), "x1*x3^4");
  // degree 4, as the split requires
  EXPECT_EQ(to_string(split_monomial(M, 5, 0, SplitMode::down), 0), "x1*x3^3");
  EXPECT_EQ(split_monomial(mono("x1*x2", 2), 2, 1, SplitMode::left), mono("x1", 2));
}

TEST(Split, IsTheBorelLeastChoice) {
  // Brute force: among elements of Borel(M) avoiding x_{s+1}.. with x_s-exponent e,
  // the split value (times x_s^e) is below all of them, i.e. each is in its closure.
  for (const char* Ms : {"x1*x3^2*x4", "x2^2*x3*x4", "x2*x4^2", "x3^3"}) {
    Monomial M = mono(Ms);
    auto cl = borel_closure(M);
    for (std::size_t s = 2; s <= 4; ++s)
      for (Exponent e = 0; e <= sigma(M, s); ++e) {
        Monomial g = split_monomial(M, s, e, SplitMode::left) * Monomial::variable(4, s, e);
        ASSERT_TRUE(std::find(cl.begin(), cl.end(), g) != cl.end());
        for (const auto& c : cl) {
          if (c.exponent(s) != e || c.max_index() > s) continue;
          EXPECT_TRUE(borel_member(c, g)) << Ms << " s=" << s << " e=" << e;
        }
      }
  }
}

TEST(Split, Errors) {
  EXPECT_THROW(split_monomial(mono("x1*x2"), 1, 0, SplitMode::up), InvalidArgument);
  EXPECT_THROW(split_monomial(mono("x1*x2"), 2, 1, SplitMode::down), InvalidArgument);
}

TEST(Sort, TableauxExample) {
  auto r = borel_sort(mono0("x1*x3^2*x4^2"), mono0("x0^2*x1^5*x2^13*x3^7*x4^3"), 6);
  std::vector<std::string> want{"x1*x2^2*x3^2", "x1*x2^2*x3^2", "x1*x2*x3^3",
                                "x1^2*x2^2*x4", "x0*x2^3*x4",   "x0*x2^3*x4"};
  EXPECT_EQ(texts(r, 0), want);
}

TEST(Sort, SmallCases) {
  auto r = borel_sort(mono("x1", 2), mono("x1^3", 2), 3);
  EXPECT_EQ(texts(r), (std::vector<std::string>{"x1", "x1", "x1"}));
  auto r2 = borel_sort(mono("x1*x2", 2), mono("x1^2*x2^2", 2), 2);
  EXPECT_EQ(texts(r2), (std::vector<std::string>{"x1*x2", "x1*x2"}));
  auto r3 = borel_sort(mono("x2^2", 2), mono("x2^4", 2), 2);
  EXPECT_EQ(texts(r3), (std::vector<std::string>{"x2^2", "x2^2"}));
  EXPECT_THROW(borel_sort(mono("x1*x2", 2), mono("x2^4", 2), 2), InvalidArgument);
  EXPECT_THROW(borel_sort(mono("x1*x2", 2), mono("x1^2*x2^2", 2), 0), InvalidArgument);
}

// Exhaustive: the three output invariants and agreement with the lex-minimal
// factorization found by brute force.
TEST(Sort, ExhaustiveInvariantsAndLexMin) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& M : oracle::all_monomials(n, d)) {
        auto gens = borel_closure(M);
        for (Exponent k = 1; k <= 2; ++k)
          for (const auto& mu : borel_closure(power(M, k))) {
            auto r = borel_sort(M, mu, k);
            ASSERT_EQ(r.factors.size(), k);
            EXPECT_EQ(r.product(), mu);
            for (std::size_t i = 0; i < r.factors.size(); ++i) {
              EXPECT_TRUE(borel_member(r.factors[i], M));
              if (i > 0) EXPECT_TRUE(compare(r.factors[i - 1], r.factors[i], Order::grevlex) >= 0);
            }
            auto want = oracle::lex_min_factorization(gens, mu, k);
            ASSERT_TRUE(want.has_value());
            EXPECT_EQ(r.factors, *want) << to_string(M) << " " << to_string(mu);
            ++checked;
          }
      }
  EXPECT_GT(checked, 200u);
}
