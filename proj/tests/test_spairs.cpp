#include <gtest/gtest.h>

#include <fstream>

#include "borel/fibers.hpp"
#include "borel/quadrics.hpp"
#include "borel/spairs.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace borel;

namespace {

Monomial mono(const char* s, std::size_t n = 4) { return parse_monomial(s, n); }

IdealFamily load(const char* name) {
  std::ifstream in(std::string(BOREL_DATA_DIR) + "/" + name);
  return read_family(in);
}

} // namespace

TEST(SPairs, PrincipalSets) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& M : oracle::all_monomials(n, d)) {
        EXPECT_TRUE(verify_groebner_by_spairs(quadrics_single(M), TermOrder::single()).pass()) << to_string(M);
        EXPECT_TRUE(verify_groebner_by_spairs(quadrics_bs_form(M), TermOrder::single()).pass()) << to_string(M);
      }
  auto rep = verify_groebner_by_spairs(quadrics_single(mono("x2^2*x4")), TermOrder::single());
  EXPECT_TRUE(rep.pass());
  EXPECT_GT(rep.pairs, 0u);
}

TEST(SPairs, TriangleLeavesACubic) {
  auto q = quadrics_multi(load("triangle.fam")).all();
  auto rep = verify_groebner_by_spairs(q, TermOrder::multi());
  ASSERT_FALSE(rep.pass());
  const auto& r = rep.failure->remainder;
  EXPECT_EQ(r.lhs.total_degree(), 3u);
  EXPECT_EQ(to_string(r), "x2*T[t2:x1]*T[t3:x3] - x1*T[t2:x3]*T[t3:x2]");
  // the remainder lies in the toric ideal: both sides have one image
  EXPECT_NO_THROW(check_homogeneous(r, ToricContext::from_family(load("triangle.fam"), true)));
  auto text = format_report(rep, q);
  EXPECT_EQ(text.substr(0, 26), "# certificate: s-pairs (1 ");
  EXPECT_EQ(text.substr(text.size() - 5), "FAIL\n");
}

TEST(SPairs, FamiliesFromData) {
  for (const char* name : {"four_ideals.fam", "five_ideals.fam"}) {
    auto q = quadrics_multi(load(name));
    EXPECT_TRUE(verify_groebner_by_spairs(q.all(), TermOrder::multi()).pass()) << name;
    EXPECT_TRUE(verify_groebner_by_spairs(q.fiber(), TermOrder::multi()).pass()) << name;
  }
}

TEST(SPairs, AgreesWithFibers) {
  // S-pairs pass => every fiber has one sink; a fiber with two sinks => S-pairs fail.
  std::mt19937 rng(61);
  int passes = 0, fails = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto f = gen::random_family(rng, 3, 1 + trial % 3, 2);
    auto q = quadrics_multi(f).all();
    auto ctx = ToricContext::from_family(f, true);
    bool sp = verify_groebner_by_spairs(q, TermOrder::multi()).pass();
    bool fb = verify_groebner_by_fibers(ctx, q, TermOrder::multi(), {3, 1, false, {}}).pass();
    if (sp) EXPECT_TRUE(fb) << format_family(f);
    if (!fb) EXPECT_FALSE(sp) << format_family(f);
    (sp ? passes : fails)++;
  }
  EXPECT_GT(passes, 0);
}

TEST(SPairs, ReductionBasics) {
  auto qs = quadrics_single(mono("x2^2", 2));
  const auto& b = qs.front();
  EXPECT_FALSE(reduce_binomial(b.lhs, b.rhs, qs, TermOrder::single()));
  EXPECT_FALSE(reduce_binomial(b.rhs, b.rhs, {}, TermOrder::single()));
  auto left = reduce_binomial(b.lhs, b.rhs, {}, TermOrder::single());
  ASSERT_TRUE(left);
  EXPECT_EQ(*left, b);
  EXPECT_THROW(reduce_binomial(b.lhs, b.rhs, qs, TermOrder::single(), 0), ResourceLimit);
}

TEST(SPairs, PairCap) {
  auto q = quadrics_multi(load("four_ideals.fam")).all();
  EXPECT_THROW(verify_groebner_by_spairs(q, TermOrder::multi(), 10), ResourceLimit);
}
