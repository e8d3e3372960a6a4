#include <gtest/gtest.h>

#include "lagrangian/error.hpp"
#include "lagrangian/generators.hpp"
#include "lagrangian/theorems.hpp"
#include "oracles.hpp"

using namespace lagrangian;
using enum TheoremId;

namespace {

TheoremParams with_t(int t, std::optional<int> r = {}) {
  TheoremParams p;
  p.t = t;
  p.r = r;
  return p;
}

Rational fact(int n) { return n <= 1 ? Rational(1) : Rational(n) * fact(n - 1); }

// L of K_t^T at the uniform point, the level base weighted 1 and every other
// level weighted by `alpha`, via the subset oracle.
Rational uniform_value(int t, const std::vector<int>& types, const std::function<Rational(int)>& alpha) {
  return oracle::complete_value(t, types, alpha);
}

}  // namespace

TEST(Registry, NamesRoundTrip) {
  EXPECT_EQ(all_theorems().size(), 20u);
  for (auto id : all_theorems()) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_EQ(to_string(TWO_R_T6a), "TWO_R_T6a");
  EXPECT_THROW(parse_theorem_id("T99"), InputError);
}

TEST(TheoremParamsJson, Parse) {
  auto p = theorem_params_from_json(nlohmann::json::parse(R"({"t": 5, "r": 3, "alpha": {"3": 6}, "types": "1,3"})"));
  EXPECT_EQ(*p.t, 5);
  EXPECT_EQ(p.coefficient(3), Rational(6));
  EXPECT_EQ(p.coefficient(2), Rational(1));
  EXPECT_EQ(*p.types, (EdgeTypeSet{1, 3}));
  EXPECT_THROW(theorem_params_from_json(nlohmann::json::parse(R"({"alpha": {"3": -1}})")), InputError);
  EXPECT_THROW(theorem_params_from_json(nlohmann::json::parse("[]")), InputError);
}

TEST(ClosedForm, AgreesWithUniformCliqueValues) {
  for (int t = 3; t <= 8; ++t) {
    auto one = [](int) { return Rational(1); };
    EXPECT_EQ(closed_form_exact(MS_T1, with_t(t)), uniform_value(t, {2}, one));
    EXPECT_EQ(closed_form_exact(NONUNIF_T3, with_t(t)), uniform_value(t, {1, 2}, [](int r) {
                return r == 2 ? Rational(2) : Rational(1);
              }));
    for (int r = 3; r <= std::min(t, 5); ++r) {
      auto p = with_t(t, r);
      p.alpha[r] = Rational(7, 3);
      auto a = [&](int s) { return s == r ? Rational(7, 3) : Rational(1); };
      EXPECT_EQ(closed_form_exact(ONE_R_T4, p), uniform_value(t, {1, r}, a));
      EXPECT_EQ(closed_form_exact(TWO_R_T6a, p), uniform_value(t, {2, r}, a));
      EXPECT_EQ(closed_form_exact(TWO_R_EDGES_T7a, p), uniform_value(t, {2, r}, a));
      EXPECT_EQ(closed_form_exact(ONE_TWO_R_T6b, p), uniform_value(t, {1, 2, r}, a));
      // lambda' forms are r! times the level density sums.
      auto lp = [](int s) { return fact(s); };
      EXPECT_EQ(closed_form_exact(COR1a, with_t(t, r)), uniform_value(t, {2, r}, lp));
      EXPECT_EQ(closed_form_exact(COR1b, with_t(t, r)), uniform_value(t, {1, 2, r}, lp));
      EXPECT_EQ(lambda_prime_closed(COR1a, t, r), uniform_value(t, {2, r}, lp));
      EXPECT_EQ(lambda_prime_closed(MIXED_T10a, t, r), uniform_value(t, {2, r}, lp));
      EXPECT_EQ(closed_form_exact(PTZ, with_t(t, r)), uniform_value(t, {r}, one));
    }
    EXPECT_EQ(lambda_prime_closed(MIXED_T10b, t, 3), uniform_value(t, {1, 3}, [](int s) { return fact(s); }));
    EXPECT_EQ(closed_form_exact(PZ, with_t(t)), uniform_value(t, {3}, one));
  }
}

TEST(ClosedForm, PublishedValues) {
  auto p4 = with_t(5, 3);
  p4.alpha[3] = 6;
  EXPECT_EQ(closed_form_exact(ONE_R_T4, p4), Rational(37, 25));  // 1.48
  EXPECT_EQ(closed_form_exact(ONE_TWO_THREE_T5, with_t(3)), Rational(37, 27));
  EXPECT_EQ(closed_form_exact(TWO_R_T6a, with_t(4, 3)), Rational(7, 16));  // 0.4375
  EXPECT_EQ(lambda_prime_of_complete(4, {2, 3}), Rational(9, 8));
  EXPECT_EQ(lambda_prime_of_complete(4, {1, 3}), Rational(11, 8));  // 1.375
  EXPECT_EQ(closed_form_exact(COR2a, with_t(4, 3)), Rational(9, 8));
  EXPECT_EQ(closed_form_exact(MIXED_T10b, with_t(4)), Rational(11, 8));
  EXPECT_THROW(lambda_prime_closed(COR1a, 2, 3), InputError);
  EXPECT_THROW(closed_form_exact(ONE_R_T4, TheoremParams{}), InputError);
}

TEST(Hypotheses, T4Threshold) {
  // alpha_3 = 6 gives the threshold ceil((6-1)^1 / (1 * 6^0)) = 5.
  TheoremParams p;
  p.alpha[3] = 6;
  auto k5 = complete(5, {1, 3});
  auto rep = check_hypotheses(ONE_R_T4, k5, p);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.t, 5);
  auto k4 = complete(4, {1, 3});
  EXPECT_FALSE(check_hypotheses(ONE_R_T4, k4, p).ok);
}

TEST(Hypotheses, T3NeedsFullPairClique) {
  // A triangle with only {1} as singleton: the {1,2}-clique has order 1, but
  // weight 1/2 on two vertices already reaches 2*(1/4) + 1/2 + ... > 2 - 1/1.
  auto h = validate(3, {{1}, {1, 2}, {1, 3}, {2, 3}});
  auto rep = check_hypotheses(NONUNIF_T3, h, {});
  EXPECT_FALSE(rep.ok);
  auto v = verify(NONUNIF_T3, h, {});
  EXPECT_FALSE(v.pass);
  EXPECT_GT(v.numerical, v.closed_form);
}

TEST(Hypotheses, ReportsEveryFailure) {
  auto rep = check_hypotheses(MS_T1, complete(3, {2, 3}), {});
  EXPECT_FALSE(rep.ok);
  bool saw = false;
  for (const auto& c : rep.conditions)
    if (c.name == "edge types") saw = !c.ok;
  EXPECT_TRUE(saw);
}

TEST(Hypotheses, ExplicitTRequired) {
  EXPECT_THROW(check_hypotheses(TPZZ, complete(4, {3}), {}), InputError);
  EXPECT_THROW(check_hypotheses(MIXED_T10c, complete(4, {3}), {}), InputError);
}

TEST(Verify, MotzkinStrausOnCliques) {
  for (int t = 2; t <= 6; ++t) {
    auto v = verify(MS_T1, complete(t, {2}), {});
    EXPECT_TRUE(v.pass) << t;
    EXPECT_NEAR(v.numerical, (t - 1.0) / (2 * t), 1e-9);
    EXPECT_TRUE(v.uniform_matches_exactly);
  }
}

TEST(Verify, T5AndT6a) {
  auto v5 = verify(ONE_TWO_THREE_T5, complete(3, {1, 2, 3}), {});
  EXPECT_TRUE(v5.pass);
  EXPECT_EQ(v5.closed_form_exact, "37/27");
  auto v6 = verify(TWO_R_T6a, complete(4, {2, 3}), {});
  EXPECT_TRUE(v6.pass);
  EXPECT_NEAR(v6.numerical, 0.4375, 1e-9);
}

TEST(Verify, LambdaPrimeBridge) {
  auto v = verify(COR2a, complete(4, {2, 3}), {});
  EXPECT_NEAR(v.numerical, 9.0 / 8, 1e-8);
  EXPECT_LE(v.bridge_gap, 1e-12);
  auto w = verify(MIXED_T10b, complete(4, {1, 3}), {});
  EXPECT_TRUE(w.pass);
  EXPECT_NEAR(w.numerical, 1.375, 1e-8);
}

TEST(Verify, StrictBranchOnCliqueFreeGraphs) {
  GeneratorParams gp;
  gp.t = 4;
  gp.m = 5;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto h = with_singletons(gen_planted(Family::tpzz_free, gp, seed));
    TheoremParams p;
    p.t = 4;
    auto v = verify(MIXED_T10c, h, p);
    EXPECT_TRUE(v.hypotheses.strict_branch);
    EXPECT_TRUE(v.pass) << seed;
    EXPECT_GT(v.observed_gap, v.margin);
  }
}

TEST(Verify, JsonShape) {
  auto j = to_json(verify(MS_T1, complete(3, {2}), {}));
  for (const char* key : {"theorem", "hypotheses_ok", "closed_form", "numerical", "kkt_residual", "pass"})
    EXPECT_TRUE(j.contains(key)) << key;
}
