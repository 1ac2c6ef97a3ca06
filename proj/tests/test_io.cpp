#include <gtest/gtest.h>

#include "ridgecalc/errors.hpp"
#include "ridgecalc/json_io.hpp"
#include "support.hpp"

using namespace ridgecalc;
using namespace ridgecalc::testing_support;

TEST(Json, KNumberCanonicalForm) {
  const auto b = basis_of({2, 3});
  const Json j = to_json(kn(b, "3/2 - sqrt2 + 1/3*sqrt6"));
  EXPECT_EQ(j.dump(), R"({"basis":[2,3],"coords":{"1":"3/2","2":"-1/1","6":"1/3"}})");
  EXPECT_EQ(to_json(KNumber(b)).dump(), R"({"basis":[2,3],"coords":{}})");
}

TEST(Json, KNumberLenientInput) {
  const auto b = basis_of({2});
  EXPECT_EQ(knumber_from_json(Json("3/4"), b), kn(b, "3/4"));
  EXPECT_EQ(knumber_from_json(Json(-2), b), kn(b, "-2"));
  EXPECT_EQ(knumber_from_json(Json("1 + sqrt2"), b), kn(b, "1+sqrt2"));
  EXPECT_EQ(knumber_from_json(Json::parse(R"({"coords":{"2":"1/2","1":"0/1"}})"), b), kn(b, "1/2*sqrt2"));
}

TEST(Json, KNumberErrors) {
  const auto b = basis_of({2});
  EXPECT_THROW(knumber_from_json(Json::parse(R"({"basis":[3],"coords":{}})"), b), ParseError);
  EXPECT_THROW(knumber_from_json(Json::parse(R"({"basis":[2],"coords":{"3":"1/1"}})"), b), ParseError);
  EXPECT_THROW(knumber_from_json(Json::parse(R"({"basis":[2],"coords":{"1":"1/0"}})"), b), ParseError);
  EXPECT_THROW(knumber_from_json(Json::parse(R"({"basis":[2]})"), b), ParseError);
  EXPECT_THROW(knumber_from_json(Json(1.5), b), ParseError);
}

TEST(Json, RoundTrips) {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(40);
  for (int i = 0; i < 20; ++i) {
    const KNumber x = random_knumber(b, rng);
    ASSERT_EQ(knumber_from_json(to_json(x), b), x);
    ASSERT_EQ(to_json(knumber_from_json(to_json(x), b)).dump(), to_json(x).dump());

    AdditiveMap a(b);
    for (BasisKey k = 0; k < 4; ++k) a.set_image(k, random_knumber(b, rng));
    ASSERT_EQ(additive_map_from_json(to_json(a), b), a);

    const PolyFunc f = random_polyfunc(b, static_cast<unsigned>(i % 4) + 1, rng);
    ASSERT_EQ(polyfunc_from_json(to_json(f), b), f);
    ASSERT_EQ(multi_additive_from_json(to_json(f.term(f.order())), b), f.term(f.order()));

    const UniPoly u = random_unipoly(b, i % 4, rng);
    ASSERT_EQ(unipoly_from_json(to_json(u), b), u);

    const PolyMultivar p = restrict_to_Q(f, random_kvector(b, 2, rng));
    ASSERT_EQ(polymultivar_from_json(to_json(p), b, 2), p);
  }
}

TEST(Json, ProblemAndSolutionRoundTrip) {
  const auto b = basis_of({2});
  Rng rng = make_rng(41);
  std::vector<RidgeTerm> terms;
  terms.push_back({dir(b, {"1", "sqrt2"}), RidgeProfile(random_unipoly(b, 2, rng), random_polyfunc(b, 2, rng))});
  terms.push_back({dir(b, {"0", "1"}), RidgeProfile(random_unipoly(b, 1, rng))});
  const RidgeSum s(b, 2, std::move(terms));
  const Json pj = problem_to_json(s);
  const RidgeSum back = problem_from_json(pj);
  EXPECT_EQ(problem_to_json(back).dump(), pj.dump());
  EXPECT_TRUE(pj["terms"][1]["wild"].is_null());

  const auto d = smooth_decomposition(s, {5, 5, 0});
  const SolutionFile sol{d.g, d.p, d.certificate, s};
  const Json sj = solution_to_json(sol);
  const SolutionFile sol2 = solution_from_json(sj);
  EXPECT_EQ(solution_to_json(sol2).dump(), sj.dump());
  EXPECT_EQ(sol2.p, d.p);
  EXPECT_EQ(sj["certificate"]["exact"], true);
  EXPECT_EQ(sj["certificate"]["rational_points"], 5);
}

TEST(Json, ProblemErrors) {
  EXPECT_THROW(problem_from_json(Json::parse(R"({"radicals":[2],"terms":[]})")), ParseError);
  EXPECT_THROW(problem_from_json(Json::parse(R"({"n":2,"radicals":[2],"terms":[{"direction":["1"]}]})")), ParseError);
  EXPECT_THROW(problem_from_json(Json::parse(R"({"n":1,"radicals":[4],"terms":[]})")), UsageError);
  EXPECT_THROW(
      problem_from_json(Json::parse(R"({"n":2,"terms":[{"direction":["1","0"]},{"direction":["2","0"]}]})")),
      GeometryError);
}

TEST(Json, RadicalsOverride) {
  const Json j = Json::parse(R"({"n":1,"terms":[{"direction":["sqrt3"],"smooth":["1"]}]})");
  EXPECT_THROW(problem_from_json(j), ParseError);
  const RidgeSum s = problem_from_json(j, std::vector<long>{3});
  EXPECT_EQ(s.basis()->radicands(), std::vector<long>{3});
}
