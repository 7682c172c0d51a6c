#include <doctest.h>

#include <random>

#include "idemcodes/codes.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace idemcodes;

namespace {

constexpr i64 kBudget = i64{1} << 20;

}  // namespace

TEST_CASE("codes from simple idempotents") {
  Group C6 = group_cyclic(6);
  auto F5 = FieldCtx::prime(5);

  LinearCode full = code_from_idempotent(C6, F5, alg_one(C6, *F5));
  CHECK(full.k == 6);
  CHECK(minimum_distance(full, DistMethod::gray, kBudget, 1) == 1);

  LinearCode rep = code_from_idempotent(C6, F5, tilde(full_subgroup(C6), *F5));
  CHECK(rep.k == 1);
  CHECK(minimum_distance(rep, DistMethod::gray, kBudget, 1) == 6);

  LinearCode zero = code_from_idempotent(C6, F5, alg_zero(C6, *F5));
  CHECK(zero.k == 0);
  CHECK(minimum_distance(zero, DistMethod::gray, kBudget, 1) == 0);

  auto F4 = FieldCtx::extension(2, 2);
  CHECK_THROWS_AS((void)code_from_idempotent(C6, F4, alg_one(C6, *F5)), error);
}

TEST_CASE("weight distributions") {
  Group C3 = group_cyclic(3);
  auto F2 = FieldCtx::prime(2);
  LinearCode rep = code_from_idempotent(C3, F2, tilde(full_subgroup(C3), *F2));
  CHECK(weight_distribution(rep, kBudget, 1) == std::vector<i64>{1, 0, 0, 1});

  Group C2 = group_cyclic(2);
  LinearCode full = code_from_idempotent(C2, F2, alg_one(C2, *F2));
  CHECK(weight_distribution(full, kBudget, 1) == std::vector<i64>{1, 2, 1});

  Group G = group_metacyclic(7, 3, 4);
  ShodaCtx ctx(G, FieldCtx::prime(2));
  auto entries = strong_shoda_pairs(ctx);
  LinearCode c = code_from_idempotent(G, ctx.field(), entries[0].e_values[0]);
  auto w = weight_distribution(c, kBudget, 1);
  i64 total = 0;
  for (i64 x : w) total += x;
  CHECK(total == ipow(2, c.k));  // counts sum to s^k
  CHECK(w[0] == 1);
  i64 d = minimum_distance(c, DistMethod::gray, kBudget, 1);
  for (i64 i = 1; i < d; ++i) CHECK(w[i] == 0);
  CHECK(w[d] > 0);
}

TEST_CASE("gray equals exhaustive and threads do not change results") {
  std::mt19937 rng(11);
  for (auto [p, k] : std::vector<std::pair<i64, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto F = FieldCtx::extension(p, k);
    LinearCode c;
    c.field = F;
    c.length = 17;
    c.k = 5;
    c.genmat = FMatrix(F.get(), 5, 17);
    std::uniform_int_distribution<i64> dist(0, F->card() - 1);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 17; ++j) c.genmat.at(i, j) = F->from_index(dist(rng));
    i64 d1 = minimum_distance(c, DistMethod::gray, kBudget, 1);
    i64 d2 = minimum_distance(c, DistMethod::exhaustive, kBudget, 1);
    i64 d3 = minimum_distance(c, DistMethod::gray, kBudget, 3);
    CHECK(d1 == d2);
    CHECK(d1 == d3);
    CHECK(weight_distribution(c, kBudget, 1) == weight_distribution(c, kBudget, 4));
  }
}

TEST_CASE("budget handling") {
  Group G = group_metacyclic(11, 5, 3);
  ShodaCtx ctx(G, FieldCtx::prime(2));
  auto ssp = make_strong_shoda_pair(ctx, generated_subgroup(G, {1}), trivial_subgroup(G));
  auto cls = faithful_classes(ctx, *ssp);
  PrimSet ps = primitive_idempotents_trivial_twisting(ctx, ssp, cls[0]);
  LinearCode c = code_from_idempotent(G, ctx.field(), ps.idems[0]);
  REQUIRE(c.k == 10);
  bool exact = true;
  i64 bound = minimum_distance(c, DistMethod::gray, 100, 1, &exact);
  CHECK(!exact);
  i64 true_d = minimum_distance(c, DistMethod::gray, kBudget, 1, &exact);
  CHECK(exact);
  CHECK(bound >= true_d);
  CHECK_THROWS_AS((void)weight_distribution(c, 100, 1), error);
}

TEST_CASE("left ideal closure and the rank oracle") {
  Group G = group_metacyclic(5, 4, 2);
  ShodaCtx ctx(G, FieldCtx::prime(3));
  for (const auto& entry : strong_shoda_pairs(ctx)) {
    for (const auto& e : entry.e_values) {
      LinearCode c = code_from_idempotent(G, ctx.field(), e);
      CHECK(c.k == right_multiplication_rank(G, *ctx.field(), e));
      // Left-ideal closure: g * row stays in the row space.
      FMatrix extended(ctx.field().get(), c.k * 2, G.n);
      for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < G.n; ++j) {
          extended.at(i, j) = c.genmat.at(i, j);
          // the g-translate of the row, g the first generator
          extended.at(c.k + i, G.mul(G.gens[0], j)) = c.genmat.at(i, j);
        }
      CHECK(mat_rank(extended) == c.k);
    }
  }
}

TEST_CASE("primitive sets generate ideals of equal dimension filling the component") {
  Group G = group_metacyclic(5, 4, 2);
  ShodaCtx ctx(G, FieldCtx::prime(3));
  auto ssp = make_strong_shoda_pair(ctx, generated_subgroup(G, {1}), trivial_subgroup(G));
  auto cls = faithful_classes(ctx, *ssp);
  PrimSet ps = primitive_idempotents_trivial_twisting(ctx, ssp, cls[0]);
  i64 expect_k = (G.n / ssp->H.order()) * (ssp->o / ssp->ehi);
  FMatrix stack(ctx.field().get(), static_cast<int>(ps.idems.size()) * static_cast<int>(expect_k),
                G.n);
  int row = 0;
  for (const auto& f : ps.idems) {
    LinearCode c = code_from_idempotent(G, ctx.field(), f);
    CHECK(c.k == expect_k);
    for (int i = 0; i < c.k; ++i, ++row)
      for (int j = 0; j < G.n; ++j) stack.at(row, j) = c.genmat.at(i, j);
  }
  // The ideals are independent and sum to the component of dimension
  // [G:H]^2 * o/[E:H] = 16.
  CHECK(mat_rank(stack) == 16);
}

TEST_CASE("minimal ideal survey") {
  Group G = group_metacyclic(5, 4, 2);
  ShodaCtx ctx(G, FieldCtx::prime(3));
  auto ssp = make_strong_shoda_pair(ctx, generated_subgroup(G, {1}), trivial_subgroup(G));
  auto cls = faithful_classes(ctx, *ssp);
  IdealSurvey survey = survey_minimal_ideals(ctx, ssp, cls[0], kBudget, 1);
  CHECK(survey.lines == 40);  // (3^4 - 1) / 2
  i64 total = 0;
  bool has8 = false, has12 = false;
  for (const auto& row : survey.rows) {
    CHECK(row.k == 4);
    total += row.count;
    if (row.d == 8) has8 = true;
    if (row.d == 12) has12 = true;
    // The representative is a primitive idempotent realizing (k, d).
    AlgElem f = minimal_ideal_idempotent(ctx, ssp, cls[0], row.repr_line);
    CHECK(is_idempotent(f));
    LinearCode c = code_from_idempotent(G, ctx.field(), f);
    CHECK(c.k == row.k);
    CHECK(minimum_distance(c, DistMethod::gray, kBudget, 1) == row.d);
  }
  CHECK(total == 40);
  CHECK(has8);
  CHECK(has12);
}

TEST_CASE("code search report") {
  Group Q8 = load_q8();
  ShodaCtx ctx(Q8, FieldCtx::prime(3));
  auto rep = code_search(ctx, SearchStrategy::all_minimal_ideals, kBudget, 1, false);
  CHECK(rep.any_supported);
  bool nontrivial_survey_skip = false, q8_code = false;
  for (const auto& comp : rep.components) {
    if (!comp.survey_skip_reason.empty()) nontrivial_survey_skip = true;
    for (const auto& c : comp.codes)
      if (c.k == 2 && c.d == 6) q8_code = true;
  }
  CHECK(nontrivial_survey_skip);  // the M_2(F_3) component has no psi coordinates
  CHECK(q8_code);
}

TEST_CASE("generator matrix export") {
  Group C3 = group_cyclic(3);
  auto F2 = FieldCtx::prime(2);
  LinearCode rep = code_from_idempotent(C3, F2, tilde(full_subgroup(C3), *F2));
  CHECK(export_genmat(rep) == "3 1 2\n1 1 1\n");
  CHECK(ordering_hash(C3) == ordering_hash(group_cyclic(3)));
  CHECK(ordering_hash(C3) != ordering_hash(group_cyclic(4)));
}
