#include <doctest.h>

#include <fstream>
#include <set>

#include "idemcodes/group.hpp"

using namespace idemcodes;

namespace {

Group load_q8() {
  std::ifstream in(std::string(FIXTURES_DIR) + "/q8.tab");
  REQUIRE(in.good());
  std::vector<int> vals;
  int v;
  while (in >> v) vals.push_back(v);
  REQUIRE(vals.size() == 64);
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) table[i][j] = vals[i * 8 + j];
  return group_from_cayley(table, "q8");
}

/// Brute-force subgroup count: all subgroups generated by at most two
/// elements (enough for the fixtures used with it).
int two_generated_subgroup_count(const Group& G) {
  std::set<std::vector<int>> seen;
  seen.insert(generated_subgroup(G, {}).elems);
  for (int g = 0; g < G.n; ++g) {
    seen.insert(generated_subgroup(G, {g}).elems);
    for (int h = g + 1; h < G.n; ++h) seen.insert(generated_subgroup(G, {g, h}).elems);
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("metacyclic construction") {
  Group G = group_metacyclic(9, 3, 4);
  CHECK(G.n == 27);
  G.validate();
  CHECK(!G.is_abelian());
  // b * a = a^4 * b: index of a is 1, of b is 9, of a^4 b is 9 + 4.
  CHECK(G.mul(9, 1) == 13);
  CHECK(G.labels[13] == "a^4*b");

  Group C5 = group_metacyclic(5, 1, 1);
  CHECK(C5.n == 5);
  CHECK(C5.is_abelian());

  CHECK_THROWS_AS((void)group_metacyclic(9, 3, 2), error);   // 2^3 != 1 mod 9
  CHECK_THROWS_AS((void)group_metacyclic(9, 3, 3), error);   // gcd(3,9) != 1
  CHECK_THROWS_AS((void)group_metacyclic(300, 1, 1), error); // order bound
}

TEST_CASE("direct products") {
  Group K4 = group_direct(group_cyclic(2), group_cyclic(2));
  CHECK(K4.n == 4);
  for (int g = 0; g < 4; ++g) CHECK(K4.mul(g, g) == 0);  // exponent 2

  Group G105 = group_direct(group_metacyclic(7, 3, 4), group_cyclic(5));
  CHECK(G105.n == 105);
  G105.validate();
  CHECK(G105.spec == "direct(metacyclic(7,3,4),cyclic(5))");
  // Second factor's letter renamed: some label mentions c.
  CHECK(G105.labels[1] == "c");

  Group A = group_metacyclic(5, 4, 2);
  Group At = group_direct(A, group_cyclic(1));
  CHECK(At.n == A.n);
  CHECK(At.table == A.table);
}

TEST_CASE("cayley loader") {
  Group Q8 = load_q8();
  CHECK(Q8.n == 8);
  CHECK(!Q8.is_abelian());
  CHECK(is_nilpotent(Q8));
  // A non-associative Latin square must be rejected.
  std::vector<std::vector<int>> bad = {{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 3, 4, 0, 1},
                                       {3, 4, 1, 2, 0},
                                       {4, 2, 0, 1, 3}};
  CHECK_THROWS_AS((void)group_from_cayley(bad, "bad"), error);
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(subgroups(group_cyclic(6)).size() == 4);
  Group Q8 = load_q8();
  CHECK(subgroups(Q8).size() == 6);
  Group F20 = group_metacyclic(5, 4, 2);
  auto subs = subgroups(F20);
  CHECK(subs.size() == 14);
  CHECK(two_generated_subgroup_count(F20) == 14);  // independent brute-force oracle
  CHECK(subgroups(group_cyclic(1)).size() == 1);
  // Closure and inverse hold for every reported subgroup.
  for (const auto& S : subs) {
    for (int a : S.elems) {
      CHECK(S.contains(F20.inv(a)));
      for (int b : S.elems) CHECK(S.contains(F20.mul(a, b)));
    }
  }
}

TEST_CASE("normalizer, commutator, center") {
  Group G = group_metacyclic(9, 3, 4);
  Subgroup A = generated_subgroup(G, {1});  // <a>
  CHECK(normalizer(G, A).order() == 27);    // normal

  Subgroup Gp = commutator_subgroup(G);
  CHECK(Gp.elems == std::vector<int>{0, 3, 6});  // <a^3>

  Group G21 = group_metacyclic(7, 3, 4);
  CHECK(commutator_subgroup(G21).order() == 7);  // faithful action: G' = <a>

  CHECK(center(G).elems == std::vector<int>{0, 3, 6});
  Subgroup B = generated_subgroup(G21, {7});  // a Sylow-3 of the order-21 group
  CHECK(normalizer(G21, B).order() == 3);     // self-normalizing
}

TEST_CASE("quotients") {
  Group G = group_metacyclic(9, 3, 4);
  Subgroup all = full_subgroup(G);
  QuotientMap q1 = quotient(all, all);
  CHECK(q1.quotient->n == 1);

  Group C9 = group_cyclic(9);
  QuotientMap q2 = quotient(full_subgroup(C9), generated_subgroup(C9, {3}));
  CHECK(q2.quotient->n == 3);
  CHECK(is_cyclic(*q2.quotient));

  Subgroup A = generated_subgroup(G, {1});
  QuotientMap q3 = quotient(full_subgroup(G), A);
  CHECK(q3.quotient->n == 3);
  CHECK(*cyclic_witness(*q3.quotient) == q3.proj[9]);  // generated by the image of b

  // proj is a homomorphism on all pairs.
  for (int x = 0; x < G.n; ++x)
    for (int y = 0; y < G.n; ++y)
      CHECK(q3.quotient->mul(q3.proj[x], q3.proj[y]) == q3.proj[G.mul(x, y)]);
  // proj . section = identity.
  for (int c = 0; c < q3.quotient->n; ++c) CHECK(q3.proj[q3.lift(c)] == c);

  Group G21 = group_metacyclic(7, 3, 4);
  Subgroup B = generated_subgroup(G21, {7});
  CHECK_THROWS_AS((void)quotient(full_subgroup(G21), B), error);  // not normal
}

TEST_CASE("transversals") {
  Group G = group_metacyclic(9, 3, 4);
  CHECK(transversal(G, full_subgroup(G)) == std::vector<int>{0});
  Subgroup A = generated_subgroup(G, {1});
  CHECK(transversal(G, A) == std::vector<int>{0, 9, 18});  // {1, b, b^2}
  for (const auto& S : subgroups(G))
    CHECK(static_cast<int>(transversal(G, S).size()) * S.order() == G.n);
}

TEST_CASE("primary decomposition") {
  Group C6 = group_cyclic(6);
  auto [p2, p2c] = primary_decomposition(C6, 2);
  CHECK(p2.order() == 2);
  CHECK(p2c.order() == 3);

  Group C15 = group_cyclic(15);
  auto [q2, q2c] = primary_decomposition(C15, 2);
  CHECK(q2.order() == 1);
  CHECK(q2c.order() == 15);

  Group C12 = group_cyclic(12);
  auto [r2, r2c] = primary_decomposition(C12, 2);
  CHECK(r2.order() == 4);
  CHECK(r2c.order() == 3);

  CHECK_THROWS_AS((void)primary_decomposition(group_metacyclic(5, 4, 2), 2), error);
}

TEST_CASE("cyclic witnesses and minimal subgroups") {
  Group C6 = group_cyclic(6);
  auto ms = minimal_prime_subgroups(C6);
  CHECK(ms.size() == 2);
  std::set<int> orders{ms[0].order(), ms[1].order()};
  CHECK(orders == std::set<int>{2, 3});

  Group C5 = group_cyclic(5);
  auto m5 = minimal_prime_subgroups(C5);
  CHECK(m5.size() == 1);
  CHECK(m5[0].order() == 5);

  CHECK(minimal_prime_subgroups(group_cyclic(1)).empty());
  CHECK_THROWS_AS((void)minimal_prime_subgroups(load_q8()), error);
  CHECK(!cyclic_witness(load_q8()).has_value());
  CHECK(*cyclic_witness(group_cyclic(7)) == 1);
}

TEST_CASE("nilpotency detection") {
  CHECK(is_nilpotent(group_metacyclic(9, 3, 4)));
  CHECK(is_nilpotent(group_cyclic(12)));
  CHECK(!is_nilpotent(group_metacyclic(5, 4, 2)));
  CHECK(!is_nilpotent(group_metacyclic(7, 3, 4)));
}
