#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz.hpp"
#include "reconstruct.hpp"

#include <algorithm>
#include <map>

using namespace orbiq;

namespace {

HurwitzQuery query(int d, std::vector<std::vector<int>> profiles) {
  HurwitzQuery q{d, {}};
  for (auto& p : profiles) q.profiles.push_back(make_partition(p));
  return q;
}

std::vector<int> simple(int d) {
  std::vector<int> p(static_cast<std::size_t>(d - 1), 1);
  p[0] = 2;
  return p;
}

Ratio int_power(int base, int e) {
  return e >= 0 ? pow(Ratio(base), static_cast<unsigned>(e)) : Ratio(1) / pow(Ratio(base), static_cast<unsigned>(-e));
}

// |centralizer| of an element of cycle type mu.
long z_mu(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts) ++mult[p];
  long z = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(8).size() == 22);
  CHECK(make_partition({1, 3, 2}).parts == std::vector<int>{3, 2, 1});
  CHECK(make_partition({2, 1}).str() == "2,1");
  CHECK_THROWS_AS(make_partition({2, 0}), std::invalid_argument);
  auto q = parse_hurwitz_query(3, "3|2,1|2,1");
  CHECK(q.profiles.size() == 3);
  CHECK(q.profiles[1].parts == std::vector<int>{2, 1});
  CHECK_THROWS_AS(parse_hurwitz_query(3, "3|2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hurwitz_query(3, "3|x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hurwitz_query(0, "1"), std::invalid_argument);
}

TEST_CASE("character values") {
  auto P = [](std::vector<int> v) { return make_partition(v); };
  CHECK(character_value(P({2, 2}), P({2, 2})) == 2);
  CHECK(character_value(P({2, 2}), P({3, 1})) == -1);
  CHECK(character_value(P({2, 1, 1}), P({2, 1, 1})) == -1);
  CHECK(character_value(P({3, 1}), P({2, 1, 1})) == 1);
  CHECK(character_value(P({3, 1}), P({1, 1, 1, 1})) == 3);
  CHECK(character_value(P({1, 1, 1, 1, 1}), P({5})) == 1);
  // Column orthogonality.
  for (int d = 1; d <= 8; ++d)
    for (const auto& mu : partitions_of(d)) {
      long s = 0;
      for (const auto& la : partitions_of(d)) s += character_value(la, mu) * character_value(la, mu);
      CHECK(s == z_mu(mu));
    }
}

TEST_CASE("degree one and tear-drop profiles") {
  CHECK(hurwitz_connected(query(1, {{1}})) == Ratio(1));
  CHECK(hurwitz_connected(query(1, {{1}, {1}, {1}})) == Ratio(1));
  for (int d = 2; d <= 5; ++d)
    for (const auto& mu : partitions_of(d)) {
      HurwitzQuery q{d, {mu}};
      CHECK(hurwitz_connected(q, HurwitzMethod::Enumeration) == Ratio(0));
      CHECK(hurwitz_connected(q, HurwitzMethod::Character) == Ratio(0));
    }
}

TEST_CASE("closed forms") {
  // Two fully ramified points: the cover z -> z^d with automorphisms Z/d.
  for (int d = 1; d <= 8; ++d) CHECK(hurwitz_connected(query(d, {{d}, {d}})) == Ratio(1, d));
  // Simple branching: (2d-2)! d^(d-3) / d!.
  for (int d = 2; d <= 5; ++d) {
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(2 * d - 2), simple(d));
    CHECK(hurwitz_connected(query(d, prof)) == factorial(2 * d - 2) / factorial(d) * int_power(d, d - 3));
  }
  CHECK(hurwitz_connected(query(3, {{2, 1}, {2, 1}, {2, 1}, {2, 1}})) == Ratio(4));
  // One fully ramified point and d - 1 simple points: d^(d-3).
  for (int d = 2; d <= 7; ++d) {
    std::vector<std::vector<int>> prof{{d}};
    for (int i = 0; i < d - 1; ++i) prof.push_back(simple(d));
    CHECK(hurwitz_connected(query(d, prof)) == int_power(d, d - 3));
  }
}

TEST_CASE("riemann-hurwitz filter") {
  CHECK_FALSE(rh_feasible(query(2, {{2}})));
  CHECK(rh_feasible(query(2, {{2}, {2}})));
  CHECK(hurwitz_connected(query(2, {{2}, {2}, {2}, {2}})) == Ratio(0));
  // higher-genus covers exist but are filtered out
  CHECK_FALSE(connected_count_enumeration(query(2, {{2}, {2}, {2}, {2}})).is_zero());
}

TEST_CASE("enumeration and character formula agree for d <= 4 and r <= 4") {
  std::size_t compared = 0;
  for (int d = 1; d <= 4; ++d) {
    auto parts = partitions_of(d);
    for (int r = 1; r <= 4; ++r) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
      for (;;) {
        HurwitzQuery q{d, {}};
        for (auto i : idx) q.profiles.push_back(parts[i]);
        CHECK(connected_count_enumeration(q) == connected_count_character(q));
        CHECK(hurwitz_connected(q, HurwitzMethod::Enumeration) == hurwitz_connected(q, HurwitzMethod::Character));
        ++compared;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == parts.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
  }
  CHECK(compared > 300);
}

TEST_CASE("symmetric under permuting the branch points") {
  auto base = query(4, {{3, 1}, {2, 2}, {2, 1, 1}, {2, 1, 1}});
  auto p = base.profiles;
  std::sort(p.begin(), p.end());
  Ratio ref = hurwitz_connected(base);
  CHECK_FALSE(ref.is_zero());
  do {
    HurwitzQuery q{4, p};
    CHECK(hurwitz_connected(q) == ref);
    CHECK(connected_count_enumeration(q) == ref);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("tuple counts include disconnected covers") {
  // identity in S_2 twice: both tuples (id, id) counted, none transitive
  auto q = query(2, {{1, 1}, {1, 1}});
  CHECK(tuple_count_character(q) == Ratio(1));
  CHECK(connected_count_character(q) == Ratio(0));
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(connected_count_enumeration(query(7, {{7}, {7}})), HurwitzBudgetError);
  CHECK_THROWS_AS(connected_count_character(query(9, {{9}, {9}})), HurwitzBudgetError);
  CHECK(hurwitz_connected(query(8, {{8}, {8}})) == Ratio(1, 8));
}

TEST_CASE("degree-one covering formula for the assembled b1") {
  std::vector<TearDropData> tds{solve_teardrop(2), solve_teardrop(3)};
  auto rep = b1_assembly_check(parse_curve("g=0;a=2,3"), tds);
  CHECK(rep.pass());
  CHECK(rep.h_degree_one == Ratio(1));
  CHECK(rep.product_formula == rep.assembled);
  auto bad = tds;
  bad[0].B1 = bad[0].B1 * Ratio(2);
  auto rb = b1_assembly_check(parse_curve("g=0;a=2,3"), bad);
  CHECK_FALSE(rb.pass());
  CHECK_FALSE(b1_assembly_check(parse_curve("g=0;a=3,2"), tds).pass());
}
