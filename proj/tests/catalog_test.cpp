#include <doctest.h>

#include <stdexcept>

#include <set>

#include "pmt/catalog.hpp"
#include "pmt/minors.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"

using namespace pmt;

TEST_CASE("the smallest spike is a pair of parallel lines") {
  Polymatroid s2 = spike_like(2);
  CHECK(s2.rank == std::vector<int>{0, 2, 2, 2});
  CHECK(relation(s2, 0, 1) == Relation::parallel);
  CHECK_THROWS_AS(spike_like(1), std::invalid_argument);
}

TEST_CASE("rho with empty A is the rank function of M(K_4)") {
  CHECK(rho_a(0) == mk4_matroid());
  for (SubsetMask a = 0; a < 64; ++a) {
    Polymatroid p = rho_a(a);
    CHECK(validate(p, ValidateMode::reference).pass);
    CHECK(p.full_rank() == 3 + popcount(a));
  }
  CHECK_THROWS_AS(rho_a(0b1000000), std::invalid_argument);
}

TEST_CASE("M(K_4) has the expected lines") {
  Polymatroid m = mk4_matroid();
  CHECK(m.full_rank() == 3);
  std::set<SubsetMask> lines;
  for (SubsetMask x = 0; x < 64u; ++x)
    if (popcount(x) == 3 && m.rank[x] == 2) lines.insert(x);
  CHECK(lines == std::set<SubsetMask>{0b011001, 0b110010, 0b101100, 0b000111});
  CHECK(is_binary(m));
  CHECK(are_isomorphic(rank_dual(m), m));  // self-dual
}

TEST_CASE("prose descriptions of the hand-built tables") {
  Polymatroid a3 = build("A3");
  int on_lines = 0;
  for (int line : {0, 1})
    if (relation(a3, 2, line) == Relation::first_on_second) ++on_lines;
  CHECK(on_lines == 1);
  CHECK(a3.rank[0b011] == 3);  // the lines are coplanar

  Polymatroid b3 = build("B3");
  CHECK(b3.full_rank() == 3);
  CHECK(deleted(b3, bit(0)) == uniform(2, 3));  // collinear points
  for (int pt : {1, 2, 3}) CHECK(relation(b3, pt, 0) == Relation::skew);

  Polymatroid a4 = build("A4");
  int skew_pairs = 0;
  for (int e = 0; e < 3; ++e)
    for (int f = e + 1; f < 3; ++f)
      if (relation(a4, e, f) == Relation::skew) ++skew_pairs;
  CHECK(skew_pairs == 1);

  Polymatroid b4 = build("B4");
  CHECK(relation(b4, 0, 1) == Relation::skew);
  CHECK(b4.rank[0b1100] == 2);   // the two points are independent
  CHECK(b4.rank[0b1101] == 3);   // each line is coplanar with both points
  CHECK(b4.rank[0b1110] == 3);
  CHECK(closure(b4, 0b0001) == 0b0001);  // and spans neither point

  Polymatroid a5 = build("A5");
  CHECK(a5.full_rank() == 5);
  for (int line : {1, 2, 3}) CHECK(relation(a5, 0, line) == Relation::skew);
  for (int e : {1, 2, 3})
    for (int f : {1, 2, 3}) {
      if (e >= f) continue;
      CHECK(relation(a5, e, f) == Relation::skew);
      CHECK(spans(a5, bit(e) | bit(f), 0));  // each pair spans the point
    }

  Polymatroid a6 = build("A6");
  CHECK(a6.full_rank() == 6);
  for (SubsetMask x = 0; x < 16u; ++x)
    if (popcount(x) == 2 || popcount(x) == 3)
      CHECK(a6.rank[x] == popcount(x) + 2);
}

TEST_CASE("duality cross-validations of the catalog") {
  CHECK(build("A4") == k_dual(build("L2"), 2));
  CHECK(are_isomorphic(build("A5"), k_dual(build("B3"), 2)));
  CHECK(are_isomorphic(build("A6"), k_dual(uniform(2, 4), 2)));
  CHECK(are_isomorphic(build("A3"), k_dual(build("A3"), 2)));
  CHECK(are_isomorphic(build("B4"), k_dual(build("B4"), 2)));
}

TEST_CASE("catalog_all enumerates everything once") {
  auto all = catalog_all(6);
  CHECK(all.size() == 11 + 5 + 11);
  std::set<std::string> names;
  for (auto& [name, p] : all) {
    CHECK(names.insert(name).second);
    CHECK(validate(p, ValidateMode::reference).pass);
    CHECK(p.is_kpolymatroid(2));
  }
  std::set<std::vector<std::uint8_t>> rho_forms;
  for (SubsetMask a : rho_a_representatives())
    CHECK(rho_forms.insert(canonical_form(rho_a(a)).bytes).second);
  CHECK_THROWS_AS(catalog_all(1), std::invalid_argument);
}

TEST_CASE("spike natural matroids are tipless free spikes") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    LabeledMatroid lm = natural_matroid(spike_like(n));
    CHECK(lm.m.n == 2 * n);
    CHECK(lm.m.full_rank() == n);
    for (SubsetMask g : lm.groups) CHECK(lm.m.rank[g] == 2);
    // Any union of j < n groups has rank j + 1.
    for (SubsetMask a = 1; a < full_mask(n); ++a) {
      SubsetMask u = lm.group_union(a);
      CHECK(lm.m.rank[u] == popcount(a) + 1);
    }
  }
}

TEST_CASE("name parsing round trips") {
  for (const std::string& name : catalog_list(5)) {
    CAPTURE(name);
    CHECK(to_string(parse_catalog_name(name)) == name);
  }
  CHECK(build("S:4") == spike_like(4));
  CHECK(build("U:2,4") == uniform(2, 4));
  CHECK(build("rhoA:5") == rho_a(5));
  CHECK_THROWS_AS(build("S:1"), std::invalid_argument);
  CHECK_THROWS_AS(build("nope"), std::invalid_argument);
}
