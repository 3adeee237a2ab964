#include <doctest.h>

#include <stdexcept>

#include "pmt/catalog.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"
#include "pmt/polymatroid.hpp"

using namespace pmt;

namespace {

Polymatroid loops(int n) {
  return Polymatroid(n, std::vector<int>(std::size_t{1} << n, 0), 2);
}

}  // namespace

TEST_CASE("validate accepts the spike table and the zero table") {
  CHECK(validate(spike_like(3), ValidateMode::fast).pass);
  CHECK(validate(spike_like(3), ValidateMode::reference).pass);
  CHECK(validate(loops(3), ValidateMode::reference).pass);
}

TEST_CASE("validate reports the first violated axiom with a witness") {
  Polymatroid p = spike_like(3);
  p.rank[0b011] = 1;  // below the singleton ranks
  AxiomReport report = validate(p, ValidateMode::reference);
  REQUIRE_FALSE(report.pass);
  CHECK(report.violated == Axiom::nondecreasing);
  CHECK(report.witness_a == 0b010);
  CHECK(report.witness_b == 0b011);

  Polymatroid q = spike_like(3);
  q.rank[0] = 1;
  CHECK(validate(q).violated == Axiom::normalized);

  Polymatroid r = uniform(2, 4);
  r.kbound = 1;
  r.rank[0b0001] = 2;  // violates both the bound and submodularity
  CHECK_FALSE(validate(r, ValidateMode::reference).pass);
}

TEST_CASE("validate modes agree across the catalog") {
  for (auto& [name, p] : catalog_all(6)) {
    CAPTURE(name);
    CHECK(validate(p, ValidateMode::fast).pass);
    CHECK(validate(p, ValidateMode::reference).pass);
  }
}

TEST_CASE("table size is checked") {
  CHECK_THROWS_AS(Polymatroid(2, {0, 1, 1}), std::invalid_argument);
  Polymatroid p;  // hand-corrupt past the constructor
  p.n = 1;
  CHECK(validate(p).violated == Axiom::table_size);
}

TEST_CASE("closure on the line with two points") {
  Polymatroid p = build("L2");
  CHECK(closure(p, 0b001) == 0b111);   // the line spans both points
  CHECK(closure(p, 0b010) == 0b010);   // a point spans only itself
  CHECK(closure(p, 0b110) == 0b111);   // two points span the line
}

TEST_CASE("closure of the empty set is the set of loops") {
  Polymatroid p = direct_sum(build("L2"), loops(1));
  CHECK(closure(p, 0) == 0b1000);
}

TEST_CASE("closure of spike singletons is trivial") {
  Polymatroid p = spike_like(3);
  for (int e = 0; e < 3; ++e) CHECK(closure(p, bit(e)) == bit(e));
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  for (auto& [name, p] : catalog_all(5)) {
    CAPTURE(name);
    for (SubsetMask x = 0; x <= p.ground(); ++x) {
      SubsetMask cl = closure(p, x);
      CHECK(subset_of(x, cl));
      CHECK(closure(p, cl) == cl);
      if (p.ground() == 0) break;
    }
    for (SubsetMask b = 0; b <= p.ground(); ++b) {
      for (SubsetMask a = b;; a = (a - 1) & b) {
        CHECK(subset_of(closure(p, a), closure(p, b)));
        if (a == 0) break;
      }
      if (p.ground() == 0) break;
    }
  }
}

TEST_CASE("element relations") {
  CHECK(relation(spike_like(2), 0, 1) == Relation::parallel);
  Polymatroid a4 = build("A4");
  CHECK(relation(a4, 1, 2) == Relation::skew);
  CHECK(relation(a4, 0, 1) == Relation::other);  // coplanar lines
  Polymatroid l2 = build("L2");
  CHECK(relation(l2, 1, 0) == Relation::first_on_second);
  CHECK(relation(l2, 0, 1) == Relation::second_on_first);
  CHECK(relation(l2, 1, 2) == Relation::skew);  // independent points
  CHECK_THROWS_AS(relation(l2, 1, 1), std::invalid_argument);
  Polymatroid with_loop = direct_sum(l2, loops(1));
  CHECK(relation(with_loop, 0, 3) == Relation::other);
}

TEST_CASE("independent sets") {
  Polymatroid p = build("rhoA:0b000000");  // the rank function of M(K_4)
  CHECK(is_independent_set(p, 0));
  CHECK(is_independent_set(p, 0b001011));  // a basis {a,b,d}
  CHECK_FALSE(is_independent_set(p, 0b011001));  // the triangle {a,d,e}
  CHECK_FALSE(is_independent_set(spike_like(2), 0b11));  // 2+2 != rank 2
  Polymatroid with_loop = direct_sum(build("L2"), loops(1));
  CHECK_FALSE(is_independent_set(with_loop, 0b1000));
}

TEST_CASE("components splits direct sums and keeps catalog members whole") {
  Polymatroid sum = direct_sum(build("L2"), spike_like(2));
  auto blocks = components(sum);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == 0b00111);
  CHECK(blocks[1] == 0b11000);

  for (auto& [name, p] : catalog_all(6)) {
    CAPTURE(name);
    CHECK(components(p).size() <= 1);
  }
  CHECK(components(loops(3)).size() == 3);
  CHECK(components(uniform(2, 3)).size() == 1);  // no dependent pair, one block
}

TEST_CASE("components commutes with relabeling") {
  Polymatroid sum = direct_sum(build("L2"), spike_like(2));
  std::vector<int> perm = {3, 0, 4, 1, 2};
  Polymatroid moved = permuted(sum, perm);
  auto blocks = components(moved);
  REQUIRE(blocks.size() == 2);
  SubsetMask merged = 0;
  for (SubsetMask b : blocks) merged |= b;
  CHECK(merged == moved.ground());
  // The image of {0,1,2} under the permutation.
  CHECK((blocks[0] == 0b11001 || blocks[1] == 0b11001));
}

TEST_CASE("singleton ranks at most one give matroid unit increase") {
  for (auto& [name, p] : catalog_all(4)) {
    LabeledMatroid lm = natural_matroid(p);
    CAPTURE(name);
    for (SubsetMask x = 0; x <= lm.m.ground(); ++x) {
      for (int e = 0; e < lm.m.n; ++e) {
        int step = lm.m.rank[x | bit(e)] - lm.m.rank[x];
        CHECK(step >= 0);
        CHECK(step <= 1);
      }
      if (lm.m.ground() == 0) break;
    }
  }
}

TEST_CASE("uniform matroid tables") {
  Polymatroid u = uniform(2, 4);
  CHECK(u.full_rank() == 2);
  CHECK(u.is_matroid());
  CHECK(u.is_kpolymatroid(1));
  CHECK_THROWS_AS(uniform(5, 4), std::invalid_argument);
}
