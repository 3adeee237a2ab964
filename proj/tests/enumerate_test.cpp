#include <doctest.h>

#include <stdexcept>

#include <set>

#include "pmt/catalog.hpp"
#include "pmt/enumerate.hpp"
#include "pmt/minors.hpp"

using namespace pmt;

namespace {

std::set<std::vector<std::uint8_t>> forms(const std::vector<Polymatroid>& v) {
  std::set<std::vector<std::uint8_t>> out;
  for (const Polymatroid& p : v) out.insert(canonical_form(p).bytes);
  return out;
}

}  // namespace

TEST_CASE("one element gives the three singleton ranks") {
  GenConfig cfg;
  cfg.n = 1;
  EnumResult r = enumerate_polymatroids(cfg);
  CHECK(r.classes.size() == 3);
  CHECK(r.complete);
  cfg.loopless = true;
  CHECK(enumerate_polymatroids(cfg).classes.size() == 2);
}

TEST_CASE("generation matches the filter-everything oracle") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    GenConfig cfg;
    cfg.n = n;
    EnumResult fast = enumerate_polymatroids(cfg);
    EnumResult slow = enumerate_naive(cfg);
    CHECK(fast.complete);
    CHECK(fast.classes.size() == slow.classes.size());
    CHECK(forms(fast.classes) == forms(slow.classes));
  }
}

TEST_CASE("two-element classes are the ten known tables") {
  GenConfig cfg;
  cfg.n = 2;
  CHECK(enumerate_polymatroids(cfg).classes.size() == 10);
}

TEST_CASE("filters prune as documented") {
  GenConfig cfg;
  cfg.n = 2;
  cfg.loopless = true;
  cfg.no_parallel_points = true;
  EnumResult r = enumerate_polymatroids(cfg);
  for (const Polymatroid& p : r.classes) {
    for (int e = 0; e < p.n; ++e) CHECK(p.singleton(e) >= 1);
    CHECK_FALSE(
        (p.singleton(0) == 1 && p.singleton(1) == 1 && p.rank[0b11] == 1));
  }
  cfg.connected = true;
  for (const Polymatroid& p : enumerate_polymatroids(cfg).classes)
    CHECK(components(p).size() <= 1);
}

TEST_CASE("a pinned singleton profile restricts the search") {
  GenConfig cfg;
  cfg.n = 2;
  cfg.kmax = 2;
  cfg.singleton_ranks = std::vector<int>{2, 2};
  EnumResult r = enumerate_polymatroids(cfg);
  CHECK(r.classes.size() == 3);  // pair rank 2, 3 or 4
}

TEST_CASE("an exhausted budget is reported, not hidden") {
  GenConfig cfg;
  cfg.n = 3;
  cfg.node_budget = 5;
  EnumResult r = enumerate_polymatroids(cfg);
  CHECK_FALSE(r.complete);
}

TEST_CASE("excluded-minor search at two elements finds the parallel lines") {
  FindResult r = find_excluded_minors(ClassId::binary_natural, 2, false);
  REQUIRE(r.found.size() == 1);
  CHECK(are_isomorphic(r.found[0].p, spike_like(2)));
  CHECK(r.complete);
}

TEST_CASE("every generated class is valid and 2-bounded") {
  GenConfig cfg;
  cfg.n = 3;
  for (const Polymatroid& p : enumerate_polymatroids(cfg).classes) {
    CHECK(p.is_kpolymatroid(2));
    CHECK(validate(p, ValidateMode::reference).pass);
  }
}
