#include <doctest.h>

#include <stdexcept>

#include "pmt/catalog.hpp"
#include "pmt/classes.hpp"
#include "pmt/enumerate.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"

using namespace pmt;

TEST_CASE("class membership") {
  MembershipCache cache;
  CHECK(in_class(build("Z3"), ClassId::binary_natural, &cache));
  CHECK(in_class(build("Z22"), ClassId::binary_natural, &cache));
  CHECK_FALSE(in_class(spike_like(2), ClassId::binary_natural, &cache));
  CHECK(in_class(rho_a(0b000011), ClassId::binary_natural, &cache));
  CHECK_FALSE(in_class(rho_a(0b000011), ClassId::no_mk4_natural, &cache));
  CHECK_FALSE(in_class(rho_a(0), ClassId::sp_natural, &cache));
  CHECK(in_class(uniform(1, 3), ClassId::sp_natural, &cache));
  CHECK(cache.size() > 0);
  CHECK_THROWS_AS(in_class(Polymatroid(1, {0, 3}), ClassId::binary_natural),
                  std::invalid_argument);
}

TEST_CASE("excluded-minor decisions") {
  MembershipCache cache;
  for (int n = 2; n <= 4; ++n)
    CHECK(is_excluded_minor(spike_like(n), ClassId::binary_natural, &cache));
  CHECK(is_excluded_minor(build("L2"), ClassId::binary_natural, &cache));
  CHECK(is_excluded_minor(build("A3"), ClassId::binary_natural, &cache));
  CHECK_FALSE(is_excluded_minor(build("Z3"), ClassId::binary_natural, &cache));

  ExclusionReport report =
      excluded_minor_report(build("Z3"), ClassId::binary_natural, &cache);
  CHECK(report.self_in_class);
  CHECK_FALSE(report.excluded);
  report = excluded_minor_report(build("A4"), ClassId::binary_natural, &cache);
  CHECK(report.excluded);
  for (const MinorMembership& m : report.minors) {
    CHECK(m.deletion_in_class);
    CHECK(m.contraction_in_class);
  }
}

TEST_CASE("compression closure of excluded minors") {
  MembershipCache cache;
  CHECK(in_r_set(build("A4"), ClassId::binary_natural, &cache));
  CHECK(in_r_set(build("L2"), ClassId::binary_natural, &cache));
  CHECK(in_r_set(spike_like(2), ClassId::binary_natural, &cache));
  CHECK_FALSE(in_r_set(spike_like(4), ClassId::binary_natural, &cache));
  CHECK(in_r_set(rho_a(0), ClassId::no_mk4_natural, &cache));
  CHECK_THROWS_AS(in_r_set(build("Z3"), ClassId::binary_natural, &cache),
                  std::invalid_argument);
}

TEST_CASE("the compression-closure set respects 2-duality") {
  MembershipCache cache;
  for (const char* name : {"A4", "B4", "L2", "A3"}) {
    Polymatroid p = build(name);
    CHECK(in_r_set(p, ClassId::binary_natural, &cache) ==
          in_r_set(k_dual(p, 2), ClassId::binary_natural, &cache));
  }
}

TEST_CASE("a compression of an excluded minor is one iff it leaves the class") {
  MembershipCache cache;
  for (const char* name : {"L2", "A3", "B3", "A4", "B4", "S3", "S4"}) {
    Polymatroid p = build(name);
    for (int e = 0; e < p.n; ++e) {
      if (p.singleton(e) != 2) continue;
      Polymatroid down = compress(p, e);
      CHECK(is_excluded_minor(down, ClassId::binary_natural, &cache) ==
            !in_class(down, ClassId::binary_natural, &cache));
    }
  }
}

TEST_CASE("membership is minor closed") {
  MembershipCache cache;
  for (const char* name : {"Z3", "Z22", "MK4"}) {
    Polymatroid p = build(name);
    for (ClassId c : {ClassId::binary_natural, ClassId::no_mk4_natural,
                      ClassId::sp_natural}) {
      if (!in_class(p, c, &cache)) continue;
      for (int e = 0; e < p.n; ++e) {
        CHECK(in_class(deleted(p, bit(e)), c, &cache));
        CHECK(in_class(contracted(p, bit(e)), c, &cache));
        CHECK(in_class(compress(p, e), c, &cache));
      }
    }
  }
}

TEST_CASE("excluded minors satisfy the nullity bound") {
  for (const char* name :
       {"U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6", "S2", "S3"}) {
    Polymatroid p = build(name);
    CHECK(p.singleton_sum() >= p.full_rank() + 2);
  }
}

TEST_CASE("decompressions of the small spikes") {
  MembershipCache cache;
  for (int n : {2, 3}) {
    auto found = decompressions(spike_like(n), ClassId::binary_natural, &cache);
    REQUIRE(found.size() == 1);
    CHECK(are_isomorphic(found[0], spike_like(n + 1)));
  }
}

TEST_CASE("B4 admits no decompression excluded minor") {
  MembershipCache cache;
  CHECK(decompressions(build("B4"), ClassId::binary_natural, &cache).empty());
}

TEST_CASE("c-minor reachability") {
  CHECK(has_c_minor(spike_like(4), spike_like(2)));
  CHECK(has_c_minor(spike_like(4), spike_like(4)));
  CHECK_FALSE(has_c_minor(spike_like(2), spike_like(4)));
  CHECK(has_c_minor(spike_like(4), uniform(2, 3)));  // a contraction
}

TEST_CASE("excluded c-minors drop the larger spikes") {
  MembershipCache cache;
  CHECK(is_excluded_c_minor(uniform(2, 4), ClassId::binary_natural, &cache));
  CHECK(is_excluded_c_minor(spike_like(2), ClassId::binary_natural, &cache));
  CHECK_FALSE(is_excluded_c_minor(spike_like(3), ClassId::binary_natural, &cache));
  CHECK_FALSE(is_excluded_c_minor(build("Z3"), ClassId::binary_natural, &cache));
}

TEST_CASE("M(K_4) witnesses hit each line group with one contraction") {
  CHECK(mk4_witnesses_contract_one_per_line(rho_a(0b000001)));
  CHECK(mk4_witnesses_contract_one_per_line(rho_a(0b100001)));
}

TEST_CASE("the projected independence criterion") {
  CHECK(rho_a_independence_criterion(0));
  CHECK(rho_a_independence_criterion(0b100001));
}

TEST_CASE("independence survives decompression") {
  for (auto& [name, q] : catalog_all(5)) {
    CAPTURE(name);
    for (int g = 0; g < q.n; ++g)
      if (q.singleton(g) == 2) CHECK(compression_preserves_independence(q, g));
  }
}

TEST_CASE("class ids parse") {
  CHECK(parse_class_id("binary-natural") == ClassId::binary_natural);
  CHECK(parse_class_id("no-mk4") == ClassId::no_mk4_natural);
  CHECK(parse_class_id("sp") == ClassId::sp_natural);
  CHECK_THROWS_AS(parse_class_id("x"), std::invalid_argument);
}
