#include <doctest.h>

#include <stdexcept>

#include <set>

#include "pmt/catalog.hpp"
#include "pmt/minors.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"

using namespace pmt;

TEST_CASE("canonical forms are permutation invariant") {
  Polymatroid a3 = build("A3");
  for (const std::vector<int>& perm :
       {std::vector<int>{1, 2, 0}, {2, 0, 1}, {0, 2, 1}})
    CHECK(canonical_form(a3) == canonical_form(permuted(a3, perm)));
  CHECK(canonical_form(spike_like(3)) ==
        canonical_form(permuted(spike_like(3), {2, 1, 0})));
  CHECK_FALSE(canonical_form(build("Z3")) == canonical_form(build("Z22")));
}

TEST_CASE("the 64 rho_A masks collapse to 11 canonical classes") {
  std::set<std::vector<std::uint8_t>> forms;
  for (SubsetMask a = 0; a < 64; ++a) forms.insert(canonical_form(rho_a(a)).bytes);
  CHECK(forms.size() == 11);
  std::set<std::vector<std::uint8_t>> reps;
  for (SubsetMask a : rho_a_representatives())
    reps.insert(canonical_form(rho_a(a)).bytes);
  CHECK(reps == forms);
}

TEST_CASE("isomorphism and witnesses") {
  CHECK(are_isomorphic(k_dual(build("B3"), 2), build("A5")));
  CHECK(are_isomorphic(k_dual(uniform(2, 4), 2), build("A6")));
  CHECK_FALSE(are_isomorphic(build("L2"), uniform(2, 4)));
  CHECK_FALSE(are_isomorphic(build("Z3"), spike_like(3)));

  Polymatroid p = build("B4");
  std::vector<int> shuffle = {2, 0, 3, 1};
  auto iso = isomorphism(p, permuted(p, shuffle));
  REQUIRE(iso.has_value());
  CHECK(permuted(p, *iso) == permuted(p, shuffle));
}

TEST_CASE("invariant keys separate cheap cases") {
  CHECK(invariant_key(build("L2")) != invariant_key(build("A3")));
  CHECK(invariant_key(build("A4")) ==
        invariant_key(permuted(build("A4"), {2, 1, 0})));
}

TEST_CASE("minor search with certificates") {
  Polymatroid s4 = spike_like(4);
  CHECK_FALSE(has_minor(s4, spike_like(3)));

  auto self_cert = find_minor(s4, s4);
  REQUIRE(self_cert.has_value());
  CHECK(self_cert->contract == 0);
  CHECK(self_cert->del == 0);

  Polymatroid host = natural_matroid(spike_like(2)).m;
  auto cert = find_minor(host, uniform(2, 4));
  REQUIRE(cert.has_value());
  CHECK(replay_certificate(host, uniform(2, 4), *cert));

  // Tampering with the witness breaks the replay.
  Certificate bad = *cert;
  bad.map = {1, 0, 2, 3};
  CHECK(replay_certificate(host, uniform(2, 4), bad));  // still an iso of U24
  bad.contract = bit(0);
  bad.del = 0;
  CHECK_FALSE(replay_certificate(host, uniform(2, 4), bad));
}

TEST_CASE("searches are deterministic") {
  Polymatroid host = natural_matroid(build("A3")).m;
  auto a = find_minor(host, uniform(2, 4));
  auto b = find_minor(host, uniform(2, 4));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->contract == b->contract);
  CHECK(a->del == b->del);
  CHECK(a->map == b->map);
}

TEST_CASE("binary recognition") {
  CHECK(is_binary(mk4_matroid()));
  CHECK_FALSE(is_binary(uniform(2, 4)));
  CHECK(is_binary(uniform(1, 3)));
  CHECK(is_binary(natural_matroid(deleted(spike_like(4), bit(0))).m));
  CHECK(is_binary(natural_matroid(deleted(spike_like(5), bit(0))).m));
  CHECK_THROWS_AS(is_binary(build("L2")), std::invalid_argument);
}

TEST_CASE("the two binary routes agree") {
  for (auto& [name, p] : catalog_all(5)) {
    CAPTURE(name);
    Polymatroid m = natural_matroid(p).m;
    CHECK(is_binary(m) == is_binary_via_minor(m));
    CHECK(is_binary_via_minor(m) == !has_minor(m, uniform(2, 4)));
  }
}

TEST_CASE("M(K_4) minors") {
  CHECK(has_mk4_minor(mk4_matroid()));
  CHECK_FALSE(has_mk4_minor(uniform(2, 4)));
  CHECK_FALSE(has_mk4_minor(uniform(3, 6)));
  for (SubsetMask a : {SubsetMask{0}, SubsetMask{0b000001}}) {
    auto cert = find_mk4_minor(natural_matroid(rho_a(a)).m);
    REQUIRE(cert.has_value());
  }
}

TEST_CASE("series-parallel recognition") {
  CHECK(is_series_parallel(uniform(2, 3)));
  CHECK(is_series_parallel(uniform(1, 1)));
  CHECK(is_series_parallel(Polymatroid(1, {0, 0}, 1)));  // a loop
  CHECK(is_series_parallel(Polymatroid()));
  CHECK_FALSE(is_series_parallel(mk4_matroid()));
  CHECK_FALSE(is_series_parallel(uniform(2, 4)));
  CHECK(is_series_parallel(direct_sum(uniform(2, 3), uniform(1, 2))));
  for (SubsetMask a : rho_a_representatives())
    CHECK_FALSE(is_series_parallel(natural_matroid(rho_a(a)).m));
}

TEST_CASE("the two series-parallel routes agree") {
  for (auto& [name, p] : catalog_all(4)) {
    CAPTURE(name);
    Polymatroid m = natural_matroid(p).m;
    CHECK(is_series_parallel(m) == is_series_parallel_via_exclusion(m));
  }
}

TEST_CASE("minors persist under principal extension") {
  Polymatroid pattern(1, {0, 2}, 2);  // a single line
  for (auto& [name, host] :
       {std::pair<std::string, Polymatroid>{"S2", spike_like(2)},
        {"L2", build("L2")}, {"A3", build("A3")}}) {
    CAPTURE(name);
    REQUIRE(has_minor(host, pattern));
    for (int kr : {0, 1, 2}) {
      Polymatroid grown =
          principal_extension_polymatroid(host, host.ground(), kr);
      CHECK(has_minor(grown, pattern));
    }
  }
}

TEST_CASE("exhaustive witness listings") {
  Polymatroid host = natural_matroid(build("L2")).m;  // U_{2,4} itself
  auto specs = all_minor_specs(host, uniform(2, 4));
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].contract == 0);
  CHECK(specs[0].del == 0);
}

TEST_CASE("canonical form budget can be exhausted") {
  CHECK_THROWS_AS(canonical_form(spike_like(6), 3), std::runtime_error);
}
