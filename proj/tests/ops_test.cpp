#include <doctest.h>

#include <stdexcept>

#include "pmt/catalog.hpp"
#include "pmt/minors.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"

using namespace pmt;

TEST_CASE("deletion restricts the table") {
  Polymatroid s3 = spike_like(3);
  Reindexed res = delete_elements(s3, bit(2));
  CHECK(res.p.rank == std::vector<int>{0, 2, 2, 3});
  CHECK(res.old_index == std::vector<int>{0, 1});
  CHECK(deleted(s3, 0) == s3);
}

TEST_CASE("deleting an element outside a rho_A support restricts the formula") {
  SubsetMask a = 0b000010;  // A = {b}
  Polymatroid p = rho_a(a);
  Polymatroid q = deleted(p, bit(0));  // drop a, which is not in A
  Polymatroid base = mk4_matroid();
  // Oracle: evaluate the defining sum on the remaining five elements.
  for (SubsetMask y = 0; y < (1u << 5); ++y) {
    SubsetMask orig = y << 1;
    CHECK(q.rank[y] == base.rank[orig] + popcount(orig & a));
  }
}

TEST_CASE("contraction formula") {
  Polymatroid l2 = build("L2");
  Polymatroid c = contracted(l2, bit(1));  // contract the point b
  CHECK(c.rank == std::vector<int>{0, 1, 1, 1});
  CHECK(contracted(l2, 0) == l2);
  for (int n : {4, 5, 6})
    CHECK(are_isomorphic(contracted(spike_like(n), bit(0)),
                         uniform(n - 2, n - 1)));
}

namespace {

// Rewrites a mask into the dense indexing left after removing `removed`.
SubsetMask after_removal(SubsetMask mask, SubsetMask removed, int n) {
  SubsetMask out = 0;
  int idx = 0;
  for (int e = 0; e < n; ++e) {
    if (removed & bit(e)) continue;
    if (mask & bit(e)) out |= bit(idx);
    ++idx;
  }
  return out;
}

}  // namespace

TEST_CASE("deletion and contraction commute") {
  for (auto& [name, p] : catalog_all(5)) {
    CAPTURE(name);
    const SubsetMask full = p.ground();
    if (full == 0) continue;
    for (SubsetMask x = 0; x <= full; ++x)
      for (SubsetMask y = 0; y <= full; ++y) {
        if (x & y) continue;
        Polymatroid del_first =
            contracted(deleted(p, x), after_removal(y, x, p.n));
        Polymatroid con_first =
            deleted(contracted(p, y), after_removal(x, y, p.n));
        CHECK(del_first == con_first);
        CHECK(del_first == apply_minor(p, {x, y}).p);
      }
  }
}

TEST_CASE("direct sum") {
  Polymatroid l2 = build("L2");
  CHECK(direct_sum(l2, Polymatroid()) == l2);
  Polymatroid sum = direct_sum(l2, spike_like(2));
  CHECK(sum.full_rank() == l2.full_rank() + 2);
  CHECK(sum.rank[0b11000] == 2);
}

TEST_CASE("2-dual of the line with two points") {
  Polymatroid a4 = k_dual(build("L2"), 2);
  CHECK(a4.rank == std::vector<int>{0, 2, 2, 3, 2, 3, 4, 4});
  CHECK(a4 == build("A4"));
}

TEST_CASE("2-dual basics") {
  for (int n = 2; n <= 6; ++n)
    CHECK(k_dual(spike_like(n), 2) == spike_like(n));
  Polymatroid line(1, {0, 2}, 2);
  CHECK(k_dual(line, 2).rank == std::vector<int>{0, 0});
  CHECK_THROWS_AS(k_dual(build("L2"), 1), std::invalid_argument);
}

TEST_CASE("2-dual is an involution that switches deletion and contraction") {
  for (auto& [name, p] : catalog_all(6)) {
    CAPTURE(name);
    Polymatroid dual = k_dual(p, 2);
    CHECK(k_dual(dual, 2) == p);
    CHECK(validate(dual, ValidateMode::reference).pass);
    for (int e = 0; e < p.n; ++e) {
      CHECK(k_dual(deleted(p, bit(e)), 2) == contracted(dual, bit(e)));
      CHECK(k_dual(contracted(p, bit(e)), 2) == deleted(dual, bit(e)));
    }
  }
}

TEST_CASE("compression of spikes steps down the chain") {
  for (int n = 2; n <= 5; ++n) {
    Polymatroid c = compress(spike_like(n + 1), n);
    CHECK(c == spike_like(n));  // the closed form lands on the exact table
  }
}

TEST_CASE("compressing a loop deletes it, a point contracts it") {
  Polymatroid with_loop =
      direct_sum(build("L2"), Polymatroid(1, {0, 0}, 2));
  CHECK(compress(with_loop, 3) == deleted(with_loop, bit(3)));
  Polymatroid l2 = build("L2");
  CHECK(compress(l2, 1) == contracted(l2, bit(1)));
}

TEST_CASE("closed-form compression equals the defining construction") {
  for (auto& [name, p] : catalog_all(6)) {
    CAPTURE(name);
    for (int e = 0; e < p.n; ++e)
      CHECK(compress(p, e) == compress_by_definition(p, e));
  }
}

TEST_CASE("compression commutes with the 2-dual on doubly thick elements") {
  for (auto& [name, p] : catalog_all(6)) {
    CAPTURE(name);
    Polymatroid dual = k_dual(p, 2);
    for (int e = 0; e < p.n; ++e)
      if (p.singleton(e) == 2 && dual.singleton(e) == 2)
        CHECK(k_dual(compress(p, e), 2) == compress(dual, e));
  }
}

TEST_CASE("matroid principal extension") {
  Polymatroid u23 = uniform(2, 3);
  CHECK(principal_extension_matroid(u23, 0b111, 0) == u23);
  CHECK(principal_extension_matroid(u23, 0b111, 1) == uniform(2, 4));

  // The closed set generated by X plus the new element is a flat.
  Polymatroid ext = principal_extension_matroid(uniform(3, 4), 0b0011, 1);
  SubsetMask flat = closure(uniform(3, 4), 0b0011) | bit(4);
  CHECK(is_flat(ext, flat));

  // Iterated additions to one set are order independent, and additions
  // to different sets commute.
  Polymatroid m = mk4_matroid();
  Polymatroid two_at_once = principal_extension_matroid(m, 0b000111, 2);
  Polymatroid one_then_one = principal_extension_matroid(
      principal_extension_matroid(m, 0b000111, 1), 0b000111, 1);
  CHECK(two_at_once == one_then_one);

  Polymatroid xy = principal_extension_matroid(
      principal_extension_matroid(m, 0b000111, 1), 0b011001, 1);
  Polymatroid yx_swapped = [&] {
    Polymatroid yx = principal_extension_matroid(
        principal_extension_matroid(m, 0b011001, 1), 0b000111, 1);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5, 7, 6};
    return permuted(yx, perm);
  }();
  CHECK(xy == yx_swapped);

  CHECK_THROWS_AS(principal_extension_matroid(build("L2"), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("polymatroid principal extension") {
  Polymatroid s2 = spike_like(2);
  Polymatroid with_loop = principal_extension_polymatroid(s2, 0b11, 0);
  for (SubsetMask x = 0; x < 4u; ++x) {
    CHECK(with_loop.rank[x] == s2.rank[x]);
    CHECK(with_loop.rank[x | 0b100] == s2.rank[x]);
  }

  // A free point: rank grows by one on every non-spanning set.
  Polymatroid free_pt = principal_extension_polymatroid(s2, 0b11, 1);
  CHECK(free_pt.rank[0b100] == 1);
  for (SubsetMask x = 0; x < 4u; ++x)
    CHECK(free_pt.rank[x | 0b100] ==
          s2.rank[x] + (s2.rank[x] == s2.full_rank() ? 0 : 1));

  CHECK_THROWS_AS(principal_extension_polymatroid(s2, 0b01, 3),
                  std::invalid_argument);
}

TEST_CASE("two free points on a line of Z3 yield Z22 and back") {
  Polymatroid z22 = build("Z22");
  CHECK(z22.n == 4);
  // Elements in recipe order: lines a, c then the two points.
  CHECK(z22.rank ==
        std::vector<int>{0, 2, 2, 3, 1, 3, 3, 4, 1, 3, 3, 4, 2, 3, 3, 4});
  CHECK(validate(z22, ValidateMode::reference).pass);

  Polymatroid back = principal_extension_polymatroid(z22, 0b1100, 2);
  back = deleted(back, 0b1100);
  CHECK(are_isomorphic(back, build("Z3")));
}
