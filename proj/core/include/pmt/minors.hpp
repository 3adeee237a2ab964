#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pmt/polymatroid.hpp"

namespace pmt {

/// Cheap isomorphism invariant: ground-set size, sorted singleton ranks
/// and the sorted multiset of pair ranks.
struct InvariantKey {
  int n = 0;
  std::vector<int> singles;
  std::vector<int> pairs;
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey invariant_key(const Polymatroid& p);

/// Permutation-minimal encoding of a rank table: the ground-set size
/// followed by the relabeled table, minimized lexicographically over all
/// element orders.  Equal forms characterize isomorphism.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  InvariantKey key;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes <=> b.bytes;
  }
};

/// Prefix-pruned search over element orders.  `node_budget` bounds the
/// number of search nodes; exceeding it throws.
CanonicalForm canonical_form(const Polymatroid& p,
                             std::uint64_t node_budget = 200'000'000);

/// Witness mapping a-elements to b-elements, when one exists.
std::optional<std::vector<int>> isomorphism(const Polymatroid& a,
                                            const Polymatroid& b);

bool are_isomorphic(const Polymatroid& a, const Polymatroid& b);

/// Witness that a pattern is a minor of a host: contract `contract`,
/// delete `del`, then map the i-th surviving host element (in increasing
/// original order) to pattern element `map[i]`.
struct Certificate {
  SubsetMask contract = 0;
  SubsetMask del = 0;
  std::vector<int> map;
};

/// Re-applies the certificate through the deletion/contraction
/// operations and compares rank tables exactly.
bool replay_certificate(const Polymatroid& host, const Polymatroid& pattern,
                        const Certificate& cert);

/// Minor search: contraction sets by increasing size, then a choice of
/// surviving elements; candidates are pruned by rank and by singleton
/// and pair-rank invariants before the isomorphism test.  A returned
/// certificate has been replayed.
std::optional<Certificate> find_minor(const Polymatroid& host,
                                      const Polymatroid& pattern);

bool has_minor(const Polymatroid& host, const Polymatroid& pattern);

/// Every (contract, delete) pair exhibiting the pattern, each with one
/// witness bijection.  Exhaustive; meant for small hosts.
std::vector<Certificate> all_minor_specs(const Polymatroid& host,
                                         const Polymatroid& pattern);

/// The cycle matroid of K_4 on six elements a..f (indices 0..5) with
/// 3-point lines {a,d,e}, {b,e,f}, {c,d,f}, {a,b,c}.
Polymatroid mk4_matroid();

/// GF(2) representability via the fundamental-circuit incidence matrix
/// of a greedy basis: accepts iff GF(2) column rank matches the rank
/// table on every subset.
bool is_binary(const Polymatroid& matroid);

/// Independent route: no U_{2,4}-minor.
bool is_binary_via_minor(const Polymatroid& matroid);

std::optional<Certificate> find_u24_minor(const Polymatroid& matroid);

std::optional<Certificate> find_mk4_minor(const Polymatroid& matroid);

bool has_mk4_minor(const Polymatroid& matroid);

/// Series-parallel test by reduction: per connected component, delete
/// parallel copies and contract series elements down to one element.
bool is_series_parallel(const Polymatroid& matroid);

/// Independent route: binary with no M(K_4)-minor.
bool is_series_parallel_via_exclusion(const Polymatroid& matroid);

}  // namespace pmt
