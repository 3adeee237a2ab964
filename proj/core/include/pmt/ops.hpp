#pragma once

#include "pmt/polymatroid.hpp"

namespace pmt {

/// A minor specification: delete `del`, contract `contract` (disjoint).
struct MinorSpec {
  SubsetMask del = 0;
  SubsetMask contract = 0;
};

/// Result of an operation that drops elements.  The surviving elements
/// are reindexed densely in increasing order; `old_index[i]` is the
/// original index of new element i.
struct Reindexed {
  Polymatroid p;
  std::vector<int> old_index;
};

Reindexed delete_elements(const Polymatroid& p, SubsetMask x);
Reindexed contract_elements(const Polymatroid& p, SubsetMask x);
Reindexed apply_minor(const Polymatroid& p, const MinorSpec& spec);

/// Shorthands when the index map is not needed.
Polymatroid deleted(const Polymatroid& p, SubsetMask x);
Polymatroid contracted(const Polymatroid& p, SubsetMask x);

Polymatroid direct_sum(const Polymatroid& a, const Polymatroid& b);

/// k-dual r*(X) = k|X| - r(E) + r(E-X).  Requires a k-polymatroid;
/// an involution that switches deletion and contraction.
Polymatroid k_dual(const Polymatroid& p, int k);

/// Compression by e: freely add a point to e, contract it, delete e.
/// Closed form: subtract 1 on the sets spanning e; equals deletion when
/// e is a loop and contraction when e is a point.
Polymatroid compress(const Polymatroid& p, int e);

/// Same result through the defining construction (extend, contract,
/// delete); kept as an independent route for cross-checks.
Polymatroid compress_by_definition(const Polymatroid& p, int e);

/// Iterated principal extension of a matroid: adds `count` elements
/// freely to the flat spanned by x, as the highest indices.
Polymatroid principal_extension_matroid(const Polymatroid& m, SubsetMask x,
                                        int count);

/// Principal extension of a polymatroid: a new rank-`krank` element,
/// freely added to f, appears as the highest index.  Needs rank(f) >= krank.
Polymatroid principal_extension_polymatroid(const Polymatroid& p, SubsetMask f,
                                            int krank);

}  // namespace pmt
