#pragma once

#include <set>
#include <vector>

#include "pmt/polymatroid.hpp"

namespace pmt {

/// A matroid together with a partition of its ground set into groups,
/// one per element of the source polymatroid, in source order.  Group
/// masks may be empty (loops contribute no copies).
struct LabeledMatroid {
  Polymatroid m;
  std::vector<SubsetMask> groups;

  /// X_A: union of the groups selected by the source-subset mask.
  SubsetMask group_union(SubsetMask src) const {
    SubsetMask u = 0;
    for (SubsetMask s = src; s; s &= s - 1)
      u |= groups[std::countr_zero(s)];
    return u;
  }
};

bool labeled_equal(const LabeledMatroid& a, const LabeledMatroid& b);

/// The natural matroid: element e is replaced by rank(e) freely placed
/// copies; r(X) = min over A of rank(A) + |X - X_A|.  Copies of element
/// i occupy a contiguous index block, blocks in source order.
LabeledMatroid natural_matroid(const Polymatroid& p);

/// The k-natural matroid: the natural matroid with each group padded to
/// k elements by principal extension into the group's span.  Groups are
/// relabeled to the contiguous blocks [k*i, k*i+k).
LabeledMatroid k_natural_matroid(const Polymatroid& p, int k);

/// Per-group intersection counts of a subset of a labeled matroid.
using TypeVector = std::vector<int>;

/// Types of bases.  One representative subset is ranked per feasible
/// type; subsets of equal type have equal rank because groups are clone
/// sets.
std::set<TypeVector> basis_types(const LabeledMatroid& lm);

/// Types of circuits (minimal dependent sets).
std::set<TypeVector> circuit_types(const LabeledMatroid& lm);

std::set<TypeVector> k_complements(const std::set<TypeVector>& types, int k);

/// True iff swapping a and b leaves the rank table invariant.
bool is_clone_pair(const Polymatroid& matroid, int a, int b);

/// True iff every group is a set of clones and the rank of every group
/// union X_A equals rank(A) in p; this characterizes lm = natural
/// matroid of p (and the k-natural matroid when all groups have size k).
/// Group sizes must match the singleton ranks of p, or be uniformly k.
bool check_natural_characterization(const LabeledMatroid& lm,
                                    const Polymatroid& p);

/// Rank dual r*(X) = |X| - r(E) + r(E - X) of a matroid table.
Polymatroid rank_dual(const Polymatroid& matroid);

/// Dual matroid with the group labeling carried over unchanged.
LabeledMatroid labeled_dual(const LabeledMatroid& lm);

/// Checks both minor identities for the natural matroid of p at e:
/// deletion removes the block X_e exactly; contraction of X_e followed
/// by restriction to the first rank(f)-after-contraction members of
/// each group X_f reproduces the natural matroid of the contraction.
bool natural_of_minor_check(const Polymatroid& p, int e);

/// The k-natural analogues: deletion and contraction of the whole
/// block Y_e, with no restriction step.
bool knatural_of_minor_check(const Polymatroid& p, int k, int e);

/// Compression against the natural matroid, rank(e) > 0: contracting
/// one copy of e and deleting the rest of X_e together with one copy
/// from each group whose element spans e.
bool compress_matches_natural_minor(const Polymatroid& p, int e);

/// For a line e of a 2-polymatroid: the 2-natural matroid of the
/// compression is the 2-natural matroid with one copy of e contracted
/// and the other deleted.
bool compress_matches_knatural_minor(const Polymatroid& p, int e);

/// Same identity on the plain natural matroid; valid when no line is
/// parallel to e.
bool compress_matches_natural_line_minor(const Polymatroid& p, int e);

}  // namespace pmt
