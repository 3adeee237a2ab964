#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pmt {

/// Subset of a ground set of at most 16 elements: bit i is set iff
/// element i is in the subset.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxGround = 16;

constexpr SubsetMask full_mask(int n) {
  return n == 0 ? 0u : ((SubsetMask{1} << n) - 1u);
}

constexpr SubsetMask bit(int e) { return SubsetMask{1} << e; }

constexpr int popcount(SubsetMask m) { return std::popcount(m); }

constexpr bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

/// An integer polymatroid given by its full rank table: `rank[x]` is the
/// rank of the subset with mask `x`.  Matroids are the special case with
/// all singleton ranks at most 1.  Values are immutable by convention;
/// every operation in this library builds a fresh table.
struct Polymatroid {
  int n = 0;
  std::vector<int> rank;
  /// Declared bound k with rank({i}) <= k for all i, when known.
  std::optional<int> kbound;

  Polymatroid() : rank(1, 0) {}
  Polymatroid(int n_, std::vector<int> table,
              std::optional<int> kbound_ = std::nullopt);

  int operator()(SubsetMask x) const { return rank[x]; }
  SubsetMask ground() const { return full_mask(n); }
  int full_rank() const { return rank[ground()]; }
  int singleton(int e) const { return rank[bit(e)]; }
  int singleton_sum() const;

  bool is_matroid() const;
  bool is_kpolymatroid(int k) const;

  /// Equality of the underlying set function; `kbound` is metadata.
  friend bool operator==(const Polymatroid& a, const Polymatroid& b) {
    return a.n == b.n && a.rank == b.rank;
  }
};

/// Uniform matroid U_{r,n} as a polymatroid table.
Polymatroid uniform(int r, int n);

/// Relabel elements: `perm[old] = new`.  Returns the polymatroid whose
/// rank of a relabeled subset equals the rank of its preimage.
Polymatroid permuted(const Polymatroid& p, const std::vector<int>& perm);

enum class Axiom {
  none,
  table_size,
  normalized,
  nondecreasing,
  submodular,
  kbound,
};

enum class ValidateMode {
  /// Covering pairs only: monotonicity on (X, X+i) and the local exchange
  /// condition r(X+i)+r(X+j) >= r(X+i+j)+r(X).  Equivalent to the full
  /// axioms but O(2^n n^2).
  fast,
  /// Literal check of the axioms over all subset pairs.
  reference,
};

struct AxiomReport {
  bool pass = true;
  Axiom violated = Axiom::none;
  SubsetMask witness_a = 0;
  SubsetMask witness_b = 0;
  std::string message() const;
};

/// Checks normalization, monotonicity, submodularity and, if declared,
/// the singleton bound.  Returns the first violated axiom with a witness
/// pair of subsets.
AxiomReport validate(const Polymatroid& p,
                     ValidateMode mode = ValidateMode::fast);

/// cl(X) = {e : rank(X + e) = rank(X)}.  Contains X; idempotent.
SubsetMask closure(const Polymatroid& p, SubsetMask x);

bool spans(const Polymatroid& p, SubsetMask x, int e);

/// Flats are the closed sets.
bool is_flat(const Polymatroid& p, SubsetMask x);

enum class Relation {
  parallel,        // 0 < r(e) = r(f) = r({e,f})
  skew,            // r(e), r(f) > 0 and r({e,f}) = r(e) + r(f)
  first_on_second, // 0 < r(e) < r(f) and r({e,f}) = r(f)
  second_on_first,
  other,
};

const char* to_string(Relation r);

/// Classifies the pair (e, f); `other` when no named relation applies.
Relation relation(const Polymatroid& p, int e, int f);

/// True iff every element of X has positive rank and rank(X) is the sum
/// of the singleton ranks.
bool is_independent_set(const Polymatroid& p, SubsetMask x);

/// Finest partition {E_1,...,E_m} of the ground set with
/// rank(X) = sum over i of rank(X intersect E_i) for every X.
/// Loops form singleton blocks.  Blocks are ordered by least element.
std::vector<SubsetMask> components(const Polymatroid& p);

bool is_connected(const Polymatroid& p);

}  // namespace pmt
