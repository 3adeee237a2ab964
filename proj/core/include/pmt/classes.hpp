#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pmt/minors.hpp"
#include "pmt/polymatroid.hpp"

namespace pmt {

/// The three minor-closed classes of 2-polymatroids, keyed by the
/// property of the natural matroid.
enum class ClassId {
  binary_natural,
  no_mk4_natural,
  sp_natural,
};

ClassId parse_class_id(const std::string& id);
const char* to_string(ClassId c);

/// Canonical-form-keyed memo for class membership; excluded-minor and
/// decompression searches re-test many isomorphic minors.
class MembershipCache {
 public:
  std::optional<bool> lookup(const std::vector<std::uint8_t>& key, ClassId c);
  void store(const std::vector<std::uint8_t>& key, ClassId c, bool value);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::vector<std::uint8_t>, std::array<signed char, 3>> map_;
};

/// Membership via the natural matroid.  Requires a 2-polymatroid.
bool in_class(const Polymatroid& p, ClassId c, MembershipCache* cache = nullptr);

struct MinorMembership {
  int element = 0;
  bool deletion_in_class = false;
  bool contraction_in_class = false;
};

struct ExclusionReport {
  bool excluded = false;
  bool self_in_class = false;
  std::vector<MinorMembership> minors;  // empty entries trailing when short-circuited
};

/// p is an excluded minor iff p is outside the class and every
/// single-element deletion and contraction is inside (single-element
/// checks suffice for a minor-closed class).
bool is_excluded_minor(const Polymatroid& p, ClassId c,
                       MembershipCache* cache = nullptr);

/// Same decision with the full per-element breakdown.
ExclusionReport excluded_minor_report(const Polymatroid& p, ClassId c,
                                      MembershipCache* cache = nullptr);

/// Among excluded minors, those whose every line-compression lands back
/// in the class.  Throws unless p is an excluded minor for c.
bool in_r_set(const Polymatroid& p, ClassId c, MembershipCache* cache = nullptr);

/// All excluded minors q for c on one more element g with rank(g) = 2
/// and compress(q, g) = p, up to isomorphism.  The search walks every
/// rank table compatible with the compression equation (rank'(X) in
/// {rank(X), rank(X)+1} on old subsets), pruned by monotonicity and
/// submodularity; both the spanning and non-spanning branches for the
/// full set are explored.
std::vector<Polymatroid> decompressions(const Polymatroid& p, ClassId c,
                                        MembershipCache* cache = nullptr);

/// Minor order extended with compression moves; memoized on canonical
/// forms.
bool has_c_minor(const Polymatroid& host, const Polymatroid& pattern);

/// Excluded element of the c-minor order: outside the class with every
/// single deletion, contraction and compression inside.
bool is_excluded_c_minor(const Polymatroid& p, ClassId c,
                         MembershipCache* cache = nullptr);

/// Every M(K_4) witness inside the natural matroid of p meets each
/// 2-element group with exactly one contraction and no deletion, and
/// leaves 1-element groups untouched.  Exhaustive over witnesses.
bool mk4_witnesses_contract_one_per_line(const Polymatroid& p);

/// Independence in the natural matroid of rho_A matches the projected
/// criterion S' = {e : |S intersect X_e| = rank(e)} being independent
/// in M(K_4); exhaustive over all subsets.
bool rho_a_independence_criterion(SubsetMask a);

/// Independent sets of compress(q, g) whose singleton ranks are
/// unchanged are independent in q as well; exhaustive over subsets.
bool compression_preserves_independence(const Polymatroid& q, int g);

}  // namespace pmt
