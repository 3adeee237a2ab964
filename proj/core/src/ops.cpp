#include "pmt/ops.hpp"

#include <stdexcept>

#include "pmt/natural.hpp"

namespace pmt {

namespace {

// expand[m] maps a mask over the kept elements to the original mask.
std::vector<SubsetMask> expansion(const std::vector<int>& old_index) {
  std::vector<SubsetMask> expand(std::size_t{1} << old_index.size(), 0);
  for (SubsetMask m = 1; m < expand.size(); ++m)
    expand[m] = expand[m & (m - 1)] | bit(old_index[std::countr_zero(m)]);
  return expand;
}

std::vector<int> kept_indices(int n, SubsetMask removed) {
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (!(removed & bit(i))) kept.push_back(i);
  return kept;
}

}  // namespace

Reindexed delete_elements(const Polymatroid& p, SubsetMask x) {
  if (!subset_of(x, p.ground()))
    throw std::invalid_argument("delete: set outside ground set");
  std::vector<int> kept = kept_indices(p.n, x);
  auto expand = expansion(kept);
  std::vector<int> t(expand.size());
  for (SubsetMask m = 0; m < expand.size(); ++m) t[m] = p.rank[expand[m]];
  return {Polymatroid((int)kept.size(), std::move(t), p.kbound),
          std::move(kept)};
}

Reindexed contract_elements(const Polymatroid& p, SubsetMask x) {
  if (!subset_of(x, p.ground()))
    throw std::invalid_argument("contract: set outside ground set");
  std::vector<int> kept = kept_indices(p.n, x);
  auto expand = expansion(kept);
  const int rx = p.rank[x];
  std::vector<int> t(expand.size());
  for (SubsetMask m = 0; m < expand.size(); ++m)
    t[m] = p.rank[expand[m] | x] - rx;
  return {Polymatroid((int)kept.size(), std::move(t), p.kbound),
          std::move(kept)};
}

Reindexed apply_minor(const Polymatroid& p, const MinorSpec& spec) {
  if (spec.del & spec.contract)
    throw std::invalid_argument("minor: delete and contract sets overlap");
  if (!subset_of(spec.del | spec.contract, p.ground()))
    throw std::invalid_argument("minor: sets outside ground set");
  std::vector<int> kept = kept_indices(p.n, spec.del | spec.contract);
  auto expand = expansion(kept);
  const int rc = p.rank[spec.contract];
  std::vector<int> t(expand.size());
  for (SubsetMask m = 0; m < expand.size(); ++m)
    t[m] = p.rank[expand[m] | spec.contract] - rc;
  return {Polymatroid((int)kept.size(), std::move(t), p.kbound),
          std::move(kept)};
}

Polymatroid deleted(const Polymatroid& p, SubsetMask x) {
  return delete_elements(p, x).p;
}

Polymatroid contracted(const Polymatroid& p, SubsetMask x) {
  return contract_elements(p, x).p;
}

Polymatroid direct_sum(const Polymatroid& a, const Polymatroid& b) {
  if (a.n + b.n > kMaxGround)
    throw std::invalid_argument("direct_sum: combined ground set exceeds 16");
  const SubsetMask amask = a.ground();
  std::vector<int> t(std::size_t{1} << (a.n + b.n));
  for (SubsetMask m = 0; m < t.size(); ++m)
    t[m] = a.rank[m & amask] + b.rank[m >> a.n];
  std::optional<int> kb;
  if (a.kbound && b.kbound) kb = std::max(*a.kbound, *b.kbound);
  return Polymatroid(a.n + b.n, std::move(t), kb);
}

Polymatroid k_dual(const Polymatroid& p, int k) {
  if (!p.is_kpolymatroid(k))
    throw std::invalid_argument("k_dual: some singleton rank exceeds k");
  const SubsetMask full = p.ground();
  const int total = p.rank[full];
  std::vector<int> t(p.rank.size());
  for (SubsetMask x = 0; x < t.size(); ++x)
    t[x] = k * popcount(x) - total + p.rank[full ^ x];
  return Polymatroid(p.n, std::move(t), k);
}

Polymatroid compress(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("compress: element outside ground set");
  if (p.singleton(e) == 0) return deleted(p, bit(e));
  auto rest = delete_elements(p, bit(e));
  auto expand = expansion(rest.old_index);
  std::vector<int> t(expand.size());
  for (SubsetMask m = 0; m < expand.size(); ++m) {
    SubsetMask x = expand[m];
    t[m] = p.rank[x] - (p.rank[x | bit(e)] == p.rank[x] ? 1 : 0);
  }
  return Polymatroid(p.n - 1, std::move(t), p.kbound);
}

Polymatroid compress_by_definition(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("compress: element outside ground set");
  if (p.singleton(e) == 0) return deleted(p, bit(e));
  Polymatroid ext = principal_extension_polymatroid(p, bit(e), 1);
  // The new point is the highest index; contract it, then delete e.
  Polymatroid after = contracted(ext, bit(p.n));
  return deleted(after, bit(e));
}

Polymatroid principal_extension_matroid(const Polymatroid& m, SubsetMask x,
                                        int count) {
  if (!m.is_matroid())
    throw std::invalid_argument("principal extension needs a matroid");
  if (!subset_of(x, m.ground()))
    throw std::invalid_argument("principal extension: set outside ground set");
  if (count < 0 || m.n + count > kMaxGround)
    throw std::invalid_argument("principal extension: size cap exceeded");
  Polymatroid cur = m;
  for (int step = 0; step < count; ++step) {
    std::vector<int> t(cur.rank.size() * 2);
    for (SubsetMask y = 0; y < cur.rank.size(); ++y) {
      t[y] = cur.rank[y];
      t[y | bit(cur.n)] =
          cur.rank[y] + (cur.rank[y | x] == cur.rank[y] ? 0 : 1);
    }
    cur = Polymatroid(cur.n + 1, std::move(t), cur.kbound);
  }
  return cur;
}

Polymatroid principal_extension_polymatroid(const Polymatroid& p, SubsetMask f,
                                            int krank) {
  if (!subset_of(f, p.ground()))
    throw std::invalid_argument("principal extension: set outside ground set");
  if (krank < 0 || p.rank[f] < krank)
    throw std::invalid_argument(
        "principal extension: rank(F) must be at least the new rank");
  LabeledMatroid lm = natural_matroid(p);
  if (lm.m.n + krank > kMaxGround)
    throw std::invalid_argument("principal extension: size cap exceeded");
  Polymatroid ext =
      principal_extension_matroid(lm.m, lm.group_union(f), krank);
  SubsetMask new_block = full_mask(lm.m.n + krank) ^ full_mask(lm.m.n);

  std::vector<int> t(std::size_t{1} << (p.n + 1));
  for (SubsetMask a = 0; a < (SubsetMask{1} << p.n); ++a) {
    SubsetMask xa = lm.group_union(a);
    t[a] = ext.rank[xa];
    t[a | bit(p.n)] = ext.rank[xa | new_block];
  }
  std::optional<int> kb = p.kbound;
  if (kb && krank > *kb) kb = krank;
  return Polymatroid(p.n + 1, std::move(t), kb);
}

}  // namespace pmt
