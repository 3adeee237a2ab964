#include "pmt/natural.hpp"

#include <algorithm>
#include <stdexcept>

#include "pmt/ops.hpp"

namespace pmt {

namespace {

std::vector<int> group_members(SubsetMask g) {
  std::vector<int> v;
  for (SubsetMask s = g; s; s &= s - 1) v.push_back(std::countr_zero(s));
  return v;
}

SubsetMask first_members(SubsetMask g, int count) {
  SubsetMask out = 0;
  for (SubsetMask s = g; s && count > 0; s &= s - 1, --count) out |= s & -s;
  return out;
}

// Drops `removed` from the labeled matroid's ground set, applying the
// given minor spec to the table; group masks are compressed to the new
// dense indexing.  `drop_group`, when >= 0, removes that group entirely.
LabeledMatroid labeled_minor(const LabeledMatroid& lm, MinorSpec spec,
                             int drop_group = -1) {
  Reindexed res = apply_minor(lm.m, spec);
  std::vector<int> new_of(lm.m.n, -1);
  for (std::size_t i = 0; i < res.old_index.size(); ++i)
    new_of[res.old_index[i]] = (int)i;
  LabeledMatroid out;
  out.m = std::move(res.p);
  for (int g = 0; g < (int)lm.groups.size(); ++g) {
    if (g == drop_group) continue;
    SubsetMask ng = 0;
    for (int member : group_members(lm.groups[g]))
      if (new_of[member] >= 0) ng |= bit(new_of[member]);
    out.groups.push_back(ng);
  }
  return out;
}

}  // namespace

bool labeled_equal(const LabeledMatroid& a, const LabeledMatroid& b) {
  return a.m == b.m && a.groups == b.groups;
}

LabeledMatroid natural_matroid(const Polymatroid& p) {
  const int m = p.singleton_sum();
  if (m > kMaxGround)
    throw std::invalid_argument(
        "natural matroid: sum of singleton ranks exceeds 16");

  LabeledMatroid lm;
  lm.groups.resize(p.n);
  int offset = 0;
  for (int e = 0; e < p.n; ++e) {
    int size = p.singleton(e);
    lm.groups[e] = (full_mask(size)) << offset;
    offset += size;
  }

  if (p.is_matroid()) {
    // Loopless groups are singletons, so the table is p with loops
    // removed.
    SubsetMask loops = 0;
    for (int e = 0; e < p.n; ++e)
      if (p.singleton(e) == 0) loops |= bit(e);
    lm.m = deleted(p, loops);
    lm.m.kbound = 1;
    return lm;
  }

  // Only subsets of the nonloop support matter in the minimum.
  std::vector<std::pair<SubsetMask, int>> terms;  // (X_A, rank(A))
  SubsetMask support = 0;
  for (int e = 0; e < p.n; ++e)
    if (p.singleton(e) > 0) support |= bit(e);
  for (SubsetMask a = support;; a = (a - 1) & support) {
    terms.emplace_back(lm.group_union(a), p.rank[a]);
    if (a == 0) break;
  }

  std::vector<int> t(std::size_t{1} << m);
  for (SubsetMask x = 0; x < t.size(); ++x) {
    int best = popcount(x);  // A = empty set
    for (auto [xa, ra] : terms) {
      int v = ra + popcount(x & ~xa);
      if (v < best) best = v;
    }
    t[x] = best;
  }
  lm.m = Polymatroid(m, std::move(t), 1);
  return lm;
}

LabeledMatroid k_natural_matroid(const Polymatroid& p, int k) {
  if (!p.is_kpolymatroid(k))
    throw std::invalid_argument("k-natural matroid: not a k-polymatroid");
  if (k * p.n > kMaxGround)
    throw std::invalid_argument("k-natural matroid: k*n exceeds 16");

  LabeledMatroid nat = natural_matroid(p);
  Polymatroid ext = nat.m;
  // Pad each group to k elements, freely added to the group's span.
  std::vector<std::vector<int>> members(p.n);
  for (int e = 0; e < p.n; ++e)
    members[e] = group_members(nat.groups[e]);
  for (int e = 0; e < p.n; ++e) {
    int pad = k - p.singleton(e);
    int base = ext.n;
    ext = principal_extension_matroid(ext, nat.groups[e], pad);
    for (int j = 0; j < pad; ++j) members[e].push_back(base + j);
  }

  // Relabel so group i occupies [k*i, k*i + k).
  std::vector<int> perm(ext.n);
  for (int e = 0; e < p.n; ++e)
    for (int j = 0; j < k; ++j) perm[members[e][j]] = k * e + j;
  LabeledMatroid out;
  out.m = permuted(ext, perm);
  out.m.kbound = 1;
  out.groups.resize(p.n);
  for (int e = 0; e < p.n; ++e) out.groups[e] = full_mask(k) << (k * e);
  return out;
}

namespace {

template <typename Fn>
void for_each_type(const LabeledMatroid& lm, Fn&& fn) {
  const int n = (int)lm.groups.size();
  std::vector<int> cap(n), t(n, 0);
  for (int i = 0; i < n; ++i) cap[i] = popcount(lm.groups[i]);
  for (;;) {
    fn(t);
    int i = 0;
    while (i < n && t[i] == cap[i]) t[i++] = 0;
    if (i == n) break;
    ++t[i];
  }
}

SubsetMask representative(const LabeledMatroid& lm, const TypeVector& t) {
  SubsetMask v = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    v |= first_members(lm.groups[i], t[i]);
  return v;
}

}  // namespace

std::set<TypeVector> basis_types(const LabeledMatroid& lm) {
  std::set<TypeVector> out;
  const int full = lm.m.full_rank();
  for_each_type(lm, [&](const TypeVector& t) {
    int size = 0;
    for (int ti : t) size += ti;
    if (size != full) return;
    if (lm.m.rank[representative(lm, t)] == full) out.insert(t);
  });
  return out;
}

std::set<TypeVector> circuit_types(const LabeledMatroid& lm) {
  std::set<TypeVector> out;
  for_each_type(lm, [&](const TypeVector& t) {
    SubsetMask v = representative(lm, t);
    int size = popcount(v);
    if (size == 0 || lm.m.rank[v] != size - 1) return;
    // Every one-element removal must be independent; by the clone
    // property one removal per nonempty group suffices.
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == 0) continue;
      SubsetMask w = v & ~(v & lm.groups[i] & -(v & lm.groups[i]));
      if (lm.m.rank[w] != size - 1) return;
    }
    out.insert(t);
  });
  return out;
}

std::set<TypeVector> k_complements(const std::set<TypeVector>& types, int k) {
  std::set<TypeVector> out;
  for (const TypeVector& t : types) {
    TypeVector c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) c[i] = k - t[i];
    out.insert(c);
  }
  return out;
}

bool is_clone_pair(const Polymatroid& matroid, int a, int b) {
  if (a == b) throw std::invalid_argument("clone pair requires a != b");
  const SubsetMask ba = bit(a), bb = bit(b);
  for (SubsetMask x = 0; x < matroid.rank.size(); ++x) {
    bool ha = x & ba, hb = x & bb;
    if (ha == hb) continue;
    SubsetMask y = x ^ ba ^ bb;
    if (matroid.rank[x] != matroid.rank[y]) return false;
  }
  return true;
}

bool check_natural_characterization(const LabeledMatroid& lm,
                                    const Polymatroid& p) {
  if ((int)lm.groups.size() != p.n)
    throw std::invalid_argument("group-size mismatch: group count");
  bool natural_sizes = true, uniform_sizes = true;
  int k = lm.groups.empty() ? 0 : popcount(lm.groups[0]);
  for (int e = 0; e < p.n; ++e) {
    int size = popcount(lm.groups[e]);
    if (size != p.singleton(e)) natural_sizes = false;
    if (size != k || size < p.singleton(e)) uniform_sizes = false;
  }
  if (!natural_sizes && !uniform_sizes)
    throw std::invalid_argument("group-size mismatch");

  for (SubsetMask g : lm.groups) {
    auto mem = group_members(g);
    for (std::size_t i = 0; i + 1 < mem.size(); ++i)
      if (!is_clone_pair(lm.m, mem[i], mem[i + 1])) return false;
  }
  for (SubsetMask a = 0; a < (SubsetMask{1} << p.n); ++a)
    if (lm.m.rank[lm.group_union(a)] != p.rank[a]) return false;
  return true;
}

Polymatroid rank_dual(const Polymatroid& matroid) {
  if (!matroid.is_matroid())
    throw std::invalid_argument("rank_dual needs a matroid");
  return k_dual(matroid, 1);
}

LabeledMatroid labeled_dual(const LabeledMatroid& lm) {
  return {rank_dual(lm.m), lm.groups};
}

bool natural_of_minor_check(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("element outside ground set");
  LabeledMatroid lm = natural_matroid(p);
  const SubsetMask xe = lm.groups[e];

  LabeledMatroid del = labeled_minor(lm, {xe, 0}, e);
  if (!labeled_equal(del, natural_matroid(deleted(p, bit(e))))) return false;

  Polymatroid pc = contracted(p, bit(e));
  LabeledMatroid contr = labeled_minor(lm, {0, xe}, e);
  // Keep the first rank-after-contraction members of each group.
  SubsetMask keep = 0;
  for (int f = 0; f < pc.n; ++f)
    keep |= first_members(contr.groups[f], pc.singleton(f));
  LabeledMatroid tr = labeled_minor(contr, {contr.m.ground() & ~keep, 0});
  return labeled_equal(tr, natural_matroid(pc));
}

bool knatural_of_minor_check(const Polymatroid& p, int k, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("element outside ground set");
  LabeledMatroid lm = k_natural_matroid(p, k);
  const SubsetMask ye = lm.groups[e];
  LabeledMatroid del = labeled_minor(lm, {ye, 0}, e);
  if (!labeled_equal(del, k_natural_matroid(deleted(p, bit(e)), k)))
    return false;
  LabeledMatroid contr = labeled_minor(lm, {0, ye}, e);
  return labeled_equal(contr, k_natural_matroid(contracted(p, bit(e)), k));
}

bool compress_matches_natural_minor(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("element outside ground set");
  if (p.singleton(e) == 0)
    throw std::invalid_argument("compression identity needs rank(e) > 0");
  LabeledMatroid lm = natural_matroid(p);
  const SubsetMask xe = lm.groups[e];
  const SubsetMask e1 = xe & -xe;
  SubsetMask y = 0;
  for (int f = 0; f < p.n; ++f) {
    if (f == e) continue;
    if (p.rank[bit(e) | bit(f)] == p.rank[bit(f)])
      y |= first_members(lm.groups[f], 1);
  }
  LabeledMatroid rhs = labeled_minor(lm, {(xe ^ e1) | y, e1}, e);
  return labeled_equal(rhs, natural_matroid(compress(p, e)));
}

bool compress_matches_knatural_minor(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("element outside ground set");
  if (p.singleton(e) != 2)
    throw std::invalid_argument("identity applies to lines");
  LabeledMatroid lm = k_natural_matroid(p, 2);
  const SubsetMask ye = lm.groups[e];
  const SubsetMask e1 = ye & -ye;
  LabeledMatroid rhs = labeled_minor(lm, {ye ^ e1, e1}, e);
  return labeled_equal(rhs, k_natural_matroid(compress(p, e), 2));
}

bool compress_matches_natural_line_minor(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.n)
    throw std::invalid_argument("element outside ground set");
  if (p.singleton(e) != 2)
    throw std::invalid_argument("identity applies to lines");
  for (int f = 0; f < p.n; ++f)
    if (f != e && relation(p, e, f) == Relation::parallel &&
        p.singleton(f) == 2)
      throw std::invalid_argument("identity needs no line parallel to e");
  LabeledMatroid lm = natural_matroid(p);
  const SubsetMask xe = lm.groups[e];
  const SubsetMask e1 = xe & -xe;
  LabeledMatroid rhs = labeled_minor(lm, {xe ^ e1, e1}, e);
  return labeled_equal(rhs, natural_matroid(compress(p, e)));
}

}  // namespace pmt
