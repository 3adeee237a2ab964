#include "pmt/classes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pmt/catalog.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"

namespace pmt {

ClassId parse_class_id(const std::string& id) {
  if (id == "binary-natural") return ClassId::binary_natural;
  if (id == "no-mk4") return ClassId::no_mk4_natural;
  if (id == "sp") return ClassId::sp_natural;
  throw std::invalid_argument("unknown class id: " + id +
                              " (binary-natural|no-mk4|sp)");
}

const char* to_string(ClassId c) {
  switch (c) {
    case ClassId::binary_natural: return "binary-natural";
    case ClassId::no_mk4_natural: return "no-mk4";
    case ClassId::sp_natural: return "sp";
  }
  return "?";
}

std::optional<bool> MembershipCache::lookup(const std::vector<std::uint8_t>& key,
                                            ClassId c) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  signed char v = it->second[(int)c];
  if (v < 0) return std::nullopt;
  return v > 0;
}

void MembershipCache::store(const std::vector<std::uint8_t>& key, ClassId c,
                            bool value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end())
    it = map_.emplace(key, std::array<signed char, 3>{-1, -1, -1}).first;
  it->second[(int)c] = value ? 1 : 0;
}

std::size_t MembershipCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

bool in_class(const Polymatroid& p, ClassId c, MembershipCache* cache) {
  if (!p.is_kpolymatroid(2))
    throw std::invalid_argument("class membership needs a 2-polymatroid");
  std::vector<std::uint8_t> key;
  if (cache) {
    key = canonical_form(p).bytes;
    if (auto hit = cache->lookup(key, c)) return *hit;
  }
  LabeledMatroid lm = natural_matroid(p);
  bool in = false;
  switch (c) {
    case ClassId::binary_natural: in = is_binary(lm.m); break;
    case ClassId::no_mk4_natural: in = !has_mk4_minor(lm.m); break;
    case ClassId::sp_natural: in = is_series_parallel(lm.m); break;
  }
  if (cache) cache->store(key, c, in);
  return in;
}

bool is_excluded_minor(const Polymatroid& p, ClassId c,
                       MembershipCache* cache) {
  if (in_class(p, c, cache)) return false;
  for (int e = 0; e < p.n; ++e) {
    if (!in_class(deleted(p, bit(e)), c, cache)) return false;
    if (!in_class(contracted(p, bit(e)), c, cache)) return false;
  }
  return true;
}

ExclusionReport excluded_minor_report(const Polymatroid& p, ClassId c,
                                      MembershipCache* cache) {
  ExclusionReport report;
  report.self_in_class = in_class(p, c, cache);
  bool minors_ok = true;
  for (int e = 0; e < p.n; ++e) {
    MinorMembership m;
    m.element = e;
    m.deletion_in_class = in_class(deleted(p, bit(e)), c, cache);
    m.contraction_in_class = in_class(contracted(p, bit(e)), c, cache);
    minors_ok = minors_ok && m.deletion_in_class && m.contraction_in_class;
    report.minors.push_back(m);
  }
  report.excluded = !report.self_in_class && minors_ok;
  return report;
}

bool in_r_set(const Polymatroid& p, ClassId c, MembershipCache* cache) {
  if (!is_excluded_minor(p, c, cache))
    throw std::invalid_argument("in_r_set requires an excluded minor");
  for (int e = 0; e < p.n; ++e) {
    if (p.singleton(e) != 2) continue;
    if (!in_class(compress(p, e), c, cache)) return false;
  }
  return true;
}

namespace {

struct DecompressionSearch {
  const Polymatroid& p;
  int n1;                      // extended ground-set size
  SubsetMask gbit;
  std::vector<int> t;          // table being assigned
  std::vector<SubsetMask> order;
  std::vector<Polymatroid> leaves;

  explicit DecompressionSearch(const Polymatroid& p_)
      : p(p_), n1(p_.n + 1), gbit(bit(p_.n)),
        t(std::size_t{1} << (p_.n + 1), -1) {
    t[0] = 0;
    for (int size = 1; size <= n1; ++size)
      for (SubsetMask m = 1; m < t.size(); ++m)
        if (popcount(m) == size) order.push_back(m);
  }

  void run() { assign(0); }

  // A subset X of the old ground set spans g exactly when its rank was
  // raised; spanning is inherited upward, so a raised cover forces the
  // raise here.  Checking it at assignment time keeps the search from
  // discovering the conflict a cardinality band later.
  bool spans_g(SubsetMask x) const { return t[x] == p.rank[x] + 1; }

  void assign(std::size_t idx) {
    if (idx == order.size()) {
      leaves.emplace_back(n1, t, 2);
      return;
    }
    const SubsetMask m = order[idx];
    int lo = 0, hi = INT32_MAX;
    for (SubsetMask u = m; u; u &= u - 1) {
      SubsetMask i = u & -u;
      lo = std::max(lo, t[m ^ i]);
      for (SubsetMask w = u & (u - 1); w; w &= w - 1) {
        SubsetMask j = w & -w;
        hi = std::min(hi, t[m ^ i] + t[m ^ j] - t[m ^ i ^ j]);
      }
    }
    if (m == gbit) {
      // The decompressing element is a line.
      tryValue(idx, m, 2, lo, hi);
      return;
    }
    if (m & gbit) {
      SubsetMask x = m ^ gbit;
      if (spans_g(x)) {
        tryValue(idx, m, t[x], lo, hi);
      } else {
        tryValue(idx, m, t[x] + 1, lo, hi);
        tryValue(idx, m, t[x] + 2, lo, hi);
      }
      return;
    }
    // Old subset: the compression equation allows rank or rank+1.
    bool forced_raise = false;
    for (SubsetMask u = m; u && !forced_raise; u &= u - 1)
      if (spans_g(m ^ (u & -u))) forced_raise = true;
    if (!forced_raise) tryValue(idx, m, p.rank[m], lo, hi);
    if (popcount(m) > 1 || p.rank[m] + 1 <= 2)  // singletons stay lines at most
      tryValue(idx, m, p.rank[m] + 1, lo, hi);
  }

  void tryValue(std::size_t idx, SubsetMask m, int v, int lo, int hi) {
    if (v < lo || v > hi) return;
    t[m] = v;
    assign(idx + 1);
    t[m] = -1;
  }
};

}  // namespace

std::vector<Polymatroid> decompressions(const Polymatroid& p, ClassId c,
                                        MembershipCache* cache) {
  if (!p.is_kpolymatroid(2))
    throw std::invalid_argument("decompressions needs a 2-polymatroid");
  if (p.n + 1 > kMaxGround)
    throw std::invalid_argument("decompressions: size cap exceeded");

  DecompressionSearch search(p);
  search.run();

  std::set<CanonicalForm> seen;
  std::vector<std::pair<CanonicalForm, Polymatroid>> unique;
  for (const Polymatroid& cand : search.leaves) {
    CanonicalForm form = canonical_form(cand);
    if (seen.insert(form).second) unique.emplace_back(std::move(form), cand);
  }
  std::sort(unique.begin(), unique.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Polymatroid> out;
  for (auto& [form, cand] : unique)
    if (is_excluded_minor(cand, c, cache)) out.push_back(cand);
  return out;
}

bool has_c_minor(const Polymatroid& host, const Polymatroid& pattern) {
  if (pattern.n > host.n) return false;
  const CanonicalForm target = canonical_form(pattern);
  std::set<std::vector<std::uint8_t>> visited;
  std::vector<Polymatroid> stack{host};
  while (!stack.empty()) {
    Polymatroid cur = std::move(stack.back());
    stack.pop_back();
    CanonicalForm form = canonical_form(cur);
    if (cur.n == pattern.n) {
      if (form == target) return true;
      continue;
    }
    if (!visited.insert(form.bytes).second) continue;
    for (int e = 0; e < cur.n; ++e) {
      stack.push_back(deleted(cur, bit(e)));
      stack.push_back(contracted(cur, bit(e)));
      stack.push_back(compress(cur, e));
    }
  }
  return false;
}

bool is_excluded_c_minor(const Polymatroid& p, ClassId c,
                         MembershipCache* cache) {
  if (in_class(p, c, cache)) return false;
  for (int e = 0; e < p.n; ++e) {
    if (!in_class(deleted(p, bit(e)), c, cache)) return false;
    if (!in_class(contracted(p, bit(e)), c, cache)) return false;
    if (!in_class(compress(p, e), c, cache)) return false;
  }
  return true;
}

bool mk4_witnesses_contract_one_per_line(const Polymatroid& p) {
  LabeledMatroid lm = natural_matroid(p);
  std::vector<Certificate> specs = all_minor_specs(lm.m, mk4_matroid());
  if (specs.empty()) return false;
  for (const Certificate& cert : specs) {
    for (int e = 0; e < p.n; ++e) {
      SubsetMask g = lm.groups[e];
      if (popcount(g) == 2) {
        if (popcount(cert.del & g) != 0) return false;
        if (popcount(cert.contract & g) != 1) return false;
      } else if (popcount(g) == 1) {
        if ((cert.del | cert.contract) & g) return false;
      }
    }
  }
  return true;
}

bool rho_a_independence_criterion(SubsetMask a) {
  Polymatroid p = rho_a(a);
  Polymatroid base = mk4_matroid();
  LabeledMatroid lm = natural_matroid(p);
  const SubsetMask all = lm.m.ground();
  for (SubsetMask s = 0; s <= all; ++s) {
    SubsetMask proj = 0;
    for (int e = 0; e < p.n; ++e)
      if (popcount(s & lm.groups[e]) == p.singleton(e)) proj |= bit(e);
    bool ind_nat = lm.m.rank[s] == popcount(s);
    bool ind_base = base.rank[proj] == popcount(proj);
    if (ind_nat != ind_base) return false;
    if (all == 0) break;
  }
  return true;
}

bool compression_preserves_independence(const Polymatroid& q, int g) {
  if (g < 0 || g >= q.n)
    throw std::invalid_argument("element outside ground set");
  Polymatroid r = compress(q, g);
  // Old index of compressed element i.
  auto old_of = [&](int i) { return i < g ? i : i + 1; };
  for (SubsetMask x = 0; x < (SubsetMask{1} << r.n); ++x) {
    if (!is_independent_set(r, x)) continue;
    SubsetMask orig = 0;
    bool ranks_unchanged = true;
    for (SubsetMask u = x; u; u &= u - 1) {
      int i = std::countr_zero(u);
      orig |= bit(old_of(i));
      if (q.singleton(old_of(i)) != r.singleton(i)) ranks_unchanged = false;
    }
    if (!ranks_unchanged) continue;
    if (q.rank[orig] != r.rank[x]) return false;
    if (!is_independent_set(q, orig)) return false;
  }
  return true;
}

}  // namespace pmt
