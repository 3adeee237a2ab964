#include "pmt/minors.hpp"

#include <algorithm>
#include <stdexcept>

#include "pmt/ops.hpp"

namespace pmt {

namespace {

// Next mask with the same popcount (Gosper); returns 0 past the end.
SubsetMask next_same_size(SubsetMask v, SubsetMask limit) {
  if (v == 0) return 0;
  SubsetMask c = v & -v;
  SubsetMask r = v + c;
  SubsetMask next = r | (((v ^ r) >> 2) / c);
  return next <= limit ? next : 0;
}

SubsetMask first_of_size(int size) { return full_mask(size); }

}  // namespace

InvariantKey invariant_key(const Polymatroid& p) {
  InvariantKey key;
  key.n = p.n;
  for (int e = 0; e < p.n; ++e) key.singles.push_back(p.singleton(e));
  for (int e = 0; e < p.n; ++e)
    for (int f = e + 1; f < p.n; ++f)
      key.pairs.push_back(p.rank[bit(e) | bit(f)]);
  std::sort(key.singles.begin(), key.singles.end());
  std::sort(key.pairs.begin(), key.pairs.end());
  return key;
}

namespace {

struct CanonSearch {
  const Polymatroid& p;
  int n;
  std::size_t size;
  std::vector<std::uint8_t> best, cand;
  std::vector<SubsetMask> orig;
  std::vector<int> order;
  SubsetMask used = 0;
  std::uint64_t nodes = 0, budget;

  CanonSearch(const Polymatroid& p_, std::uint64_t budget_)
      : p(p_),
        n(p_.n),
        size(std::size_t{1} << p_.n),
        best(size, 0xFF),
        cand(size, 0),
        orig(size, 0),
        order(p_.n, -1),
        budget(budget_) {}

  void run() {
    for (int v : p.rank)
      if (v < 0 || v > 255)
        throw std::invalid_argument("canonical form: rank outside [0,255]");
    cand[0] = (std::uint8_t)p.rank[0];
    descend(0);
  }

  void descend(int level) {
    if (++nodes > budget)
      throw std::runtime_error("canonical form: node budget exceeded");
    if (level == n) {
      if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                       best.end()))
        best = cand;
      return;
    }
    // New masks in [2^level, 2^{level+1}) involve only the elements
    // chosen so far plus the one placed at this level, so the encoding
    // prefix is decided level by level.
    const SubsetMask lo = SubsetMask{1} << level;
    for (int o = 0; o < n; ++o) {
      if (used & bit(o)) continue;
      for (SubsetMask m = lo; m < (lo << 1); ++m) {
        orig[m] = orig[m ^ lo] | bit(o);
        cand[m] = (std::uint8_t)p.rank[orig[m]];
      }
      if (std::lexicographical_compare(best.begin(), best.begin() + (lo << 1),
                                       cand.begin(), cand.begin() + (lo << 1)))
        continue;  // current best prefix is strictly smaller
      used |= bit(o);
      order[level] = o;
      descend(level + 1);
      used &= ~bit(o);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Polymatroid& p, std::uint64_t node_budget) {
  CanonSearch search(p, node_budget);
  search.run();
  CanonicalForm form;
  form.bytes.reserve(search.size + 1);
  form.bytes.push_back((std::uint8_t)p.n);
  form.bytes.insert(form.bytes.end(), search.best.begin(), search.best.end());
  form.key = invariant_key(p);
  return form;
}

namespace {

struct IsoSearch {
  const Polymatroid& a;
  const Polymatroid& b;
  int n;
  std::vector<int> map;
  std::vector<SubsetMask> img;
  SubsetMask used = 0;

  IsoSearch(const Polymatroid& a_, const Polymatroid& b_)
      : a(a_), b(b_), n(a_.n), map(a_.n, -1),
        img(std::size_t{1} << a_.n, 0) {}

  bool descend(int i) {
    if (i == n) return true;
    const SubsetMask prefix = full_mask(i);
    for (int v = 0; v < n; ++v) {
      if (used & bit(v)) continue;
      if (b.singleton(v) != a.singleton(i)) continue;
      bool ok = true;
      for (SubsetMask s = 0; s <= prefix && ok; ++s) {
        if (a.rank[s | bit(i)] != b.rank[img[s] | bit(v)]) ok = false;
        if (prefix == 0) break;
      }
      if (!ok) continue;
      for (SubsetMask s = 0; s <= prefix; ++s) {
        img[s | bit(i)] = img[s] | bit(v);
        if (prefix == 0) break;
      }
      used |= bit(v);
      map[i] = v;
      if (descend(i + 1)) return true;
      used &= ~bit(v);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> isomorphism(const Polymatroid& a,
                                            const Polymatroid& b) {
  if (a.n != b.n) return std::nullopt;
  if (a.n == 0) return std::vector<int>{};
  if (invariant_key(a) != invariant_key(b)) return std::nullopt;
  IsoSearch search(a, b);
  if (!search.descend(0)) return std::nullopt;
  return search.map;
}

bool are_isomorphic(const Polymatroid& a, const Polymatroid& b) {
  return isomorphism(a, b).has_value();
}

bool replay_certificate(const Polymatroid& host, const Polymatroid& pattern,
                        const Certificate& cert) {
  if (cert.contract & cert.del) return false;
  Reindexed minor = apply_minor(host, {cert.del, cert.contract});
  if (minor.p.n != pattern.n) return false;
  if ((int)cert.map.size() != pattern.n) return false;
  return permuted(minor.p, cert.map) == pattern;
}

namespace {

std::vector<int> sorted_singles(const Polymatroid& p, SubsetMask s) {
  std::vector<int> v;
  for (SubsetMask m = s; m; m &= m - 1) v.push_back(p.rank[m & -m]);
  std::sort(v.begin(), v.end());
  return v;
}

Polymatroid restrict_to(const Polymatroid& p, SubsetMask s) {
  return deleted(p, p.ground() & ~s);
}

// Shared minor-search loop; `collect` gathers all certificates instead
// of stopping at the first.
template <typename Sink>
void minor_search(const Polymatroid& host, const Polymatroid& pattern,
                  bool stop_at_first, Sink&& sink) {
  if (pattern.n > host.n) return;
  const int pfull = pattern.full_rank();
  const auto psingles = [&] {
    std::vector<int> v;
    for (int e = 0; e < pattern.n; ++e) v.push_back(pattern.singleton(e));
    std::sort(v.begin(), v.end());
    return v;
  }();
  const auto ppairs = [&] {
    std::vector<int> v;
    for (int e = 0; e < pattern.n; ++e)
      for (int f = e + 1; f < pattern.n; ++f)
        v.push_back(pattern.rank[bit(e) | bit(f)]);
    std::sort(v.begin(), v.end());
    return v;
  }();

  const SubsetMask hfull = host.ground();
  for (int csize = 0; csize <= host.n - pattern.n; ++csize) {
    SubsetMask c = first_of_size(csize);
    if (csize == 0) c = 0;
    for (;;) {
      if (host.full_rank() - host.rank[c] >= pfull) {
        Reindexed q = contract_elements(host, c);
        SubsetMask s = first_of_size(pattern.n);
        if (pattern.n == 0) s = 0;
        for (;;) {
          do {
            if (q.p.rank[s] != pfull) break;
            if (sorted_singles(q.p, s) != psingles) break;
            {
              std::vector<int> pairs;
              for (SubsetMask u = s; u; u &= u - 1)
                for (SubsetMask w = (u & (u - 1)); w; w &= w - 1)
                  pairs.push_back(q.p.rank[(u & -u) | (w & -w)]);
              std::sort(pairs.begin(), pairs.end());
              if (pairs != ppairs) break;
            }
            Polymatroid sub = restrict_to(q.p, s);
            auto iso = isomorphism(sub, pattern);
            if (!iso) break;
            Certificate cert;
            cert.contract = c;
            SubsetMask kept = 0;
            for (SubsetMask u = s; u; u &= u - 1)
              kept |= bit(q.old_index[std::countr_zero(u)]);
            cert.del = hfull & ~c & ~kept;
            cert.map = *iso;
            if (!replay_certificate(host, pattern, cert))
              throw std::logic_error("minor certificate failed replay");
            if (sink(cert) && stop_at_first) return;
          } while (false);
          if (pattern.n == 0) break;
          s = next_same_size(s, q.p.ground());
          if (s == 0) break;
        }
      }
      if (csize == 0) break;
      c = next_same_size(c, hfull);
      if (c == 0) break;
    }
  }
}

}  // namespace

std::optional<Certificate> find_minor(const Polymatroid& host,
                                      const Polymatroid& pattern) {
  std::optional<Certificate> out;
  minor_search(host, pattern, true, [&](const Certificate& c) {
    out = c;
    return true;
  });
  return out;
}

bool has_minor(const Polymatroid& host, const Polymatroid& pattern) {
  return find_minor(host, pattern).has_value();
}

std::vector<Certificate> all_minor_specs(const Polymatroid& host,
                                         const Polymatroid& pattern) {
  std::vector<Certificate> out;
  minor_search(host, pattern, false, [&](const Certificate& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Polymatroid mk4_matroid() {
  const SubsetMask lines[4] = {
      bit(0) | bit(3) | bit(4),  // {a,d,e}
      bit(1) | bit(4) | bit(5),  // {b,e,f}
      bit(2) | bit(3) | bit(5),  // {c,d,f}
      bit(0) | bit(1) | bit(2),  // {a,b,c}
  };
  std::vector<int> t(1u << 6);
  for (SubsetMask x = 0; x < t.size(); ++x) {
    int c = popcount(x);
    if (c <= 2) {
      t[x] = c;
    } else if (c == 3) {
      bool tri = false;
      for (SubsetMask l : lines) tri = tri || x == l;
      t[x] = tri ? 2 : 3;
    } else {
      t[x] = 3;
    }
  }
  return Polymatroid(6, std::move(t), 1);
}

namespace {

int gf2_rank(const std::vector<std::uint16_t>& cols, SubsetMask x) {
  std::uint16_t basis[16];
  int r = 0;
  for (SubsetMask m = x; m; m &= m - 1) {
    std::uint16_t v = cols[std::countr_zero(m)];
    for (int i = 0; i < r; ++i)
      if (std::uint16_t w = v ^ basis[i]; w < v) v = w;
    if (v) basis[r++] = v;
  }
  return r;
}

}  // namespace

bool is_binary(const Polymatroid& m) {
  if (!m.is_matroid()) throw std::invalid_argument("is_binary needs a matroid");
  SubsetMask basis = 0;
  std::vector<int> bpos;
  for (int e = 0; e < m.n; ++e)
    if (m.rank[basis | bit(e)] > m.rank[basis]) {
      basis |= bit(e);
      bpos.push_back(e);
    }
  const int r = (int)bpos.size();

  std::vector<std::uint16_t> cols(m.n, 0);
  for (int e = 0; e < m.n; ++e) {
    if (basis & bit(e)) {
      for (int i = 0; i < r; ++i)
        if (bpos[i] == e) cols[e] = (std::uint16_t)(1u << i);
      continue;
    }
    if (m.singleton(e) == 0) continue;  // loop: zero column
    for (int i = 0; i < r; ++i)
      if (m.rank[(basis ^ bit(bpos[i])) | bit(e)] == r)
        cols[e] |= (std::uint16_t)(1u << i);
  }

  for (SubsetMask x = 0; x < m.rank.size(); ++x)
    if (gf2_rank(cols, x) != m.rank[x]) return false;
  return true;
}

std::optional<Certificate> find_u24_minor(const Polymatroid& m) {
  if (!m.is_matroid())
    throw std::invalid_argument("U_{2,4} search needs a matroid");
  // A U_{2,4}-minor exists iff some contraction has four pairwise
  // nonparallel points on a common rank-2 flat.
  const SubsetMask hfull = m.ground();
  for (int csize = 0; csize + 4 <= m.n; ++csize) {
    SubsetMask c = csize == 0 ? 0 : first_of_size(csize);
    for (;;) {
      if (m.full_rank() - m.rank[c] >= 2) {
        Reindexed q = contract_elements(m, c);
        for (int e = 0; e < q.p.n; ++e) {
          if (q.p.singleton(e) != 1) continue;
          for (int f = e + 1; f < q.p.n; ++f) {
            if (q.p.singleton(f) != 1) continue;
            if (q.p.rank[bit(e) | bit(f)] != 2) continue;
            SubsetMask flat = closure(q.p, bit(e) | bit(f));
            SubsetMask pick = bit(e) | bit(f);
            for (int g = 0; g < q.p.n && popcount(pick) < 4; ++g) {
              if (pick & bit(g)) continue;
              if (!(flat & bit(g)) || q.p.singleton(g) != 1) continue;
              bool parallel = false;
              for (SubsetMask u = pick; u && !parallel; u &= u - 1)
                if (q.p.rank[(u & -u) | bit(g)] == 1) parallel = true;
              if (!parallel) pick |= bit(g);
            }
            if (popcount(pick) == 4) {
              Certificate cert;
              cert.contract = c;
              SubsetMask kept = 0;
              for (SubsetMask u = pick; u; u &= u - 1)
                kept |= bit(q.old_index[std::countr_zero(u)]);
              cert.del = hfull & ~c & ~kept;
              cert.map = {0, 1, 2, 3};  // U_{2,4} is fully symmetric
              if (!replay_certificate(m, uniform(2, 4), cert))
                throw std::logic_error("U_{2,4} certificate failed replay");
              return cert;
            }
          }
        }
      }
      if (csize == 0) break;
      c = next_same_size(c, hfull);
      if (c == 0) break;
    }
  }
  return std::nullopt;
}

bool is_binary_via_minor(const Polymatroid& m) {
  return !find_u24_minor(m).has_value();
}

std::optional<Certificate> find_mk4_minor(const Polymatroid& m) {
  if (!m.is_matroid())
    throw std::invalid_argument("M(K_4) search needs a matroid");
  return find_minor(m, mk4_matroid());
}

bool has_mk4_minor(const Polymatroid& m) {
  return find_mk4_minor(m).has_value();
}

namespace {

std::optional<Polymatroid> reduce_once(const Polymatroid& p) {
  const int total = p.full_rank();
  // Parallel pair: drop one copy.
  for (int e = 0; e < p.n; ++e)
    for (int f = e + 1; f < p.n; ++f)
      if (p.singleton(e) == 1 && p.singleton(f) == 1 &&
          p.rank[bit(e) | bit(f)] == 1)
        return deleted(p, bit(f));
  // Series pair (a 2-element cocircuit): contract one member.
  for (int e = 0; e < p.n; ++e) {
    if (p.rank[p.ground() ^ bit(e)] != total) continue;
    for (int f = e + 1; f < p.n; ++f) {
      if (p.rank[p.ground() ^ bit(f)] != total) continue;
      if (p.rank[p.ground() ^ bit(e) ^ bit(f)] == total - 1)
        return contracted(p, bit(e));
    }
  }
  return std::nullopt;
}

bool component_reduces(Polymatroid p) {
  while (p.n > 1) {
    auto next = reduce_once(p);
    if (!next) return false;
    p = std::move(*next);
  }
  return true;
}

}  // namespace

bool is_series_parallel(const Polymatroid& m) {
  if (!m.is_matroid())
    throw std::invalid_argument("series-parallel test needs a matroid");
  for (SubsetMask block : components(m))
    if (!component_reduces(restrict_to(m, block))) return false;
  return true;
}

bool is_series_parallel_via_exclusion(const Polymatroid& m) {
  return is_binary(m) && !has_mk4_minor(m);
}

}  // namespace pmt
