#include "pmt/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pmt/minors.hpp"
#include "pmt/ops.hpp"

namespace pmt {

namespace {

struct BudgetExhausted {};

struct Generator {
  const GenConfig& cfg;
  std::vector<int> t;
  std::vector<SubsetMask> order;
  std::uint64_t nodes = 0;
  std::uint64_t labeled = 0;
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::pair<std::vector<std::uint8_t>, Polymatroid>> found;

  explicit Generator(const GenConfig& cfg_)
      : cfg(cfg_), t(std::size_t{1} << cfg_.n, -1) {
    t[0] = 0;
    for (int size = 1; size <= cfg.n; ++size)
      for (SubsetMask m = 1; m < t.size(); ++m)
        if (popcount(m) == size) order.push_back(m);
  }

  void run() { assign(0); }

  void assign(std::size_t idx) {
    if (++nodes > cfg.node_budget) throw BudgetExhausted{};
    if (idx == order.size()) {
      leaf();
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
    if (popcount(m) == 1) {
      int e = std::countr_zero(m);
      hi = std::min(hi, cfg.kmax);
      if (cfg.singleton_ranks) lo = hi = (*cfg.singleton_ranks)[e];
      if (cfg.loopless) lo = std::max(lo, 1);
    } else if (popcount(m) == 2 && cfg.no_parallel_points) {
      SubsetMask i = m & -m, j = m ^ (m & -m);
      if (t[i] == 1 && t[j] == 1) lo = std::max(lo, 2);
    }
    for (int v = lo; v <= hi; ++v) {
      t[m] = v;
      assign(idx + 1);
    }
    t[m] = -1;
  }

  void leaf() {
    ++labeled;
    Polymatroid p(cfg.n, t, cfg.kmax);
    if (cfg.connected && components(p).size() > 1) return;
    std::vector<std::uint8_t> key = canonical_form(p).bytes;
    if (!seen.insert(key).second) return;
    if (!validate(p, ValidateMode::reference).pass)
      throw std::logic_error("generator produced an invalid table");
    found.emplace_back(std::move(key), std::move(p));
  }
};

EnumResult finish(Generator& gen, bool complete) {
  EnumResult out;
  out.complete = complete;
  out.nodes = gen.nodes;
  out.labeled = gen.labeled;
  std::sort(gen.found.begin(), gen.found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, p] : gen.found) out.classes.push_back(std::move(p));
  return out;
}

}  // namespace

EnumResult enumerate_polymatroids(const GenConfig& cfg) {
  if (cfg.n < 0 || cfg.n > 4)
    throw std::invalid_argument("enumeration supports n <= 4");
  if (cfg.singleton_ranks && (int)cfg.singleton_ranks->size() != cfg.n)
    throw std::invalid_argument("singleton profile size mismatch");
  Generator gen(cfg);
  if (cfg.n == 0) {
    EnumResult out;
    out.classes.push_back(Polymatroid());
    out.nodes = 1;
    out.labeled = 1;
    return out;
  }
  try {
    gen.run();
  } catch (const BudgetExhausted&) {
    return finish(gen, false);
  }
  return finish(gen, true);
}

EnumResult enumerate_naive(const GenConfig& cfg) {
  if (cfg.n < 0 || cfg.n > 3)
    throw std::invalid_argument("naive enumeration supports n <= 3");
  Generator gen(cfg);  // reused only for bookkeeping containers
  const std::size_t slots = std::size_t{1} << cfg.n;
  std::vector<int> cap(slots, 0);
  for (SubsetMask m = 1; m < slots; ++m) cap[m] = cfg.kmax * popcount(m);
  std::vector<int> t(slots, 0);
  for (;;) {
    ++gen.nodes;
    Polymatroid p(cfg.n, t, cfg.kmax);
    bool keep = validate(p, ValidateMode::reference).pass;
    if (keep && cfg.loopless)
      for (int e = 0; e < cfg.n; ++e) keep = keep && p.singleton(e) >= 1;
    if (keep && cfg.no_parallel_points)
      for (int e = 0; e < cfg.n && keep; ++e)
        for (int f = e + 1; f < cfg.n && keep; ++f)
          if (p.singleton(e) == 1 && p.singleton(f) == 1 &&
              p.rank[bit(e) | bit(f)] == 1)
            keep = false;
    if (keep && cfg.connected) keep = components(p).size() <= 1;
    if (keep) {
      ++gen.labeled;
      std::vector<std::uint8_t> key = canonical_form(p).bytes;
      if (gen.seen.insert(key).second)
        gen.found.emplace_back(std::move(key), std::move(p));
    }
    // Odometer over the table entries.
    std::size_t i = 1;
    while (i < slots && t[i] == cap[i]) t[i++] = 0;
    if (i == slots) break;
    ++t[i];
  }
  return finish(gen, true);
}

FindResult find_excluded_minors(ClassId c, int n_max, bool structural_filters,
                                MembershipCache* cache,
                                std::uint64_t node_budget) {
  if (n_max > 4)
    throw std::invalid_argument("excluded-minor search supports n <= 4");
  FindResult out;
  out.structural_filters = structural_filters;
  out.n_max = n_max;
  MembershipCache local;
  if (!cache) cache = &local;
  for (int n = 1; n <= n_max; ++n) {
    GenConfig cfg;
    cfg.n = n;
    cfg.node_budget = node_budget;
    if (structural_filters) {
      cfg.loopless = true;
      cfg.no_parallel_points = true;
      cfg.connected = true;
    }
    EnumResult stream = enumerate_polymatroids(cfg);
    out.complete = out.complete && stream.complete;
    for (const Polymatroid& p : stream.classes)
      if (is_excluded_minor(p, c, cache))
        out.found.push_back({p, excluded_minor_report(p, c, cache)});
  }
  return out;
}

}  // namespace pmt
