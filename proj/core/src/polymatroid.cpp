#include "pmt/polymatroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmt {

Polymatroid::Polymatroid(int n_, std::vector<int> table,
                         std::optional<int> kbound_)
    : n(n_), rank(std::move(table)), kbound(kbound_) {
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("ground-set size out of range [0,16]");
  if (rank.size() != (std::size_t{1} << n))
    throw std::invalid_argument("rank table must have exactly 2^n entries");
}

int Polymatroid::singleton_sum() const {
  int s = 0;
  for (int e = 0; e < n; ++e) s += singleton(e);
  return s;
}

bool Polymatroid::is_matroid() const {
  for (int e = 0; e < n; ++e)
    if (singleton(e) > 1) return false;
  return true;
}

bool Polymatroid::is_kpolymatroid(int k) const {
  for (int e = 0; e < n; ++e)
    if (singleton(e) > k) return false;
  return true;
}

Polymatroid uniform(int r, int n) {
  if (r < 0 || n < 0 || n > kMaxGround || r > n)
    throw std::invalid_argument("uniform(r,n) needs 0 <= r <= n <= 16");
  std::vector<int> t(std::size_t{1} << n);
  for (SubsetMask x = 0; x < t.size(); ++x)
    t[x] = std::min(r, popcount(x));
  return Polymatroid(n, std::move(t), 1);
}

Polymatroid permuted(const Polymatroid& p, const std::vector<int>& perm) {
  if ((int)perm.size() != p.n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<SubsetMask> image(std::size_t{1} << p.n, 0);
  for (SubsetMask x = 1; x < image.size(); ++x) {
    SubsetMask low = x & (x - 1);
    image[x] = image[low] | bit(perm[std::countr_zero(x)]);
  }
  std::vector<int> t(image.size());
  for (SubsetMask x = 0; x < image.size(); ++x) t[image[x]] = p.rank[x];
  return Polymatroid(p.n, std::move(t), p.kbound);
}

std::string AxiomReport::message() const {
  if (pass) return "pass";
  auto set = [](SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for (int e = 0; m; ++e, m >>= 1)
      if (m & 1) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
      }
    return s + "}";
  };
  switch (violated) {
    case Axiom::table_size:
      return "table-size mismatch";
    case Axiom::normalized:
      return "rank of the empty set is nonzero";
    case Axiom::nondecreasing:
      return "nondecreasing violated at " + set(witness_a) + " subset of " +
             set(witness_b);
    case Axiom::submodular:
      return "submodularity violated at " + set(witness_a) + ", " +
             set(witness_b);
    case Axiom::kbound:
      return "singleton rank exceeds declared bound at " + set(witness_a);
    default:
      return "pass";
  }
}

AxiomReport validate(const Polymatroid& p, ValidateMode mode) {
  AxiomReport r;
  auto fail = [&r](Axiom a, SubsetMask wa, SubsetMask wb) {
    r.pass = false;
    r.violated = a;
    r.witness_a = wa;
    r.witness_b = wb;
    return r;
  };

  const std::size_t want = std::size_t{1} << p.n;
  if (p.rank.size() != want) return fail(Axiom::table_size, 0, 0);
  if (p.rank[0] != 0) return fail(Axiom::normalized, 0, 0);
  const SubsetMask full = p.ground();

  if (mode == ValidateMode::fast) {
    for (SubsetMask x = 0; x <= full; ++x) {
      for (int i = 0; i < p.n; ++i) {
        if (x & bit(i)) continue;
        if (p.rank[x] > p.rank[x | bit(i)])
          return fail(Axiom::nondecreasing, x, x | bit(i));
      }
    }
    for (SubsetMask x = 0; x <= full; ++x) {
      for (int i = 0; i < p.n; ++i) {
        if (x & bit(i)) continue;
        for (int j = i + 1; j < p.n; ++j) {
          if (x & bit(j)) continue;
          if (p.rank[x | bit(i)] + p.rank[x | bit(j)] <
              p.rank[x | bit(i) | bit(j)] + p.rank[x])
            return fail(Axiom::submodular, x | bit(i), x | bit(j));
        }
      }
    }
  } else {
    // All pairs A subset of B, then all pairs (A, B), exactly as stated.
    for (SubsetMask b = 0; b <= full; ++b) {
      for (SubsetMask a = b;; a = (a - 1) & b) {
        if (p.rank[a] > p.rank[b]) return fail(Axiom::nondecreasing, a, b);
        if (a == 0) break;
      }
    }
    for (SubsetMask a = 0; a <= full; ++a) {
      for (SubsetMask b = 0; b <= full; ++b) {
        if (p.rank[a | b] + p.rank[a & b] > p.rank[a] + p.rank[b])
          return fail(Axiom::submodular, a, b);
      }
    }
  }

  if (p.kbound) {
    for (int e = 0; e < p.n; ++e)
      if (p.singleton(e) > *p.kbound) return fail(Axiom::kbound, bit(e), 0);
  }
  return r;
}

SubsetMask closure(const Polymatroid& p, SubsetMask x) {
  if (!subset_of(x, p.ground()))
    throw std::invalid_argument("subset outside ground set");
  SubsetMask cl = 0;
  for (int e = 0; e < p.n; ++e)
    if (p.rank[x | bit(e)] == p.rank[x]) cl |= bit(e);
  return cl;
}

bool spans(const Polymatroid& p, SubsetMask x, int e) {
  return p.rank[x | bit(e)] == p.rank[x];
}

bool is_flat(const Polymatroid& p, SubsetMask x) {
  return closure(p, x) == x;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::parallel: return "parallel";
    case Relation::skew: return "skew";
    case Relation::first_on_second: return "lies-on(e,f)";
    case Relation::second_on_first: return "lies-on(f,e)";
    default: return "other";
  }
}

Relation relation(const Polymatroid& p, int e, int f) {
  if (e == f) throw std::invalid_argument("relation requires e != f");
  const int re = p.singleton(e), rf = p.singleton(f);
  const int rb = p.rank[bit(e) | bit(f)];
  if (re > 0 && re == rf && rf == rb) return Relation::parallel;
  if (re > 0 && rf > 0 && rb == re + rf) return Relation::skew;
  if (0 < re && re < rf && rb == rf) return Relation::first_on_second;
  if (0 < rf && rf < re && rb == re) return Relation::second_on_first;
  return Relation::other;
}

bool is_independent_set(const Polymatroid& p, SubsetMask x) {
  if (!subset_of(x, p.ground()))
    throw std::invalid_argument("subset outside ground set");
  int sum = 0;
  for (SubsetMask m = x; m; m &= m - 1) {
    int r = p.rank[m & -m];
    if (r == 0) return false;
    sum += r;
  }
  return p.rank[x] == sum;
}

std::vector<SubsetMask> components(const Polymatroid& p) {
  if (p.n == 0) return {};
  const SubsetMask full = p.ground();
  const int total = p.rank[full];

  // Separators (sets S with rank(S) + rank(E-S) = rank(E)) are closed
  // under intersection; the block of element i is the smallest separator
  // containing i.
  std::vector<SubsetMask> comp(p.n, full);
  for (SubsetMask s = 1; s < full; ++s) {
    if (p.rank[s] + p.rank[full ^ s] != total) continue;
    for (int i = 0; i < p.n; ++i)
      if (s & bit(i)) comp[i] &= s;
  }

  std::vector<SubsetMask> blocks;
  SubsetMask seen = 0;
  for (int i = 0; i < p.n; ++i) {
    if (seen & bit(i)) continue;
    blocks.push_back(comp[i]);
    seen |= comp[i];
  }

  // Direct-sum identity over the whole lattice; guards the partition.
  SubsetMask covered = 0;
  for (SubsetMask b : blocks) covered |= b;
  bool ok = covered == full;
  for (std::size_t i = 0; ok && i + 1 < blocks.size(); ++i)
    for (std::size_t j = i + 1; ok && j < blocks.size(); ++j)
      if (blocks[i] & blocks[j]) ok = false;
  for (SubsetMask x = 0; ok && x <= full; ++x) {
    int sum = 0;
    for (SubsetMask b : blocks) sum += p.rank[x & b];
    if (sum != p.rank[x]) ok = false;
  }
  if (!ok)
    throw std::logic_error(
        "components: direct-sum identity failed (input is not a polymatroid)");
  return blocks;
}

bool is_connected(const Polymatroid& p) { return components(p).size() <= 1; }

}  // namespace pmt
