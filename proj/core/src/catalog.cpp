#include "pmt/catalog.hpp"

#include <stdexcept>

#include "pmt/minors.hpp"
#include "pmt/ops.hpp"

namespace pmt {

namespace {

Polymatroid from_pairs(int n,
                       std::initializer_list<std::pair<SubsetMask, int>> vals,
                       int kbound) {
  std::vector<int> t(std::size_t{1} << n, -1);
  for (auto [mask, rank] : vals) t[mask] = rank;
  for (int v : t)
    if (v < 0) throw std::logic_error("catalog: incomplete table");
  return Polymatroid(n, std::move(t), kbound);
}

// L_2: line a with points b, c on it.
Polymatroid l2() {
  return from_pairs(3,
                    {{0b000, 0},
                     {0b001, 2},
                     {0b010, 1},
                     {0b011, 2},
                     {0b100, 1},
                     {0b101, 2},
                     {0b110, 2},
                     {0b111, 2}},
                    2);
}

// A_3: coplanar lines a, b with point c on b only.  Self-2-dual.
Polymatroid a3() {
  return from_pairs(3,
                    {{0b000, 0},
                     {0b001, 2},
                     {0b010, 2},
                     {0b011, 3},
                     {0b100, 1},
                     {0b101, 3},
                     {0b110, 2},
                     {0b111, 3}},
                    2);
}

// B_3: rank 3; line a and collinear points b, c, d, none on a.
Polymatroid b3() {
  std::vector<int> t(1u << 4, 0);
  for (SubsetMask x = 1; x < t.size(); ++x) {
    bool line = x & 1;
    int pts = popcount(x >> 1);
    if (!line)
      t[x] = pts >= 2 ? 2 : 1;
    else
      t[x] = pts >= 1 ? 3 : 2;
  }
  return Polymatroid(4, std::move(t), 2);
}

// B_4: skew lines a, b; points c, d; each line coplanar with {c,d} but
// spanning neither point.  Self-2-dual.
Polymatroid b4() {
  std::vector<int> t(1u << 4, 0);
  for (SubsetMask x = 1; x < t.size(); ++x) {
    int lines = popcount(x & 0b0011);
    int pts = popcount(x >> 2);
    if (lines == 2)
      t[x] = 4;
    else if (lines == 1)
      t[x] = pts == 0 ? 2 : 3;
    else
      t[x] = pts;
  }
  return Polymatroid(4, std::move(t), 2);
}

// A_5: point a; lines b, c, d pairwise skew, each pair spanning a,
// which lies on none of them.  Rank 5.
Polymatroid a5() {
  std::vector<int> t(1u << 4, 0);
  for (SubsetMask x = 1; x < t.size(); ++x) {
    bool pt = x & 1;
    int lines = popcount(x >> 1);
    int base = lines == 0 ? 0 : (lines == 1 ? 2 : (lines == 2 ? 4 : 5));
    t[x] = base + ((pt && lines <= 1) ? 1 : 0);
  }
  return Polymatroid(4, std::move(t), 2);
}

// Z_3: three pairwise coplanar lines in rank 4.
Polymatroid z3() {
  std::vector<int> t(1u << 3, 0);
  for (SubsetMask x = 1; x < t.size(); ++x) t[x] = popcount(x) + 1;
  return Polymatroid(3, std::move(t), 2);
}

// Z_{2,2}: freely place two points on a line of Z_3, then delete it.
Polymatroid z22() {
  Polymatroid p = z3();
  p = principal_extension_polymatroid(p, bit(1), 1);
  p = principal_extension_polymatroid(p, bit(1), 1);
  return deleted(p, bit(1));
}

}  // namespace

Polymatroid spike_like(int n) {
  if (n < 2) throw std::invalid_argument("S(n) requires n >= 2");
  if (n > kMaxGround) throw std::invalid_argument("S(n): n exceeds 16");
  std::vector<int> t(std::size_t{1} << n);
  for (SubsetMask x = 0; x < t.size(); ++x) {
    int c = popcount(x);
    t[x] = (0 < c && c < n) ? c + 1 : c;
  }
  return Polymatroid(n, std::move(t), 2);
}

Polymatroid rho_a(SubsetMask a) {
  if (!subset_of(a, full_mask(6)))
    throw std::invalid_argument("rhoA mask must be over six elements");
  Polymatroid base = mk4_matroid();
  std::vector<int> t(1u << 6);
  for (SubsetMask x = 0; x < t.size(); ++x)
    t[x] = base.rank[x] + popcount(x & a);
  return Polymatroid(6, std::move(t), 2);
}

const std::vector<SubsetMask>& rho_a_representatives() {
  // Element labels a..f = bits 0..5; 3-point lines {a,d,e}, {b,e,f},
  // {c,d,f}, {a,b,c}; 2-element flats are the opposite-edge pairs
  // {a,f}, {b,d}, {c,e}.
  static const std::vector<SubsetMask> reps = {
      0b000000,  // |A|=0
      0b000001,  // |A|=1
      0b100001,  // |A|=2, A a flat ({a,f})
      0b000011,  // |A|=2, not a flat
      0b011001,  // |A|=3, A a circuit ({a,d,e})
      0b100110,  // |A|=3, E-A a circuit (complement of {a,d,e})
      0b001011,  // |A|=3, neither (self-2-dual class)
      0b011110,  // |A|=4, E-A a flat (complement of {a,f})
      0b111100,  // |A|=4, E-A not a flat
      0b111110,  // |A|=5
      0b111111,  // |A|=6
  };
  return reps;
}

CatalogName parse_catalog_name(const std::string& name) {
  auto starts = [&](const char* prefix) {
    return name.rfind(prefix, 0) == 0;
  };
  CatalogName out;
  using Tag = CatalogName::Tag;
  if (name == "U24") { out.tag = Tag::U24; return out; }
  if (name == "L2") { out.tag = Tag::L2; return out; }
  if (name == "A3") { out.tag = Tag::A3; return out; }
  if (name == "B3") { out.tag = Tag::B3; return out; }
  if (name == "A4") { out.tag = Tag::A4; return out; }
  if (name == "B4") { out.tag = Tag::B4; return out; }
  if (name == "A5") { out.tag = Tag::A5; return out; }
  if (name == "A6") { out.tag = Tag::A6; return out; }
  if (name == "Z3") { out.tag = Tag::Z3; return out; }
  if (name == "Z22") { out.tag = Tag::Z22; return out; }
  if (name == "MK4") { out.tag = Tag::MK4; return out; }
  try {
    if (starts("S:") || starts("S")) {
      std::string arg = starts("S:") ? name.substr(2) : name.substr(1);
      if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
        out.tag = Tag::S;
        out.n = std::stoi(arg);
        return out;
      }
    }
    if (starts("rhoA:")) {
      std::string arg = name.substr(5);
      out.tag = Tag::RhoA;
      out.a = arg.rfind("0b", 0) == 0
                  ? (SubsetMask)std::stoul(arg.substr(2), nullptr, 2)
                  : (SubsetMask)std::stoul(arg, nullptr, 0);
      return out;
    }
    if (starts("U:")) {
      auto comma = name.find(',');
      if (comma != std::string::npos) {
        out.tag = Tag::U;
        out.r = std::stoi(name.substr(2, comma - 2));
        out.n = std::stoi(name.substr(comma + 1));
        return out;
      }
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::string to_string(const CatalogName& name) {
  using Tag = CatalogName::Tag;
  switch (name.tag) {
    case Tag::U24: return "U24";
    case Tag::L2: return "L2";
    case Tag::A3: return "A3";
    case Tag::B3: return "B3";
    case Tag::A4: return "A4";
    case Tag::B4: return "B4";
    case Tag::A5: return "A5";
    case Tag::A6: return "A6";
    case Tag::Z3: return "Z3";
    case Tag::Z22: return "Z22";
    case Tag::MK4: return "MK4";
    case Tag::S: return "S" + std::to_string(name.n);
    case Tag::U:
      return "U:" + std::to_string(name.r) + "," + std::to_string(name.n);
    case Tag::RhoA: {
      std::string bits;
      for (int i = 5; i >= 0; --i) bits += (name.a & bit(i)) ? '1' : '0';
      return "rhoA:0b" + bits;
    }
  }
  return "?";
}

Polymatroid build(const CatalogName& name) {
  using Tag = CatalogName::Tag;
  switch (name.tag) {
    case Tag::U24: return uniform(2, 4);
    case Tag::L2: return l2();
    case Tag::A3: return a3();
    case Tag::B3: return b3();
    case Tag::A4: return k_dual(l2(), 2);
    case Tag::B4: return b4();
    case Tag::A5: return a5();
    // A_6: four lines in rank 6 with rank |X|+2 on the middle layers;
    // realized as the 2-dual of U_{2,4}.
    case Tag::A6: return k_dual(uniform(2, 4), 2);
    case Tag::Z3: return z3();
    case Tag::Z22: return z22();
    case Tag::MK4: return mk4_matroid();
    case Tag::S: return spike_like(name.n);
    case Tag::RhoA: return rho_a(name.a);
    case Tag::U: return uniform(name.r, name.n);
  }
  throw std::invalid_argument("unknown catalog tag");
}

Polymatroid build(const std::string& name) {
  return build(parse_catalog_name(name));
}

std::vector<std::pair<std::string, Polymatroid>> catalog_all(int max_spike) {
  if (max_spike < 2) throw std::invalid_argument("catalog needs max_spike >= 2");
  std::vector<std::pair<std::string, Polymatroid>> out;
  for (const char* fixed :
       {"U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6", "Z3", "Z22", "MK4"})
    out.emplace_back(fixed, build(fixed));
  for (int n = 2; n <= max_spike; ++n)
    out.emplace_back("S" + std::to_string(n), spike_like(n));
  for (SubsetMask a : rho_a_representatives()) {
    CatalogName name{CatalogName::Tag::RhoA, 0, 0, a};
    out.emplace_back(to_string(name), rho_a(a));
  }
  return out;
}

std::vector<std::string> catalog_list(int max_spike) {
  std::vector<std::string> names;
  for (auto& [name, p] : catalog_all(max_spike)) names.push_back(name);
  return names;
}

}  // namespace pmt
