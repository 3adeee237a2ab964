#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmt/polymatroid.hpp"

namespace pmt {

/// Named constructions.  Parameterized names: S(n) for n >= 2,
/// rhoA(mask) over the six elements of M(K_4), U(r,n).
struct CatalogName {
  enum class Tag { U24, L2, S, A3, B3, A4, B4, A5, A6, Z3, Z22, MK4, RhoA, U };
  Tag tag = Tag::U24;
  int n = 0;        // S(n), U(r,n)
  int r = 0;        // U(r,n)
  SubsetMask a = 0; // rhoA(a)
};

/// Accepts "U24", "L2", "A3".."A6", "B3", "B4", "Z3", "Z22", "MK4",
/// "S:n", "rhoA:mask" (mask decimal or 0b...), "U:r,n".
CatalogName parse_catalog_name(const std::string& name);
std::string to_string(const CatalogName& name);

Polymatroid build(const CatalogName& name);
Polymatroid build(const std::string& name);

/// S_n: n elements, rank |X|+1 on proper nonempty subsets, |X| on the
/// empty and full sets.  Self-2-dual; its natural matroid is the
/// tipless free n-spike for n > 2.
Polymatroid spike_like(int n);

/// rho_A over M(K_4): rank(X) = r_{M(K_4)}(X) + |X intersect A|.
Polymatroid rho_a(SubsetMask a);

/// One mask per isomorphism class of rho_A (11 classes), keyed by |A|
/// and, where it matters, whether A or its complement is a flat or a
/// circuit of M(K_4).
const std::vector<SubsetMask>& rho_a_representatives();

/// All fixed names, S(2..max_spike), and the 11 rho_A representatives.
std::vector<std::pair<std::string, Polymatroid>> catalog_all(int max_spike);

std::vector<std::string> catalog_list(int max_spike);

}  // namespace pmt
