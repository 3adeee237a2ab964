#pragma once

#include <iosfwd>
#include <string>

#include "pmt/polymatroid.hpp"

namespace pmt {

/// Text format ".pmt":
///   line 1: "pmt n"
///   optional: "k <int>"
///   then one line "mask rank" per subset, masks in increasing decimal
///   order; all 2^n masks must be present.
Polymatroid read_pmt(std::istream& in);
Polymatroid load_pmt(const std::string& path);
void write_pmt(std::ostream& out, const Polymatroid& p);
void save_pmt(const std::string& path, const Polymatroid& p);

/// DOT rendering of the incidence diagram: one node per element labelled
/// with its rank, an edge for every dependent pair.
std::string to_dot(const Polymatroid& p, const std::string& name = "pmt");

}  // namespace pmt
