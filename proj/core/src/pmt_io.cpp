#include "pmt/pmt_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmt {

Polymatroid read_pmt(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("pmt: empty input");
  std::istringstream head(line);
  std::string tag;
  int n = -1;
  if (!(head >> tag >> n) || tag != "pmt")
    throw std::runtime_error("pmt: expected header 'pmt n'");
  if (n < 0 || n > kMaxGround)
    throw std::runtime_error("pmt: ground-set size out of range [0,16]");

  std::optional<int> kbound;
  std::streampos after_header = in.tellg();
  if (std::getline(in, line)) {
    std::istringstream kl(line);
    std::string ktag;
    int k;
    if ((kl >> ktag >> k) && ktag == "k") {
      kbound = k;
    } else {
      in.clear();
      in.seekg(after_header);
    }
  }

  const std::size_t want = std::size_t{1} << n;
  std::vector<int> table(want, 0);
  for (std::size_t i = 0; i < want; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("pmt: missing mask " + std::to_string(i));
    std::istringstream row(line);
    unsigned long mask;
    int rank;
    if (!(row >> mask >> rank))
      throw std::runtime_error("pmt: bad row '" + line + "'");
    if (mask != i)
      throw std::runtime_error("pmt: expected mask " + std::to_string(i) +
                               ", got " + std::to_string(mask));
    table[i] = rank;
  }
  return Polymatroid(n, std::move(table), kbound);
}

Polymatroid load_pmt(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_pmt(in);
}

void write_pmt(std::ostream& out, const Polymatroid& p) {
  out << "pmt " << p.n << "\n";
  if (p.kbound) out << "k " << *p.kbound << "\n";
  for (SubsetMask x = 0; x < (SubsetMask{1} << p.n); ++x)
    out << x << " " << p.rank[x] << "\n";
}

void save_pmt(const std::string& path, const Polymatroid& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_pmt(out, p);
}

std::string to_dot(const Polymatroid& p, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int e = 0; e < p.n; ++e)
    out << "  e" << e << " [label=\"e" << e << " (r=" << p.singleton(e)
        << ")\"];\n";
  for (int e = 0; e < p.n; ++e)
    for (int f = e + 1; f < p.n; ++f) {
      int pair = p.rank[bit(e) | bit(f)];
      if (pair < p.singleton(e) + p.singleton(f))
        out << "  e" << e << " -- e" << f << " [label=\"" << pair << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace pmt
