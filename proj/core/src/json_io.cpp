#include "pmt/json_io.hpp"

namespace pmt {

namespace {

std::vector<int> mask_to_list(SubsetMask m) {
  std::vector<int> out;
  for (SubsetMask s = m; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& cert, int host_n) {
  nlohmann::json j;
  j["contract"] = mask_to_list(cert.contract);
  j["delete"] = mask_to_list(cert.del);
  nlohmann::json map = nlohmann::json::object();
  int kept = 0;
  for (int e = 0; e < host_n; ++e) {
    if ((cert.contract | cert.del) & bit(e)) continue;
    map[std::to_string(e)] = cert.map[kept++];
  }
  j["map"] = map;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate cert;
  for (int e : j.at("contract")) cert.contract |= bit(e);
  for (int e : j.at("delete")) cert.del |= bit(e);
  std::vector<std::pair<int, int>> entries;
  for (auto& [key, value] : j.at("map").items())
    entries.emplace_back(std::stoi(key), value.get<int>());
  std::sort(entries.begin(), entries.end());
  for (auto& [host, pattern] : entries) cert.map.push_back(pattern);
  return cert;
}

nlohmann::json polymatroid_to_json(const Polymatroid& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["rank"] = p.rank;
  if (p.kbound) j["k"] = *p.kbound;
  return j;
}

nlohmann::json exclusion_report_to_json(const ExclusionReport& report) {
  nlohmann::json j;
  j["excluded"] = report.excluded;
  j["self_in_class"] = report.self_in_class;
  nlohmann::json minors = nlohmann::json::array();
  for (const MinorMembership& m : report.minors)
    minors.push_back({{"element", m.element},
                      {"deletion_in_class", m.deletion_in_class},
                      {"contraction_in_class", m.contraction_in_class}});
  j["minors"] = minors;
  return j;
}

}  // namespace pmt
