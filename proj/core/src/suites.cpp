#include "pmt/suites.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pmt/catalog.hpp"
#include "pmt/enumerate.hpp"
#include "pmt/json_io.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"

namespace pmt {

bool SuiteReport::passed() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

double SuiteReport::seconds() const {
  double s = 0;
  for (const CheckResult& c : checks) s += c.seconds;
  return s;
}

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> certificates;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "FAIL: " << what << "; ";
    }
  }
  void note(const std::string& s) { detail << s << "; "; }
};

std::string write_certificate(const SuiteOptions& opts,
                              const std::string& file,
                              const nlohmann::json& j) {
  if (opts.cert_dir.empty()) return {};
  std::filesystem::create_directories(opts.cert_dir);
  std::string path = opts.cert_dir + "/" + file;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  return path;
}

std::vector<std::pair<std::string, Polymatroid>> theorem6_members(
    int spike_max) {
  std::vector<std::pair<std::string, Polymatroid>> out;
  for (const char* name : {"U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6"})
    out.emplace_back(name, build(name));
  for (int n = 2; n <= spike_max; ++n)
    out.emplace_back("S" + std::to_string(n), spike_like(n));
  return out;
}

std::vector<std::pair<std::string, Polymatroid>> rho_a_members() {
  std::vector<std::pair<std::string, Polymatroid>> out;
  for (SubsetMask a : rho_a_representatives()) {
    CatalogName name{CatalogName::Tag::RhoA, 0, 0, a};
    out.emplace_back(to_string(name), rho_a(a));
  }
  return out;
}

// ---- criterion 1: axioms over the catalog plus rejected perturbations

void criterion_axioms(const SuiteOptions& opts, MembershipCache*, Checker& c) {
  auto members = catalog_all(opts.spike_max);
  for (auto& [name, p] : members)
    c.require(validate(p, ValidateMode::reference).pass,
              "reference validation of " + name);

  // Single-entry perturbations that provably break monotonicity:
  // lowering rank(X) when some X-i has equal rank, or raising rank(X)
  // when some X+j has equal rank.
  int rejected = 0, wanted = 100;
  for (auto& [name, p] : members) {
    if (rejected >= wanted) break;
    for (SubsetMask x = 1; x <= p.ground() && rejected < wanted; ++x) {
      bool lower = false, raise = false;
      for (int i = 0; i < p.n; ++i) {
        if ((x & bit(i)) && p.rank[x ^ bit(i)] == p.rank[x]) lower = true;
        if (!(x & bit(i)) && p.rank[x | bit(i)] == p.rank[x] &&
            x != p.ground())
          raise = true;
      }
      if (lower) {
        Polymatroid q = p;
        q.rank[x] -= 1;
        c.require(!validate(q, ValidateMode::reference).pass,
                  name + ": lowered entry accepted");
        ++rejected;
      }
      if (raise && rejected < wanted) {
        Polymatroid q = p;
        q.rank[x] += 1;
        c.require(!validate(q, ValidateMode::reference).pass,
                  name + ": raised entry accepted");
        ++rejected;
      }
    }
  }
  c.require(rejected == wanted, "expected 100 perturbations, found " +
                                    std::to_string(rejected));
  c.note("validated " + std::to_string(members.size()) + " members, rejected " +
         std::to_string(rejected) + " perturbations");
}

// ---- criterion 2: the two rank-4 polymatroids sharing a natural matroid

void criterion_shared_natural(const SuiteOptions&, MembershipCache*,
                              Checker& c) {
  LabeledMatroid a = natural_matroid(build("Z3"));
  LabeledMatroid b = natural_matroid(build("Z22"));
  c.require(are_isomorphic(a.m, b.m),
            "natural matroids of Z3 and Z22 not isomorphic");
  c.note("Z3 and Z22 share their natural matroid (6 elements, rank 4)");
}

// ---- criterion 3: all polymatroids with natural matroid U_{2,4}

void criterion_u24_preimages(const SuiteOptions&, MembershipCache*,
                             Checker& c) {
  // Sum of singleton ranks is 4; loopless profiles only (a loop could
  // be appended to any solution without changing the natural matroid).
  const std::vector<std::vector<int>> profiles = {
      {1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 3}, {4}};
  const Polymatroid u24 = uniform(2, 4);
  std::set<std::vector<std::uint8_t>> classes;
  for (const auto& profile : profiles) {
    GenConfig cfg;
    cfg.n = (int)profile.size();
    cfg.kmax = 4;
    cfg.singleton_ranks = profile;
    for (const Polymatroid& p : enumerate_polymatroids(cfg).classes)
      if (are_isomorphic(natural_matroid(p).m, u24))
        classes.insert(canonical_form(p).bytes);
  }
  c.require(classes.size() == 3, "expected 3 classes, found " +
                                     std::to_string(classes.size()));
  for (const char* name : {"U24", "L2", "S2"})
    c.require(classes.count(canonical_form(build(name)).bytes) == 1,
              std::string(name) + " missing from the search result");
  c.note("exhaustive over loopless singleton profiles summing to 4");
}

// ---- criterion 4: duality suite

void criterion_duality(const SuiteOptions& opts, MembershipCache*,
                       Checker& c) {
  auto members = catalog_all(opts.spike_max);
  for (auto& [name, p] : members) {
    c.require(k_dual(k_dual(p, 2), 2) == p, name + ": 2-dual not involutory");

    LabeledMatroid kn = k_natural_matroid(p, 2);
    LabeledMatroid kn_dual = k_natural_matroid(k_dual(p, 2), 2);
    c.require(labeled_equal(labeled_dual(kn), kn_dual),
              name + ": dual of 2-natural is not 2-natural of dual");

    auto nat_types = basis_types(natural_matroid(p));
    auto knat_types = basis_types(kn);
    c.require(nat_types == knat_types,
              name + ": basis types differ between natural and 2-natural");
    c.require(basis_types(natural_matroid(k_dual(p, 2))) ==
                  k_complements(nat_types, 2),
              name + ": basis types of the dual are not the 2-complements");
    c.require(basis_types(kn_dual) == k_complements(knat_types, 2),
              name + ": 2-natural basis types of the dual are not the "
                     "2-complements");
  }

  c.require(are_isomorphic(build("A4"), k_dual(build("L2"), 2)),
            "A4 is not the 2-dual of L2");
  c.require(are_isomorphic(build("A5"), k_dual(build("B3"), 2)),
            "A5 is not the 2-dual of B3");
  c.require(are_isomorphic(build("A6"), k_dual(uniform(2, 4), 2)),
            "A6 is not the 2-dual of U24");
  for (int n = 2; n <= opts.spike_max; ++n)
    c.require(k_dual(spike_like(n), 2) == spike_like(n),
              "S" + std::to_string(n) + " not self-2-dual");
  for (const char* name : {"A3", "B4"})
    c.require(are_isomorphic(build(name), k_dual(build(name), 2)),
              std::string(name) + " not self-2-dual");

  const std::set<TypeVector> l2_types = {
      {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const std::set<TypeVector> a4_types = {
      {0, 2, 2}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  c.require(basis_types(natural_matroid(build("L2"))) == l2_types,
            "L2 basis types do not match the expected list");
  c.require(basis_types(natural_matroid(build("A4"))) == a4_types,
            "A4 basis types do not match the expected list");
  c.note("involution, dual 2-natural identity and type complementation on " +
         std::to_string(members.size()) + " members");
}

// ---- criterion 5: compression suite

void criterion_compression(const SuiteOptions& opts, MembershipCache*,
                           Checker& c) {
  for (int n = 2; n + 1 <= opts.spike_max; ++n)
    c.require(are_isomorphic(compress(spike_like(n + 1), 0), spike_like(n)),
              "compressing S" + std::to_string(n + 1) + " is not S" +
                  std::to_string(n));

  auto members = catalog_all(opts.spike_max);
  for (auto& [name, p] : members) {
    for (int e = 0; e < p.n; ++e) {
      if (p.singleton(e) == 2 && 2 * p.n <= kMaxGround)
        c.require(compress_matches_knatural_minor(p, e),
                  name + ": 2-natural compression identity at " +
                      std::to_string(e));
      // Commutation with the 2-dual when e is a line on both sides.
      Polymatroid dual = k_dual(p, 2);
      if (p.singleton(e) == 2 && dual.singleton(e) == 2)
        c.require(k_dual(compress(p, e), 2) == compress(dual, e),
                  name + ": compression does not commute with the 2-dual at " +
                      std::to_string(e));
    }
  }

  for (const char* name : {"A3", "B3", "rhoA:0b001011"}) {
    Polymatroid p = build(name);
    for (int e = 0; e < p.n; ++e)
      if (p.singleton(e) > 0)
        c.require(compress_matches_natural_minor(p, e),
                  std::string(name) + ": natural compression identity at " +
                      std::to_string(e));
  }
  c.note("chain S" + std::to_string(opts.spike_max) + "->S2; line identity on "
         "every line of every member");
}

// ---- criterion 6: the binary-natural excluded minors

void criterion_theorem6(const SuiteOptions& opts, MembershipCache* cache,
                        Checker& c) {
  for (auto& [name, p] : theorem6_members(opts.spike_max)) {
    ExclusionReport report =
        excluded_minor_report(p, ClassId::binary_natural, cache);
    c.require(report.excluded,
              name + " is not an excluded minor for binary-natural");
    auto cert = find_u24_minor(natural_matroid(p).m);
    c.require(cert.has_value(), name + ": no U_{2,4} witness found");
    if (cert) {
      std::string path = write_certificate(
          opts, "theorem6_" + name + "_u24.json",
          certificate_to_json(*cert, natural_matroid(p).m.n));
      if (!path.empty()) c.certificates.push_back(path);
    }
    bool expect_r = !(name[0] == 'S' && name != "S2");
    c.require(in_r_set(p, ClassId::binary_natural, cache) == expect_r,
              name + ": compression-closure status unexpected");
  }
  c.note("excluded-minor status, witnesses and compression closure checked");
}

// ---- criterion 7: completeness at small ground sets

void criterion_enumeration(const SuiteOptions& opts, MembershipCache* cache,
                           Checker& c) {
  auto forms_of = [](const std::vector<const char*>& names) {
    std::set<std::vector<std::uint8_t>> forms;
    for (const char* n : names) forms.insert(canonical_form(build(n)).bytes);
    return forms;
  };

  FindResult small = find_excluded_minors(ClassId::binary_natural, 3, false,
                                          cache, opts.enum_budget);
  c.require(small.complete, "n<=3 enumeration incomplete (budget)");
  std::set<std::vector<std::uint8_t>> got;
  for (auto& f : small.found) got.insert(canonical_form(f.p).bytes);
  c.require(got == forms_of({"S2", "L2", "S3", "A3", "A4"}),
            "n<=3 excluded minors differ from {S2,L2,S3,A3,A4}");
  c.note("n<=3 (no filters): " + std::to_string(small.found.size()) +
         " classes");

  for (auto& f : small.found) {
    int singles = f.p.singleton_sum();
    c.require(singles >= f.p.full_rank() + 2,
              "nullity inequality fails on a found excluded minor");
    c.require(got.count(canonical_form(k_dual(f.p, 2)).bytes) == 1,
              "found set not closed under the 2-dual");
  }

  FindResult big = find_excluded_minors(ClassId::binary_natural, 4, true,
                                        cache, opts.enum_budget);
  c.require(big.complete, "n=4 enumeration incomplete (budget)");
  std::set<std::vector<std::uint8_t>> got4;
  for (auto& f : big.found)
    if (f.p.n == 4) got4.insert(canonical_form(f.p).bytes);
  c.require(got4 == forms_of({"U24", "B3", "S4", "B4", "A5", "A6"}),
            "n=4 excluded minors differ from {U24,B3,S4,B4,A5,A6}");
  c.note("n=4 adds " + std::to_string(got4.size()) +
         " classes, conditional on the structural filters "
         "(connected, loopless, no parallel points)");
}

// ---- criterion 8: the eleven rho_A excluded minors

void criterion_theorem7(const SuiteOptions& opts, MembershipCache* cache,
                        Checker& c) {
  std::map<int, std::set<std::vector<std::uint8_t>>> by_size;
  for (SubsetMask a = 0; a < 64; ++a)
    by_size[popcount(a)].insert(canonical_form(rho_a(a)).bytes);
  const std::vector<int> expected = {1, 1, 2, 3, 2, 1, 1};
  int total = 0;
  for (int s = 0; s <= 6; ++s) {
    c.require((int)by_size[s].size() == expected[s],
              "|A|=" + std::to_string(s) + ": expected " +
                  std::to_string(expected[s]) + " classes, found " +
                  std::to_string(by_size[s].size()));
    total += (int)by_size[s].size();
  }
  c.require(total == 11, "rho_A classes total " + std::to_string(total));

  for (SubsetMask a = 0; a < 64; ++a)
    c.require(are_isomorphic(k_dual(rho_a(a), 2), rho_a(a ^ full_mask(6))),
              "2-dual of rho_A is not rho_{E-A} at mask " + std::to_string(a));

  for (auto& [name, p] : rho_a_members()) {
    c.require(is_excluded_minor(p, ClassId::no_mk4_natural, cache),
              name + " is not an excluded minor for no-mk4");
    LabeledMatroid lm = natural_matroid(p);
    auto cert = find_mk4_minor(lm.m);
    c.require(cert.has_value(), name + ": no M(K_4) witness found");
    if (cert) {
      std::string path =
          write_certificate(opts, "theorem7_" + name + "_mk4.json",
                            certificate_to_json(*cert, lm.m.n));
      if (!path.empty()) c.certificates.push_back(path);
    }

    // Contracting one copy from each doubled group recovers M(K_4).
    SubsetMask a1 = 0;
    for (int e = 0; e < p.n; ++e)
      if (p.singleton(e) == 2) a1 |= lm.groups[e] & -(lm.groups[e]);
    c.require(are_isomorphic(contracted(lm.m, a1), mk4_matroid()),
              name + ": contracting one copy per line is not M(K_4)");

    auto decomp = decompressions(p, ClassId::no_mk4_natural, cache);
    c.require(decomp.empty(),
              name + ": unexpected decompression excluded minors (" +
                  std::to_string(decomp.size()) + ")");
  }
  c.note("64 masks collapse to 11 classes (1/1/2/3/2/1/1); all verified");
}

// ---- criterion 9: the projected independence criterion

void criterion_independence(const SuiteOptions&, MembershipCache*,
                            Checker& c) {
  c.require(rho_a_independence_criterion(0),
            "independence criterion fails for A = empty");
  c.require(rho_a_independence_criterion(0b001011),
            "independence criterion fails for a 3-element A");
  c.note("exhaustive over all subsets of both natural matroids");
}

// ---- criterion 10: series-parallel excluded minors

void criterion_sp(const SuiteOptions& opts, MembershipCache* cache,
                  Checker& c) {
  auto members = theorem6_members(opts.spike_max);
  for (auto& m : rho_a_members()) members.push_back(m);
  for (auto& [name, p] : members)
    c.require(is_excluded_minor(p, ClassId::sp_natural, cache),
              name + " is not an excluded minor for sp-natural");

  for (int n = 2; n <= opts.spike_max; ++n) {
    Polymatroid s = spike_like(n);
    for (int e = 0; e < n; ++e)
      c.require(are_isomorphic(contracted(s, bit(e)), uniform(n - 2, n - 1)),
                "S" + std::to_string(n) + "/e is not U_{n-2,n-1}");
  }
  for (auto& [name, p] : rho_a_members())
    c.require(in_class(p, ClassId::binary_natural, cache),
              name + " is not binary-natural");
  c.note(std::to_string(members.size()) +
         " members are sp-natural excluded minors; spike contractions and "
         "rho_A binaryness confirmed");
}

// ---- criterion 11: dual-route agreement

void criterion_cross_checks(const SuiteOptions& opts, MembershipCache*,
                            Checker& c) {
  std::vector<Polymatroid> matroids;
  auto members = theorem6_members(opts.spike_max);
  for (auto& m : rho_a_members()) members.push_back(m);
  for (auto& [name, p] : members) {
    matroids.push_back(natural_matroid(p).m);
    for (int e = 0; e < p.n; ++e) {
      matroids.push_back(natural_matroid(deleted(p, bit(e))).m);
      matroids.push_back(natural_matroid(contracted(p, bit(e))).m);
    }
  }
  GenConfig cfg;
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    cfg.n = n;
    for (const Polymatroid& p : enumerate_polymatroids(cfg).classes)
      matroids.push_back(natural_matroid(p).m);
  }
  for (const Polymatroid& m : matroids) {
    bool b1 = is_binary(m);
    bool b2 = is_binary_via_minor(m);
    c.require(b1 == b2, "binary routes disagree on a matroid with " +
                            std::to_string(m.n) + " elements");
    bool s1 = is_series_parallel(m);
    bool s2 = is_series_parallel_via_exclusion(m);
    c.require(s1 == s2, "series-parallel routes disagree on a matroid with " +
                            std::to_string(m.n) + " elements");
    ++checked;
  }
  c.note("both algorithm pairs agree on " + std::to_string(checked) +
         " matroids");
}

// ---- criterion 12: excluded minors of the order with compressions

void criterion_c_minors(const SuiteOptions& opts, MembershipCache* cache,
                        Checker& c) {
  std::set<std::vector<std::uint8_t>> expected;
  for (const char* name : {"U24", "L2", "S2", "A3", "B3", "A4", "B4", "A5",
                           "A6"})
    expected.insert(canonical_form(build(name)).bytes);
  for (auto& [name, p] : catalog_all(opts.spike_max)) {
    bool want = expected.count(canonical_form(p).bytes) == 1;
    c.require(is_excluded_c_minor(p, ClassId::binary_natural, cache) == want,
              name + ": c-minor exclusion status unexpected");
  }
  c.note("exactly the non-spike excluded minors plus S2 remain excluded "
         "under compression moves");
}

struct CriterionSpec {
  int number;
  const char* title;
  double budget_seconds;
  void (*fn)(const SuiteOptions&, MembershipCache*, Checker&);
};

const CriterionSpec kCriteria[] = {
    {1, "axioms", 5, criterion_axioms},
    {2, "shared natural matroid", 1, criterion_shared_natural},
    {3, "natural-matroid preimages of U24", 10, criterion_u24_preimages},
    {4, "duality", 30, criterion_duality},
    {5, "compression", 60, criterion_compression},
    {6, "binary-natural excluded minors", 600, criterion_theorem6},
    {7, "excluded-minor completeness", 3900, criterion_enumeration},
    {8, "rho_A excluded minors", 900, criterion_theorem7},
    {9, "independence criterion", 60, criterion_independence},
    {10, "series-parallel excluded minors", 600, criterion_sp},
    {11, "algorithm cross-checks", 600, criterion_cross_checks},
    {12, "excluded c-minors", 300, criterion_c_minors},
};

const std::map<std::string, std::vector<int>>& suite_criteria() {
  static const std::map<std::string, std::vector<int>> m = {
      {"natural", {1, 2, 3}},     {"duality", {4}},
      {"compression", {5}},       {"theorem6", {6, 12}},
      {"theorem7", {8, 9}},       {"sp", {10}},
      {"enumeration", {7, 11}},
  };
  return m;
}

CheckResult run_criterion_impl(int number, const SuiteOptions& opts,
                               MembershipCache* cache) {
  const CriterionSpec& spec = kCriteria[number - 1];
  CheckResult result;
  {
    std::ostringstream name;
    name << "criterion " << (number < 10 ? "0" : "") << number << ": "
         << spec.title;
    result.name = name.str();
  }
  result.budget_seconds = spec.budget_seconds;
  Checker checker;
  auto start = std::chrono::steady_clock::now();
  try {
    spec.fn(opts, cache, checker);
  } catch (const std::exception& e) {
    checker.ok = false;
    checker.detail << "EXCEPTION: " << e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (result.seconds > spec.budget_seconds) {
    checker.ok = false;
    checker.detail << "FAIL: exceeded time budget of "
                   << spec.budget_seconds << "s; ";
  }
  result.pass = checker.ok;
  result.detail = checker.detail.str();
  result.certificates = checker.certificates;
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "duality", "compression", "natural", "theorem6",
      "theorem7", "sp",          "enumeration"};
  return names;
}

int criterion_count() { return (int)std::size(kCriteria); }

CheckResult run_criterion(int number, const SuiteOptions& opts) {
  if (number < 1 || number > criterion_count())
    throw std::invalid_argument("criterion number out of range");
  MembershipCache cache;
  return run_criterion_impl(number, opts, &cache);
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto it = suite_criteria().find(name);
  if (it == suite_criteria().end())
    throw std::invalid_argument("unknown suite: " + name);
  SuiteReport report;
  report.suite = name;
  MembershipCache cache;
  const std::vector<int>& numbers = it->second;

  int jobs = opts.jobs == 0
                 ? (int)std::max(1u, std::thread::hardware_concurrency())
                 : opts.jobs;
  if (jobs > 1 && numbers.size() > 1) {
    std::vector<std::future<CheckResult>> futures;
    for (int number : numbers)
      futures.push_back(std::async(std::launch::async, [&, number] {
        return run_criterion_impl(number, opts, &cache);
      }));
    for (auto& f : futures) report.checks.push_back(f.get());
  } else {
    for (int number : numbers)
      report.checks.push_back(run_criterion_impl(number, opts, &cache));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  return report;
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts) {
  std::vector<SuiteReport> out;
  for (const std::string& name : suite_names())
    out.push_back(run_suite(name, opts));
  return out;
}

nlohmann::json reports_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json j;
  j["schema_version"] = 1;
  bool all = true;
  nlohmann::json suites = nlohmann::json::array();
  nlohmann::json timings = nlohmann::json::object();
  for (const SuiteReport& r : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"detail", c.detail},
                        {"certificates", c.certificates}});
      timings[c.name] = c.seconds;
    }
    suites.push_back(
        {{"name", r.suite}, {"pass", r.passed()}, {"checks", checks}});
    all = all && r.passed();
  }
  j["suites"] = suites;
  j["pass"] = all;
  // All run-to-run variability lives in this one field.
  auto now = std::chrono::system_clock::now().time_since_epoch();
  j["meta"] = {
      {"generated_at_unix_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(now).count()},
      {"seconds", timings}};
  return j;
}

}  // namespace pmt
