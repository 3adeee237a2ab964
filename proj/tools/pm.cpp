// pm: command-line front end for the polymatroid toolkit.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pmt/catalog.hpp"
#include "pmt/classes.hpp"
#include "pmt/enumerate.hpp"
#include "pmt/json_io.hpp"
#include "pmt/natural.hpp"
#include "pmt/ops.hpp"
#include "pmt/pmt_io.hpp"
#include "pmt/suites.hpp"

namespace {

using namespace pmt;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

SubsetMask parse_elements(const std::string& arg) {
  SubsetMask mask = 0;
  std::size_t pos = 0;
  while (pos < arg.size()) {
    std::size_t next = arg.find(',', pos);
    if (next == std::string::npos) next = arg.size();
    mask |= bit(std::stoi(arg.substr(pos, next - pos)));
    pos = next + 1;
  }
  return mask;
}

void emit(const Polymatroid& p, const std::string& out) {
  if (out.empty())
    write_pmt(std::cout, p);
  else
    save_pmt(out, p);
}

void emit_labeled(const LabeledMatroid& lm, const std::string& out) {
  emit(lm.m, out);
  std::ostringstream groups;
  groups << "groups:";
  for (std::size_t e = 0; e < lm.groups.size(); ++e) {
    groups << " e" << e << "=[";
    bool first = true;
    for (SubsetMask s = lm.groups[e]; s; s &= s - 1) {
      if (!first) groups << ",";
      groups << std::countr_zero(s);
      first = false;
    }
    groups << "]";
  }
  if (out.empty()) {
    std::cout << groups.str() << "\n";
  } else {
    std::ofstream side(out + ".groups");
    side << groups.str() << "\n";
  }
}

int cmd_validate(const std::string& file, bool fast) {
  Polymatroid p = load_pmt(file);
  AxiomReport report =
      validate(p, fast ? ValidateMode::fast : ValidateMode::reference);
  std::cout << report.message() << "\n";
  return report.pass ? kExitPass : kExitFail;
}

int cmd_show(const std::string& file, bool dot) {
  Polymatroid p = load_pmt(file);
  if (dot) {
    std::cout << to_dot(p);
    return kExitPass;
  }
  std::cout << "elements: " << p.n << "\n";
  std::cout << "rank: " << p.full_rank() << "\n";
  if (p.kbound) std::cout << "k: " << *p.kbound << "\n";
  std::cout << "singletons:";
  for (int e = 0; e < p.n; ++e) std::cout << " " << p.singleton(e);
  std::cout << "\n";
  auto blocks = components(p);
  std::cout << "components: " << blocks.size() << "\n";
  AxiomReport report = validate(p, ValidateMode::reference);
  std::cout << "axioms: " << report.message() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with integer polymatroids"};
  app.require_subcommand(1);

  std::string in_file, out_file, host_file, pattern_file, cert_file;
  std::string name, class_id, suite, filters = "none", out_dir;
  std::string elements_arg, set_arg;
  bool fast = false, dot = false, list = false;
  int k = 2, rank_arg = 1, count = 1, nval = 3, spike_max = 7, jobs = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms");
  validate_cmd->add_option("file", in_file)->required();
  validate_cmd->add_flag("--fast", fast, "covering pairs only");

  auto* show_cmd = app.add_subcommand("show", "summarize a polymatroid");
  show_cmd->add_option("file", in_file)->required();
  show_cmd->add_flag("--dot", dot, "emit the incidence diagram as DOT");

  auto* catalog_cmd = app.add_subcommand("catalog", "build a named polymatroid");
  catalog_cmd->add_option("--name", name, "e.g. S:5, rhoA:0b101100, A4");
  catalog_cmd->add_flag("--list", list, "print all names");
  catalog_cmd->add_option("--out", out_file);
  catalog_cmd->add_option("--spike-max", spike_max, "largest S_n in --list");

  auto* delete_cmd = app.add_subcommand("delete", "delete elements");
  delete_cmd->add_option("file", in_file)->required();
  delete_cmd->add_option("--elements", elements_arg)->required();
  delete_cmd->add_option("--out", out_file);

  auto* contract_cmd = app.add_subcommand("contract", "contract elements");
  contract_cmd->add_option("file", in_file)->required();
  contract_cmd->add_option("--elements", elements_arg)->required();
  contract_cmd->add_option("--out", out_file);

  auto* dual_cmd = app.add_subcommand("dual", "k-dual");
  dual_cmd->add_option("file", in_file)->required();
  dual_cmd->add_option("--k", k);
  dual_cmd->add_option("--out", out_file);

  auto* compress_cmd = app.add_subcommand("compress", "compress one element");
  compress_cmd->add_option("file", in_file)->required();
  compress_cmd->add_option("--elements", elements_arg)->required();
  compress_cmd->add_option("--out", out_file);

  auto* extend_cmd =
      app.add_subcommand("extend", "principal extension by a new element");
  extend_cmd->add_option("file", in_file)->required();
  extend_cmd->add_option("--set", set_arg, "flat generators")->required();
  extend_cmd->add_option("--rank", rank_arg, "rank of the new element");
  extend_cmd->add_option("--count", count, "repeat the extension");
  extend_cmd->add_option("--out", out_file);

  auto* natural_cmd = app.add_subcommand("natural", "natural matroid");
  natural_cmd->add_option("file", in_file)->required();
  natural_cmd->add_option("--out", out_file);

  auto* knatural_cmd = app.add_subcommand("knatural", "k-natural matroid");
  knatural_cmd->add_option("file", in_file)->required();
  knatural_cmd->add_option("--k", k);
  knatural_cmd->add_option("--out", out_file);

  auto* minor_cmd = app.add_subcommand("minor", "search for a minor");
  minor_cmd->add_option("--host", host_file)->required();
  minor_cmd->add_option("--pattern", pattern_file)->required();
  minor_cmd->add_option("--certificate", cert_file, "write the witness JSON");

  auto* test_cmd =
      app.add_subcommand("test", "structural tests on a matroid");
  test_cmd->add_option("file", in_file)->required();
  bool test_binary = false, test_mk4 = false, test_sp = false;
  test_cmd->add_flag("--binary", test_binary, "GF(2) representability");
  test_cmd->add_flag("--mk4", test_mk4, "freeness from M(K_4) minors");
  test_cmd->add_flag("--sp", test_sp, "series-parallel");

  auto* class_cmd = app.add_subcommand("class", "class membership");
  class_cmd->add_option("--id", class_id, "binary-natural|no-mk4|sp")
      ->required();
  class_cmd->add_option("file", in_file)->required();

  auto* exmin_cmd = app.add_subcommand("exmin", "excluded-minor test");
  exmin_cmd->add_option("--class", class_id)->required();
  exmin_cmd->add_option("file", in_file)->required();

  auto* decompress_cmd =
      app.add_subcommand("decompress", "excluded-minor decompressions");
  decompress_cmd->add_option("--class", class_id)->required();
  decompress_cmd->add_option("file", in_file)->required();
  decompress_cmd->add_option("--out", out_dir, "directory for results");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "isomorph-free generation");
  enumerate_cmd->add_option("--n", nval)->required();
  enumerate_cmd->add_option("--filters", filters, "none|structural");
  enumerate_cmd->add_option("--out", out_dir, "directory for results");

  auto* certify_cmd =
      app.add_subcommand("certify", "re-derive excluded minors at small n");
  certify_cmd->add_option("--class", class_id)->required();
  certify_cmd->add_option("--n", nval);
  certify_cmd->add_option("--filters", filters, "none|structural");
  certify_cmd->add_option("--out", out_file, "report JSON path");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  bool verify_all = false;
  verify_cmd->add_flag("--all", verify_all);
  verify_cmd->add_option("--suite", suite,
                         "duality|compression|natural|theorem6|theorem7|sp|"
                         "enumeration");
  verify_cmd->add_option("--out", out_file, "machine report JSON path");
  verify_cmd->add_option("--cert-dir", out_dir, "certificate directory");
  verify_cmd->add_option("--spike-max", spike_max);
  verify_cmd->add_option("--jobs", jobs, "concurrent checks per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(in_file, fast);
    if (*show_cmd) return cmd_show(in_file, dot);

    if (*catalog_cmd) {
      if (list) {
        for (const std::string& entry : catalog_list(spike_max))
          std::cout << entry << "\n";
        return kExitPass;
      }
      if (name.empty()) throw CLI::ValidationError("catalog", "--name or --list");
      emit(build(name), out_file);
      return kExitPass;
    }

    if (*delete_cmd) {
      emit(deleted(load_pmt(in_file), parse_elements(elements_arg)), out_file);
      return kExitPass;
    }
    if (*contract_cmd) {
      emit(contracted(load_pmt(in_file), parse_elements(elements_arg)),
           out_file);
      return kExitPass;
    }
    if (*dual_cmd) {
      emit(k_dual(load_pmt(in_file), k), out_file);
      return kExitPass;
    }
    if (*compress_cmd) {
      SubsetMask mask = parse_elements(elements_arg);
      if (popcount(mask) != 1)
        throw CLI::ValidationError("compress", "exactly one element");
      emit(compress(load_pmt(in_file), std::countr_zero(mask)), out_file);
      return kExitPass;
    }
    if (*extend_cmd) {
      Polymatroid p = load_pmt(in_file);
      for (int i = 0; i < count; ++i)
        p = principal_extension_polymatroid(p, parse_elements(set_arg),
                                            rank_arg);
      emit(p, out_file);
      return kExitPass;
    }
    if (*natural_cmd) {
      emit_labeled(natural_matroid(load_pmt(in_file)), out_file);
      return kExitPass;
    }
    if (*knatural_cmd) {
      emit_labeled(k_natural_matroid(load_pmt(in_file), k), out_file);
      return kExitPass;
    }

    if (*minor_cmd) {
      Polymatroid host = load_pmt(host_file);
      Polymatroid pattern = load_pmt(pattern_file);
      auto cert = find_minor(host, pattern);
      if (!cert) {
        std::cout << "no minor\n";
        return kExitFail;
      }
      nlohmann::json j = certificate_to_json(*cert, host.n);
      if (!cert_file.empty()) {
        std::ofstream out(cert_file);
        out << j.dump(2) << "\n";
      }
      std::cout << "minor found: " << j.dump() << "\n";
      return kExitPass;
    }

    if (*test_cmd) {
      Polymatroid m = load_pmt(in_file);
      if (!(test_binary || test_mk4 || test_sp))
        throw CLI::ValidationError("test", "--binary, --mk4 or --sp");
      bool pass = true;
      if (test_binary) {
        bool b = is_binary(m);
        std::cout << "binary: " << (b ? "true" : "false") << "\n";
        pass = pass && b;
      }
      if (test_mk4) {
        auto cert = find_mk4_minor(m);
        std::cout << "mk4-free: " << (cert ? "false" : "true");
        if (cert)
          std::cout << " (witness " << certificate_to_json(*cert, m.n).dump()
                    << ")";
        std::cout << "\n";
        pass = pass && !cert;
      }
      if (test_sp) {
        bool sp = is_series_parallel(m);
        std::cout << "series-parallel: " << (sp ? "true" : "false") << "\n";
        pass = pass && sp;
      }
      return pass ? kExitPass : kExitFail;
    }

    if (*class_cmd) {
      bool in = in_class(load_pmt(in_file), parse_class_id(class_id));
      std::cout << (in ? "in class" : "not in class") << "\n";
      return in ? kExitPass : kExitFail;
    }

    if (*exmin_cmd) {
      ExclusionReport report =
          excluded_minor_report(load_pmt(in_file), parse_class_id(class_id));
      std::cout << exclusion_report_to_json(report).dump(2) << "\n";
      return report.excluded ? kExitPass : kExitFail;
    }

    if (*decompress_cmd) {
      auto found =
          decompressions(load_pmt(in_file), parse_class_id(class_id));
      std::cout << "decompressions: " << found.size() << "\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < found.size(); ++i)
          save_pmt(out_dir + "/decompression_" + std::to_string(i) + ".pmt",
                   found[i]);
      }
      return kExitPass;
    }

    if (*enumerate_cmd) {
      GenConfig cfg;
      cfg.n = nval;
      if (filters == "structural") {
        cfg.loopless = cfg.no_parallel_points = cfg.connected = true;
      } else if (filters != "none") {
        throw CLI::ValidationError("enumerate", "--filters none|structural");
      }
      EnumResult result = enumerate_polymatroids(cfg);
      std::cout << "classes: " << result.classes.size()
                << (result.complete ? "" : " (INCOMPLETE: budget exhausted)")
                << "\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < result.classes.size(); ++i)
          save_pmt(out_dir + "/class_" + std::to_string(i) + ".pmt",
                   result.classes[i]);
        nlohmann::json manifest = {{"n", cfg.n},
                                   {"filters", filters},
                                   {"complete", result.complete},
                                   {"classes", result.classes.size()},
                                   {"nodes", result.nodes}};
        std::ofstream out(out_dir + "/manifest.json");
        out << manifest.dump(2) << "\n";
      }
      return result.complete ? kExitPass : kExitFail;
    }

    if (*certify_cmd) {
      ClassId c = parse_class_id(class_id);
      bool structural = filters == "structural";
      FindResult result = find_excluded_minors(c, nval, structural);
      nlohmann::json items = nlohmann::json::array();
      for (const ExcludedMinorFind& f : result.found) {
        nlohmann::json item;
        item["polymatroid"] = polymatroid_to_json(f.p);
        item["report"] = exclusion_report_to_json(f.report);
        LabeledMatroid lm = natural_matroid(f.p);
        std::optional<Certificate> witness;
        if (c == ClassId::binary_natural)
          witness = find_u24_minor(lm.m);
        else if (c == ClassId::no_mk4_natural)
          witness = find_mk4_minor(lm.m);
        else if (auto u = find_u24_minor(lm.m))
          witness = u;
        else
          witness = find_mk4_minor(lm.m);
        if (witness)
          item["natural_matroid_witness"] =
              certificate_to_json(*witness, lm.m.n);
        items.push_back(item);
      }
      nlohmann::json report = {{"class", to_string(c)},
                               {"n_max", nval},
                               {"structural_filters", structural},
                               {"complete", result.complete},
                               {"count", result.found.size()},
                               {"excluded_minors", items}};
      if (out_file.empty())
        std::cout << report.dump(2) << "\n";
      else {
        std::ofstream out(out_file);
        out << report.dump(2) << "\n";
        std::cout << "certified " << result.found.size() << " classes -> "
                  << out_file << "\n";
      }
      return kExitPass;
    }

    if (*verify_cmd) {
      SuiteOptions opts;
      opts.spike_max = spike_max;
      opts.cert_dir = out_dir;
      opts.jobs = jobs;
      std::vector<SuiteReport> reports;
      if (verify_all || suite.empty())
        reports = run_all_suites(opts);
      else
        reports.push_back(run_suite(suite, opts));
      bool all = true;
      for (const SuiteReport& r : reports) {
        std::cout << "suite " << r.suite << ": "
                  << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const CheckResult& c : r.checks) {
          std::cout << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL")
                    << "  [" << c.seconds << "s]\n";
          if (!c.pass) std::cout << "    " << c.detail << "\n";
        }
        all = all && r.passed();
      }
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << reports_to_json(reports).dump(2) << "\n";
      }
      return all ? kExitPass : kExitFail;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
