#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hcs/autgroup.hpp"
#include "hcs/doubling.hpp"
#include "hcs/group.hpp"
#include "hcs/prescribe.hpp"
#include "hcs/rotational.hpp"
#include "hcs/system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// A bad flag value (e.g. a malformed group spec) is a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hcs::FiniteGroup parse_group_flag(const std::string& spec) {
  try {
    return hcs::parse_group_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

// Returns nonzero exit code when the computed group fails the check.
int assert_group(const hcs::CycleSystem& s, const std::string& target_spec,
                 bool warn_only) {
  const hcs::FiniteGroup target = parse_group_flag(target_spec);
  const hcs::PermGroup aut = hcs::automorphism_group(s);
  const hcs::FiniteGroup abstract = hcs::as_abstract_group(aut, "Aut");
  const bool iso = hcs::is_isomorphic(abstract, target);
  std::cout << "automorphism group: order=" << aut.order()
            << " class=" << to_string(aut.classification) << " isomorphic to "
            << target_spec << ": " << (iso ? "yes" : "NO") << "\n";
  if (iso) return kExitOk;
  if (warn_only) {
    std::cout << "warning: automorphism group check failed\n";
    return kExitOk;
  }
  return kExitDomain;
}

struct ConstructOptions {
  std::string group_spec;
  std::string output;
  std::string assert_spec;
  bool no_assert = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
  int d = 3;
};

void add_common_flags(CLI::App* cmd, ConstructOptions& opt) {
  cmd->add_option("--group", opt.group_spec, "group spec, e.g. Z5 or Q8")->required();
  cmd->add_option("--seed", opt.seed, "search seed")->capture_default_str();
  cmd->add_option("--budget", opt.budget, "search node budget")->capture_default_str();
  cmd->add_option("-o,--output", opt.output, "write the system to this file");
  cmd->add_option("--assert-group", opt.assert_spec,
                  "require the automorphism group to be isomorphic to this spec");
  cmd->add_flag("--no-assert", opt.no_assert,
                "downgrade the automorphism group check to a warning");
}

int finish_construction(const hcs::CycleSystem& s, const ConstructOptions& opt) {
  const auto rep = hcs::validate(s);
  if (!rep.ok) throw std::logic_error("constructed system is invalid: " + rep.summary());
  std::cout << "valid HCS, v=" << s.order() << "\n";
  write_output(opt.output, hcs::serialize_system(s));
  const std::string target = opt.assert_spec.empty() ? opt.group_spec : opt.assert_spec;
  return assert_group(s, target, opt.no_assert);
}

std::map<int, int> parse_map_arg(const std::string& arg) {
  std::map<int, int> mapping;
  std::istringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--map", "expected comma-separated old=new pairs");
    try {
      const int from = std::stoi(item.substr(0, eq));
      const int to = std::stoi(item.substr(eq + 1));
      if (!mapping.emplace(from, to).second)
        throw CLI::ValidationError("--map", "label mapped twice: " + item);
    } catch (const CLI::ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--map", "bad pair '" + item + "'");
    }
  }
  return mapping;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and exact automorphism analysis of Hamiltonian cycle systems"};
  app.require_subcommand(1);

  // verify
  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "check that a file holds a valid system");
  verify_cmd->add_option("file", verify_path)->required();

  // aut
  std::string aut_path, aut_assert;
  bool aut_oracle = false;
  auto* aut_cmd = app.add_subcommand("aut", "compute the full automorphism group");
  aut_cmd->add_option("file", aut_path)->required();
  aut_cmd->add_flag("--oracle", aut_oracle, "use the factorial-time oracle (order <= 9)");
  aut_cmd->add_option("--assert-group", aut_assert, "require isomorphism to this spec");

  // double
  std::vector<std::string> double_paths;
  std::string double_out, double_assert;
  auto* double_cmd = app.add_subcommand("double", "double three compatible systems");
  double_cmd->add_option("files", double_paths, "h1 h2 h3")->expected(3);
  double_cmd->add_option("-o,--output", double_out);
  double_cmd->add_option("--assert-group", double_assert);

  // construct odd / binary
  auto* construct_cmd = app.add_subcommand("construct", "build a system with prescribed automorphisms");
  construct_cmd->require_subcommand(1);
  ConstructOptions odd_opt;
  auto* odd_cmd = construct_cmd->add_subcommand("odd", "odd-order group pipeline");
  add_common_flags(odd_cmd, odd_opt);
  ConstructOptions bin_opt;
  auto* bin_cmd = construct_cmd->add_subcommand("binary", "binary group times odd cycle pipeline");
  add_common_flags(bin_cmd, bin_opt);
  bin_cmd->add_option("--d", bin_opt.d, "odd order of the cyclic factor, >= 3")->required();

  // starter
  ConstructOptions starter_opt;
  auto* starter_cmd = app.add_subcommand("starter", "search a starter cycle for a binary group");
  starter_cmd->add_option("--group", starter_opt.group_spec)->required();
  starter_cmd->add_option("--seed", starter_opt.seed)->capture_default_str();
  starter_cmd->add_option("--budget", starter_opt.budget)->capture_default_str();
  starter_cmd->add_option("-o,--output", starter_opt.output);

  // relabel
  std::string relabel_path, relabel_map, relabel_out;
  auto* relabel_cmd = app.add_subcommand("relabel", "apply a label permutation to a system");
  relabel_cmd->add_option("file", relabel_path)->required();
  relabel_cmd->add_option("--map", relabel_map, "comma-separated old=new pairs")->required();
  relabel_cmd->add_option("-o,--output", relabel_out);

  std::map<int, int> relabel_mapping;
  try {
    app.parse(argc, argv);
    if (*relabel_cmd) relabel_mapping = parse_map_arg(relabel_map);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify_cmd) {
      const auto s = hcs::parse_system(read_file(verify_path));
      const auto rep = hcs::validate(s);
      if (!rep.ok) {
        std::cout << rep.summary() << "\n";
        return kExitDomain;
      }
      std::cout << "valid HCS, v=" << s.order() << "\n";
      return kExitOk;
    }

    if (*aut_cmd) {
      const auto s = hcs::parse_system(read_file(aut_path));
      const hcs::PermGroup g =
          aut_oracle ? hcs::brute_force_aut(s) : hcs::automorphism_group(s);
      std::cout << hcs::aut_report(s, g);
      if (!aut_assert.empty()) {
        const auto target = parse_group_flag(aut_assert);
        if (!hcs::is_isomorphic(hcs::as_abstract_group(g, "Aut"), target)) {
          std::cout << "automorphism group is not isomorphic to " << aut_assert << "\n";
          return kExitDomain;
        }
        std::cout << "isomorphic to " << aut_assert << ": yes\n";
      }
      return kExitOk;
    }

    if (*double_cmd) {
      const auto h1 = hcs::parse_system(read_file(double_paths[0]));
      const auto h2 = hcs::parse_system(read_file(double_paths[1]));
      const auto h3 = hcs::parse_system(read_file(double_paths[2]));
      const auto compat = hcs::check_compatible(h1, h2, h3);
      if (!compat.ok()) {
        for (const auto& d : compat.defects) std::cout << d << "\n";
        return kExitDomain;
      }
      const auto doubled = hcs::double_system(*compat.input);
      std::cout << "valid HCS, v=" << doubled.order() << "\n";
      write_output(double_out, hcs::serialize_system(doubled));
      if (!double_assert.empty()) {
        const hcs::PermGroup aut = hcs::automorphism_group(doubled);
        if (!hcs::is_isomorphic(hcs::as_abstract_group(aut, "Aut"),
                                parse_group_flag(double_assert))) {
          std::cout << "automorphism group is not isomorphic to " << double_assert << "\n";
          return kExitDomain;
        }
        std::cout << "isomorphic to " << double_assert << ": yes\n";
      }
      return kExitOk;
    }

    if (*odd_cmd) {
      const auto g = parse_group_flag(odd_opt.group_spec);
      const hcs::SearchBudget budget{odd_opt.budget, odd_opt.seed, 32};
      const auto built = hcs::construct_odd(g, budget);
      std::cout << built.trace.report();
      return finish_construction(built.system, odd_opt);
    }

    if (*bin_cmd) {
      const auto h = parse_group_flag(bin_opt.group_spec);
      const hcs::SearchBudget budget{bin_opt.budget, bin_opt.seed, 32};
      const auto built = hcs::construct_binary(h, bin_opt.d, budget);
      std::cout << built.trace.report();
      return finish_construction(built.system, bin_opt);
    }

    if (*starter_cmd) {
      const auto gamma = parse_group_flag(starter_opt.group_spec);
      const hcs::SearchBudget budget{starter_opt.budget, starter_opt.seed, 32};
      const auto result = hcs::find_starter(gamma, budget);
      if (!result.starter) {
        std::cout << "no starter found (nodes=" << result.nodes
                  << (result.exhausted_space ? ", search space exhausted" : "") << ")\n";
        return kExitDomain;
      }
      const std::string text = hcs::serialize_starter(*result.starter);
      std::cout << "starter found (nodes=" << result.nodes << ")\n";
      write_output(starter_opt.output, text);
      return kExitOk;
    }

    if (*relabel_cmd) {
      const auto s = hcs::parse_system(read_file(relabel_path));
      const auto relabeled = hcs::relabel_indices(s, relabel_mapping);
      write_output(relabel_out, hcs::serialize_system(relabeled));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
