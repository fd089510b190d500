#pragma once

// Command-line parsing for the ncshell tool. run_cli is callable in-process
// so tests can drive the exact front end.

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ncshell/commands.hpp"

namespace ncshell {

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncrossing partition lattices: EL-shellability and Moebius checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> types;
  std::string checks;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", types, "Coxeter type(s): A3, B4, D4, I2:5, H3, F4, ..., or 'default'")
        ->required()
        ->delimiter(',');
    sub->add_option("--ordering", cfg.ordering,
                    "steinberg | classical | file:<path> | random[:<seed>]");
    sub->add_option("--format", cfg.format, "table | json | csv | dot");
    sub->add_option("--seed", seed, "seed for --ordering random");
    sub->add_flag("--paranoid", cfg.paranoid, "check every interval directly");
    sub->add_flag("--allow-large", cfg.allow_large, "permit E6, E7, E8 and H4");
    sub->add_flag("--swap-blocks", cfg.swap_blocks, "start the bipartite order with block two");
    sub->add_option("--threads", cfg.threads, "worker threads (default NCSHELL_THREADS)");
  };

  CLI::App* table = app.add_subcommand("table", "tabulate |NC|, rank counts, |mu| per type");
  add_common(table);
  CLI::App* check = app.add_subcommand("check", "run property checks, exit 1 on a violation");
  add_common(check);
  check->add_option("--checks", checks,
                    "comma list of refl-order, compatible, el, mobius, hurwitz, lattice, dual, "
                    "zbasis, simple, properties");
  CLI::App* exp = app.add_subcommand("export", "write Hasse diagrams, root tables, orderings");
  add_common(exp);
  std::string out_dir;
  exp->add_option("--out", out_dir, "output directory");
  // --out is accepted everywhere for a uniform flag set; only export uses it.
  table->add_option("--out", out_dir, "ignored");
  check->add_option("--out", out_dir, "ignored");

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(*it);
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    for (const auto& t : types) {
      const auto parsed = parse_type_list(t);
      cfg.types.insert(cfg.types.end(), parsed.begin(), parsed.end());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!checks.empty()) {
    std::stringstream ss(checks);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cfg.checks.push_back(item);
  }
  if (table->count("--seed") + check->count("--seed") + exp->count("--seed") > 0) cfg.seed = seed;
  if (!out_dir.empty()) cfg.out = out_dir;

  if (table->parsed()) return cmd_table(cfg, out, err);
  if (check->parsed()) return cmd_check(cfg, out, err);
  return cmd_export(cfg, out, err);
}

}  // namespace ncshell
