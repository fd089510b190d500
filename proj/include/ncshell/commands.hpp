#pragma once

// Batch commands behind the command-line front end. Every command writes to
// the given streams and returns an exit code: 0 when everything passes, 1 on
// a property violation, 2 on a configuration or input error.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ncshell/coxeter_type.hpp"
#include "ncshell/errors.hpp"
#include "ncshell/io.hpp"
#include "ncshell/properties.hpp"
#include "ncshell/ncposet.hpp"
#include "ncshell/orderings.hpp"
#include "ncshell/roots.hpp"
#include "ncshell/shellcheck.hpp"

namespace ncshell {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitConfig = 2 };

struct RunConfig {
  std::vector<CoxeterType> types;
  std::string ordering = "steinberg";  // steinberg | classical | file:<path> | random[:<seed>]
  std::vector<std::string> checks;     // empty selects every check
  std::string format = "table";        // table | json | csv | dot
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  bool paranoid = false;
  bool allow_large = false;
  bool swap_blocks = false;
  std::size_t threads = 0;  // 0: NCSHELL_THREADS, else hardware concurrency
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"refl-order", "compatible", "el",    "mobius",
                                              "hurwitz",    "lattice",    "dual",  "zbasis",
                                              "simple",     "properties"};
  return names;
}

// The default gate: A1-A4, B2-B4, D3-D4, I2(2..12), H3, F4.
inline std::vector<CoxeterType> default_types() {
  std::vector<CoxeterType> out;
  for (int n = 1; n <= 4; ++n) out.push_back(CoxeterType::make(Family::A, n));
  for (int n = 2; n <= 4; ++n) out.push_back(CoxeterType::make(Family::B, n));
  for (int n = 3; n <= 4; ++n) out.push_back(CoxeterType::make(Family::D, n));
  for (int m = 2; m <= 12; ++m) out.push_back(CoxeterType::make(Family::I2, m));
  out.push_back(CoxeterType::make(Family::H3));
  out.push_back(CoxeterType::make(Family::F4));
  return out;
}

// Comma-separated selectors; "default" expands to the default gate.
inline std::vector<CoxeterType> parse_type_list(const std::string& text) {
  std::vector<CoxeterType> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    if (item == "default") {
      const auto d = default_types();
      out.insert(out.end(), d.begin(), d.end());
    } else {
      out.push_back(CoxeterType::parse(item));
    }
  }
  return out;
}

inline void validate_config(const RunConfig& cfg) {
  if (cfg.types.empty()) throw ConfigError("no type selected");
  for (const auto& c : cfg.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw ConfigError("unknown check '" + c + "'");
  const std::string& o = cfg.ordering;
  if (o == "classical") {
    for (const auto& t : cfg.types)
      if (!t.classical()) throw ConfigError("classical ordering requires type A, B or D, got " + t.name());
  } else if (o == "random") {
    if (!cfg.seed) throw ConfigError("random ordering requires a seed (random:<seed> or --seed)");
  } else if (o.rfind("random:", 0) == 0) {
    const std::string digits = o.substr(7);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("malformed random seed '" + digits + "'");
  } else if (o.rfind("file:", 0) == 0) {
    if (o.size() == 5) throw ConfigError("file ordering needs a path");
  } else if (o != "steinberg") {
    throw ConfigError("unknown ordering source '" + o + "'");
  }
  const auto& f = cfg.format;
  if (f != "table" && f != "json" && f != "csv" && f != "dot")
    throw ConfigError("unknown format '" + f + "'");
}

// Refusal message for large types, with the size of the job.
inline std::optional<std::string> large_type_refusal(const RunConfig& cfg) {
  if (cfg.allow_large) return std::nullopt;
  for (const auto& t : cfg.types)
    if (t.large()) {
      const long long refl = static_cast<long long>(t.rank()) * t.coxeter_number() / 2;
      return "refusing " + t.name() + " without --allow-large: |T| = " + std::to_string(refl) +
             ", |NC| = " + std::to_string(catalan_number(t)) + " elements";
    }
  return std::nullopt;
}

struct ResolvedOrdering {
  TotalOrder order;
  GroupElement gamma;
  std::string source;  // echoes the seed for random orderings
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read ordering file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ResolvedOrdering resolve_ordering(const RootSystem& rs, const RunConfig& cfg) {
  const std::string& o = cfg.ordering;
  if (o == "steinberg") {
    auto st = steinberg_order(rs, cfg.swap_blocks);
    return {std::move(st.order), std::move(st.gamma), "steinberg"};
  }
  if (o == "classical") {
    auto c = classical_order(rs);
    return {std::move(c.order), std::move(c.gamma), "classical"};
  }
  if (o.rfind("file:", 0) == 0) {
    auto imp = parse_ordering_json(rs, read_file(o.substr(5)));
    GroupElement gamma = imp.gamma ? *imp.gamma : bipartite_coxeter_element(rs, cfg.swap_blocks);
    return {std::move(imp.order), std::move(gamma), o};
  }
  const std::uint64_t seed = o == "random" ? *cfg.seed : std::stoull(o.substr(7));
  return {random_order(rs.size(), seed), bipartite_coxeter_element(rs, cfg.swap_blocks),
          "random:" + std::to_string(seed)};
}

// ---------------------------------------------------------------------------
// Per-type worker pool.

struct TypeResult {
  int code = kExitOk;
  std::string text;
  Json json;
  std::vector<std::pair<std::string, std::string>> files;
};

inline std::size_t worker_count(const RunConfig& cfg, std::size_t jobs) {
  std::size_t n = cfg.threads;
  if (n == 0) {
    if (const char* env = std::getenv("NCSHELL_THREADS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) n = v;
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, jobs));
}

// Runs job(type) for every selected type, in parallel, and returns the
// results in selection order. Library errors become exit codes.
template <typename Job>
std::vector<TypeResult> run_types(const RunConfig& cfg, Job&& job) {
  std::vector<TypeResult> results(cfg.types.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.types.size(); i = next++) {
      const CoxeterType& t = cfg.types[i];
      try {
        results[i] = job(t);
      } catch (const ConfigError& e) {
        results[i] = {kExitConfig, t.name() + ": " + e.what() + "\n", {}, {}};
      } catch (const ParseError& e) {
        results[i] = {kExitConfig, t.name() + ": " + e.what() + "\n", {}, {}};
      } catch (const DomainError& e) {
        results[i] = {kExitConfig, t.name() + ": " + e.what() + "\n", {}, {}};
      } catch (const DimensionError& e) {
        results[i] = {kExitConfig, t.name() + ": " + e.what() + "\n", {}, {}};
      } catch (const std::exception& e) {
        results[i] = {kExitViolation, t.name() + ": " + e.what() + "\n", {}, {}};
      }
    }
  };
  const std::size_t n = worker_count(cfg, cfg.types.size());
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

inline int combine_codes(const std::vector<TypeResult>& results) {
  int code = kExitOk;
  for (const auto& r : results) code = std::max(code, r.code);
  return code;
}

// Shared front matter of every command; returns an exit code on failure.
inline std::optional<int> preflight(const RunConfig& cfg, std::ostream& err) {
  try {
    validate_config(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (auto refusal = large_type_refusal(cfg)) {
    err << "error: " << *refusal << '\n';
    return kExitConfig;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// table

struct TableRow {
  std::string type;
  std::size_t positive_roots = 0;
  std::size_t nc_size = 0;
  std::vector<std::size_t> rank_counts;
  long long mobius = 0;
  std::size_t falling = 0;
  std::size_t maximal_chains = 0;
  long long catalan = 0;
  long long positive_catalan = 0;
  std::string ordering;

  bool formulas_match() const {
    return static_cast<long long>(nc_size) == catalan &&
           (mobius < 0 ? -mobius : mobius) == positive_catalan;
  }
};

inline TableRow table_row(const CoxeterType& t, const RunConfig& cfg) {
  const RootSystem rs = build_root_system(t);
  const auto ord = resolve_ordering(rs, cfg);
  const NCPoset p = build_nc(rs, ord.gamma);
  const Interval full = interval(p, p.bottom(), p.top());
  TableRow row;
  row.type = t.name();
  row.positive_roots = rs.size();
  row.nc_size = p.size();
  row.rank_counts = p.rank_counts();
  row.mobius = mobius(p, full);
  row.falling = count_falling(p, full, ord.order);
  row.maximal_chains = count_maximal_chains(p.order(), full);
  row.catalan = catalan_number(t);
  row.positive_catalan = positive_catalan_number(t);
  row.ordering = ord.source;
  return row;
}

inline std::string join_counts(const std::vector<std::size_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (auto code = preflight(cfg, err)) return *code;
  auto results = run_types(cfg, [&](const CoxeterType& t) {
    const TableRow row = table_row(t, cfg);
    TypeResult r;
    r.code = row.formulas_match() ? kExitOk : kExitViolation;
    r.json = {{"type", row.type},
              {"ordering", row.ordering},
              {"positive_roots", row.positive_roots},
              {"nc_size", row.nc_size},
              {"rank_counts", row.rank_counts},
              {"mobius", row.mobius},
              {"mobius_abs", row.mobius < 0 ? -row.mobius : row.mobius},
              {"falling", row.falling},
              {"maximal_chains", row.maximal_chains},
              {"catalan", row.catalan},
              {"positive_catalan", row.positive_catalan},
              {"formulas_match", row.formulas_match()}};
    return r;
  });
  for (const auto& r : results)
    if (r.json.is_null()) err << r.text;
  const int code = combine_codes(results);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results)
      if (!r.json.is_null()) arr.push_back(r.json);
    out << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "type,ordering,positive_roots,nc_size,rank_counts,mobius_abs,falling,maximal_chains,"
           "catalan,positive_catalan,formulas_match\n";
    for (const auto& r : results) {
      if (r.json.is_null()) continue;
      const auto& j = r.json;
      out << j["type"].get<std::string>() << ',' << j["ordering"].get<std::string>() << ','
          << j["positive_roots"] << ',' << j["nc_size"] << ','
          << join_counts(j["rank_counts"].get<std::vector<std::size_t>>(), ';') << ','
          << j["mobius_abs"] << ',' << j["falling"] << ',' << j["maximal_chains"] << ','
          << j["catalan"] << ',' << j["positive_catalan"] << ','
          << (j["formulas_match"].get<bool>() ? 1 : 0) << '\n';
    }
  } else {
    out << std::left << std::setw(7) << "type" << std::setw(5) << "|T|" << std::setw(6) << "|NC|"
        << std::setw(22) << "ranks" << std::setw(6) << "|mu|" << std::setw(9) << "falling"
        << std::setw(8) << "chains" << std::setw(9) << "catalan" << std::setw(9) << "positive"
        << "status\n";
    for (const auto& r : results) {
      if (r.json.is_null()) continue;
      const auto& j = r.json;
      out << std::left << std::setw(7) << j["type"].get<std::string>() << std::setw(5)
          << j["positive_roots"].get<std::size_t>() << std::setw(6)
          << j["nc_size"].get<std::size_t>() << std::setw(22)
          << join_counts(j["rank_counts"].get<std::vector<std::size_t>>(), ' ') << std::setw(6)
          << j["mobius_abs"].get<long long>() << std::setw(9) << j["falling"].get<std::size_t>()
          << std::setw(8) << j["maximal_chains"].get<std::size_t>() << std::setw(9)
          << j["catalan"].get<long long>() << std::setw(9)
          << j["positive_catalan"].get<long long>()
          << (j["formulas_match"].get<bool>() ? "ok" : "MISMATCH") << '\n';
    }
    if (!results.empty() && !results.front().json.is_null())
      out << "ordering: " << results.front().json["ordering"].get<std::string>() << '\n';
  }
  return code;
}

// ---------------------------------------------------------------------------
// check

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::string detail;
};

inline std::string roots_text(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::string s;
  for (auto r : roots) {
    if (!s.empty()) s += ", ";
    s += std::to_string(r) + " " + reflection_label(rs, r);
  }
  return s;
}

inline std::string order_violation_text(const RootSystem& rs, const OrderCheck& c) {
  if (c.ok()) return {};
  return c.violation->reason + " [" + roots_text(rs, c.violation->roots) + "]";
}

inline CheckOutcome run_check(const std::string& name, const RootSystem& rs, const NCPoset& p,
                              const ResolvedOrdering& ord, const RunConfig& cfg) {
  CheckOutcome o;
  o.name = name;
  if (name == "refl-order") {
    const auto c = is_reflection_ordering(rs, ord.order);
    o.pass = c.ok();
    o.detail = c.ok() ? "monotone on every rank-2 subsystem" : order_violation_text(rs, c);
  } else if (name == "compatible") {
    const auto c = compatible_with(rs, ord.order, p);
    o.pass = c.ok();
    o.detail = c.ok() ? "compatible with gamma" : order_violation_text(rs, c);
  } else if (name == "el") {
    const auto rep = el_check(p, ord.order, cfg.paranoid);
    o.pass = rep.pass;
    o.detail = rep.pass ? std::to_string(rep.intervals_covered) + " intervals, " +
                              std::to_string(rep.falling_full) + " falling chains in [1, gamma]" +
                              (rep.paranoid ? " (direct)" : "")
                        : el_witness_text(rs, rep);
  } else if (name == "mobius") {
    const auto rep = mobius_falling_report(p, ord.order);
    o.pass = rep.ok;
    if (rep.ok) {
      o.detail = "mu = " + std::to_string(rep.full_mobius) + ", falling = " +
                 std::to_string(rep.full_falling) + " over " +
                 std::to_string(rep.intervals_checked) + " intervals";
    } else {
      o.detail = "interval [" + std::to_string(rep.witness->first) + ", " +
                 std::to_string(rep.witness->second) + "]: mu = " +
                 std::to_string(rep.witness_mobius) + ", falling = " +
                 std::to_string(rep.witness_falling);
    }
  } else if (name == "hurwitz") {
    const auto rep = hurwitz_transitive_report(rs, p);
    o.pass = rep.ok;
    o.detail = "orbit " + std::to_string(rep.orbit_size) + " of " +
               std::to_string(rep.factorization_count) + " factorizations";
  } else if (name == "lattice") {
    o.pass = is_lattice(p);
    o.detail = o.pass ? "every pair has a meet and a join" : "a pair lacks a meet or a join";
  } else if (name == "dual") {
    const auto counts = p.rank_counts();
    const bool symmetric = std::equal(counts.begin(), counts.end(), counts.rbegin());
    o.pass = self_duality_check(p) && symmetric;
    o.detail = "rank counts " + join_counts(counts, ' ');
  } else if (name == "zbasis") {
    const auto rep = chain_basis_check(rs, p);
    o.pass = rep.ok();
    o.detail = rep.ok() ? std::to_string(rep.instances) + " chains, " +
                              (rs.crystallographic() ? "Z-bases" : "linear bases")
                        : rep.first_violation;
  } else if (name == "simple") {
    o.pass = rising_chain_is_simple_system(rs, p, ord.order);
    o.detail = o.pass ? "rising chains are labelled by simple systems"
                      : "a rising chain is not labelled by a simple system";
  } else if (name == "properties") {
    std::vector<PropertyReport> reps{label_properties_check(p), translation_check(p),
                                     parabolic_restriction_check(rs, p, ord.order),
                                     hurwitz_check(rs, p), parabolic_subsystem_check(rs, p)};
    for (const auto& r : reps) {
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += r.name + " " + std::to_string(r.instances);
      if (!r.ok()) {
        o.pass = false;
        o.detail += " FAILED: " + r.first_violation;
      }
    }
  }
  return o;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (auto code = preflight(cfg, err)) return *code;
  const std::vector<std::string> checks = cfg.checks.empty() ? known_checks() : cfg.checks;
  auto results = run_types(cfg, [&](const CoxeterType& t) {
    const RootSystem rs = build_root_system(t);
    const auto ord = resolve_ordering(rs, cfg);
    const NCPoset p = build_nc(rs, ord.gamma);
    TypeResult r;
    std::ostringstream os;
    os << "== " << t.name() << "  ordering " << ord.source << ", |T| = " << rs.size()
       << ", |NC| = " << p.size() << '\n';
    Json arr = Json::array();
    for (const auto& name : checks) {
      const auto o = run_check(name, rs, p, ord, cfg);
      if (!o.pass) r.code = kExitViolation;
      os << (o.pass ? "PASS " : "FAIL ") << o.name << ": " << o.detail << '\n';
      arr.push_back({{"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
    }
    r.text = os.str();
    r.json = {{"type", t.name()},
              {"ordering", ord.source},
              {"positive_roots", rs.size()},
              {"nc_size", p.size()},
              {"checks", std::move(arr)}};
    return r;
  });
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      if (r.json.is_null()) {
        err << r.text;
      } else {
        arr.push_back(r.json);
      }
    }
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : results) (r.json.is_null() ? err : out) << r.text;
  }
  return combine_codes(results);
}

// ---------------------------------------------------------------------------
// export

inline std::vector<std::pair<std::string, std::string>> export_files(const CoxeterType& t,
                                                                     const RunConfig& cfg) {
  const RootSystem rs = build_root_system(t);
  const auto ord = resolve_ordering(rs, cfg);
  const NCPoset p = build_nc(rs, ord.gamma);
  const std::string stem = file_stem(t);
  return {
      {stem + "_hasse.json", hasse_json(rs, p).dump(2) + "\n"},
      {stem + "_hasse.dot", hasse_dot(rs, p)},
      {stem + "_ranks.csv", rank_csv(rs, p)},
      {stem + "_roots.csv", root_table_csv(rs)},
      {stem + "_roots.json", root_table_json(rs).dump(2) + "\n"},
      {stem + "_ordering.json", ordering_json(rs, ord.order, ord.gamma, ord.source).dump(2) + "\n"},
  };
}

// With --out every artifact is written into that directory; without it the
// Hasse diagram (json or dot) or the root table (csv) goes to `out`.
inline int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (auto code = preflight(cfg, err)) return *code;
  auto results = run_types(cfg, [&](const CoxeterType& t) {
    TypeResult r;
    r.files = export_files(t, cfg);
    r.json = t.name();
    return r;
  });
  int code = combine_codes(results);
  for (const auto& r : results)
    if (r.json.is_null()) err << r.text;
  if (cfg.out) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(*cfg.out, ec);
    if (ec || !fs::is_directory(*cfg.out)) {
      err << "error: cannot create output directory '" << *cfg.out << "'\n";
      return kExitConfig;
    }
    for (const auto& r : results)
      for (const auto& [name, content] : r.files) {
        const fs::path path = fs::path(*cfg.out) / name;
        std::ofstream f(path, std::ios::binary);
        f << content;
        f.close();
        if (!f) {
          err << "error: cannot write '" << path.string() << "'\n";
          return kExitConfig;
        }
        out << path.string() << '\n';
      }
    return code;
  }
  const std::string suffix = cfg.format == "dot" ? "_hasse.dot"
                             : cfg.format == "csv" ? "_roots.csv"
                                                   : "_hasse.json";
  for (const auto& r : results)
    for (const auto& [name, content] : r.files)
      if (name.size() >= suffix.size() &&
          name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        out << content;
  return code;
}

}  // namespace ncshell
