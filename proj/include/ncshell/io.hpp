#pragma once

// Serialization: Hasse diagrams (JSON, DOT), per-rank counts and root
// tables (CSV, JSON), orderings (JSON export and import), EL reports.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ncshell/errors.hpp"
#include "ncshell/group.hpp"
#include "ncshell/ncposet.hpp"
#include "ncshell/orderings.hpp"
#include "ncshell/roots.hpp"
#include "ncshell/shellcheck.hpp"

namespace ncshell {

using Json = nlohmann::ordered_json;

inline Json key_json(const GroupElement& g) {
  Json a = Json::array();
  for (auto c : g.key()) a.push_back(c);
  return a;
}

inline GroupElement element_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array() || j.size() != rs.size()) throw ParseError("element key has the wrong size");
  std::vector<RootCode> im;
  std::vector<bool> hit(rs.size(), false);
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("element key entries must be integers");
    const auto v = c.get<long long>();
    if (v == 0 || static_cast<std::size_t>(v < 0 ? -v : v) > rs.size())
      throw ParseError("element key entry out of range");
    const auto code = static_cast<RootCode>(v);
    if (hit[code_index(code)]) throw ParseError("element key is not a signed permutation");
    hit[code_index(code)] = true;
    im.push_back(code);
  }
  GroupElement g(std::move(im));
  // g t_s g^{-1} must be the reflection in g(alpha_s) for every simple s.
  const GroupElement gi = inverse(g);
  for (auto s : rs.simple()) {
    const auto c = as_reflection(rs, compose(compose(g, reflection_element(rs, s)), gi));
    if (!c || *c != code_index(g(positive_code(s))))
      throw ParseError("element key is not a group element");
  }
  return g;
}

// "(1,2)" style names for A/B/D, "t<k>" (1-based) otherwise.
inline std::string reflection_label(const RootSystem& rs, std::size_t r) {
  if (auto n = reflection_name(rs, r)) return *n;
  return "t" + std::to_string(r + 1);
}

inline std::string root_text(const RootSystem& rs, std::size_t r) {
  if (rs.dihedral()) {
    return "angle:" + std::to_string(r) + "/" + std::to_string(rs.dihedral_m());
  }
  std::string out;
  for (const auto& x : rs.root(r)) {
    if (!out.empty()) out += ' ';
    out += x.str();
  }
  return out;
}

inline std::string file_stem(const CoxeterType& t) {
  std::string s = t.name();
  for (auto& c : s)
    if (c == ':') c = '_';
  return s;
}

// ---------------------------------------------------------------------------
// Hasse diagram.

inline Json hasse_json(const RootSystem& rs, const NCPoset& p) {
  Json j;
  j["type"] = rs.type().name();
  j["rank"] = p.rank();
  Json elems = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    elems.push_back({{"id", i}, {"rank", p.rank_of(i)}, {"key", key_json(p.element(i))}});
  j["elements"] = std::move(elems);
  Json covers = Json::array();
  for (const auto& c : p.covers()) covers.push_back({{"lo", c.lo}, {"hi", c.hi}, {"label", c.label}});
  j["covers"] = std::move(covers);
  return j;
}

inline std::string hasse_dot(const RootSystem& rs, const NCPoset& p) {
  std::ostringstream os;
  os << "digraph NC {\n  rankdir=BT;\n  label=\"NC(" << rs.type().name() << ")\";\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << i << "\", rank=" << p.rank_of(i) << "];\n";
  for (const auto& c : p.covers())
    os << "  n" << c.lo << " -> n" << c.hi << " [label=\"" << c.label << "\", reflection=\""
       << reflection_label(rs, c.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string rank_csv(const RootSystem& rs, const NCPoset& p) {
  std::ostringstream os;
  os << "type,rank,count\n";
  const auto counts = p.rank_counts();
  for (std::size_t r = 0; r < counts.size(); ++r)
    os << rs.type().name() << ',' << r << ',' << counts[r] << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Root tables.

inline std::string root_table_csv(const RootSystem& rs) {
  std::ostringstream os;
  os << "index,coordinates,simple,block\n";
  for (std::size_t r = 0; r < rs.size(); ++r)
    os << r << ',' << root_text(rs, r) << ',' << (rs.is_simple(r) ? 1 : 0) << ','
       << rs.block_of(r) << '\n';
  return os.str();
}

inline Json root_table_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().name();
  Json roots = Json::array();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    Json coords = Json::array();
    if (rs.dihedral()) {
      coords.push_back(root_text(rs, r));
    } else {
      for (const auto& x : rs.root(r)) coords.push_back(x.str());
    }
    roots.push_back({{"index", r},
                     {"coordinates", std::move(coords)},
                     {"simple", rs.is_simple(r)},
                     {"block", rs.block_of(r)}});
  }
  j["roots"] = std::move(roots);
  return j;
}

// ---------------------------------------------------------------------------
// Orderings.

inline Json ordering_json(const RootSystem& rs, const TotalOrder& ord, const GroupElement& gamma,
                          const std::string& source) {
  Json j;
  j["type"] = rs.type().name();
  j["source"] = source;
  j["gamma"] = key_json(gamma);
  Json refl = Json::array();
  for (auto r : ord.sequence()) refl.push_back({{"root", r}, {"name", reflection_label(rs, r)}});
  j["reflections"] = std::move(refl);
  return j;
}

struct ImportedOrdering {
  TotalOrder order;
  std::optional<GroupElement> gamma;
};

inline ImportedOrdering parse_ordering_json(const RootSystem& rs, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ordering file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("reflections") || !j["reflections"].is_array())
    throw ParseError("ordering file needs a 'reflections' array");
  if (j.contains("type")) {
    if (!j["type"].is_string()) throw ParseError("ordering 'type' must be a string");
    CoxeterType t;
    try {
      t = CoxeterType::parse(j["type"].get<std::string>());
    } catch (const ConfigError& e) {
      throw ParseError(e.what());
    }
    if (!(t == rs.type())) throw ParseError("ordering file is for type " + t.name());
  }
  std::vector<std::size_t> seq;
  for (const auto& e : j["reflections"]) {
    const Json& r = e.is_object() ? e.value("root", Json()) : e;
    if (!r.is_number_unsigned() && !(r.is_number_integer() && r.get<long long>() >= 0))
      throw ParseError("ordering entries need a nonnegative root index");
    seq.push_back(r.get<std::size_t>());
  }
  if (seq.size() != rs.size()) throw ParseError("ordering does not list every reflection");
  ImportedOrdering out;
  try {
    out.order = TotalOrder::from_sequence(std::move(seq));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (j.contains("gamma") && !j["gamma"].is_null()) out.gamma = element_from_json(rs, j["gamma"]);
  return out;
}

// ---------------------------------------------------------------------------
// Chains and EL reports.

inline Json chain_json(const RootSystem& rs, const Chain& c) {
  Json names = Json::array();
  for (auto l : c.labels) names.push_back(reflection_label(rs, l));
  return {{"elements", c.elements}, {"labels", c.labels}, {"names", std::move(names)}};
}

inline std::string chain_text(const RootSystem& rs, const Chain& c) {
  std::string ids, names;
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (i) {
      ids += ", ";
      names += " ";
    }
    ids += std::to_string(c.labels[i]);
    names += reflection_label(rs, c.labels[i]);
  }
  return "(" + ids + ") = " + names;
}

inline Json el_report_json(const RootSystem& rs, const ELReport& rep) {
  Json j;
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  j["paranoid"] = rep.paranoid;
  j["intervals_covered"] = rep.intervals_covered;
  j["falling_full"] = rep.falling_full;
  Json rows = Json::array();
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    const auto& r = rep.intervals[i];
    Json row{{"id", i},
             {"bottom", r.bottom},
             {"top", r.top},
             {"length", r.length},
             {"occurrences", r.occurrences},
             {"rising_count", r.rising_count},
             {"lex_smallest", chain_json(rs, r.lex_smallest)},
             {"lex_unique", r.lex_unique},
             {"lex_is_rising", r.lex_is_rising}};
    if (!r.ok()) {
      Json rising = Json::array();
      for (const auto& c : r.rising) rising.push_back(chain_json(rs, c));
      row["rising_chains"] = std::move(rising);
    }
    rows.push_back(std::move(row));
  }
  j["intervals"] = std::move(rows);
  if (rep.witness) j["witness"] = *rep.witness;
  return j;
}

inline std::string el_report_table(const RootSystem& rs, const ELReport& rep) {
  std::ostringstream os;
  os << "  id  bottom  top  len  occ  rising  lex-rising  lex-smallest\n";
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    const auto& r = rep.intervals[i];
    os << "  " << i << "  " << r.bottom << "  " << r.top << "  " << r.length << "  "
       << r.occurrences << "  " << r.rising_count << "  " << (r.lex_is_rising ? "yes" : "no")
       << "  " << chain_text(rs, r.lex_smallest) << '\n';
  }
  os << "  verdict " << (rep.pass ? "PASS" : "FAIL") << ", " << rep.intervals_covered
     << " intervals, " << rep.falling_full << " falling chains in [1, gamma]\n";
  return os.str();
}

// Witness of a failing EL report: the interval and its offending chains.
inline std::string el_witness_text(const RootSystem& rs, const ELReport& rep) {
  if (!rep.witness) return {};
  const auto& r = rep.intervals[*rep.witness];
  std::ostringstream os;
  os << "interval [" << r.bottom << ", " << r.top << "] has " << r.rising_count
     << " rising chains; lex-smallest " << chain_text(rs, r.lex_smallest)
     << (r.lex_is_rising ? " is rising" : " is not rising")
     << (r.lex_unique ? "" : " and not unique");
  for (const auto& c : r.rising) os << "; rising " << chain_text(rs, c);
  return os.str();
}

}  // namespace ncshell
