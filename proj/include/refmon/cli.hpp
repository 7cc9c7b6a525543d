#pragma once

// Command implementations behind the refmon tool. Each command turns a
// Request into a Report; parsing flags and printing live in tools/.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "refmon/core.hpp"
#include "refmon/inverse_monoid.hpp"
#include "refmon/orders.hpp"
#include "refmon/pperm.hpp"
#include "refmon/reflection_monoid.hpp"
#include "refmon/systems.hpp"
#include "refmon/weyl.hpp"

namespace refmon::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, cap = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string command;
  std::string family;
  unsigned    n      = 0;
  std::string system = "arrangement";
  std::string method = "formula";
  std::string model;
  std::string orbit_data;
  bool        ranks  = false;
  bool        orbits = false;
  std::size_t max_order   = 1'000'000;
  std::size_t closure_cap = exactlin::kDefaultClosureCap;
};

struct Discrepancy {
  std::string formula;
  std::string printed;
  std::string oracle;
  bool        equal = false;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> request;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<Discrepancy>                         discrepancies;

  void add(std::string label, std::string value) {
    results.emplace_back(std::move(label), std::move(value));
  }
  std::optional<std::string> get(std::string const& label) const {
    for (auto const& [k, v] : results) {
      if (k == label) {
        return v;
      }
    }
    return std::nullopt;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["request"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : request) {
      j["request"][k] = v;
    }
    j["results"] = nlohmann::ordered_json::array();
    for (auto const& [k, v] : results) {
      j["results"].push_back({{"label", k}, {"value", v}});
    }
    j["discrepancies"] = nlohmann::ordered_json::array();
    for (auto const& d : discrepancies) {
      j["discrepancies"].push_back({{"formula", d.formula},
                                    {"printed", d.printed},
                                    {"oracle", d.oracle},
                                    {"equal", d.equal}});
    }
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    std::size_t        w = 0;
    for (auto const& [k, v] : results) {
      w = std::max(w, k.size());
    }
    for (auto const& [k, v] : results) {
      os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    }
    for (auto const& d : discrepancies) {
      os << d.formula << ": printed " << d.printed << ", oracle " << d.oracle
         << (d.equal ? " (equal)" : " (mismatch)") << '\n';
    }
    return os.str();
  }
};

inline std::string str(BigInt const& v) { return v.str(); }
inline std::string str(Rational const& v) {
  return denominator(v) == 1 ? numerator(v).str()
                             : numerator(v).str() + "/" + denominator(v).str();
}

inline std::string join(std::vector<BigInt> const& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + v[i].str();
  }
  return s;
}

inline Family family_of(Request const& r) {
  if (r.family.empty()) {
    throw UsageError("--family is required");
  }
  try {
    return parse_family(r.family);
  } catch (Error const&) {
    throw UsageError("unknown family '" + r.family + "'");
  }
}

inline void require_n(Request const& r, Family f) {
  if (is_classical(f) && r.n == 0) {
    throw UsageError("--n must be at least 1 for family " + r.family);
  }
}

inline bool is_boolean(Request const& r) {
  if (r.system == "boolean") {
    return true;
  }
  if (r.system == "arrangement") {
    return false;
  }
  throw UsageError("--system must be boolean or arrangement");
}

inline WeylType type_of(Family f, unsigned n) {
  return is_classical(f) ? WeylType::on_coordinates(f, n)
                         : WeylType::exceptional(f);
}

inline SubspaceSystem system_of(Request const& r, Family f) {
  require_n(r, f);
  WeylType const t = type_of(f, r.n);
  if (is_boolean(r)) {
    if (!is_classical(f)) {
      throw UsageError("Boolean systems exist for A, B and D only");
    }
    return boolean_system(t);
  }
  if (!is_classical(f) && f != Family::G2) {
    throw UsageError("no explicit arrangement for " + r.family);
  }
  return arrangement_system(t, r.closure_cap);
}

inline void echo(Request const& r, Report& out) {
  out.request.emplace_back("command", r.command);
  if (!r.family.empty()) {
    out.request.emplace_back("family", r.family);
  }
  if (r.n != 0) {
    out.request.emplace_back("n", std::to_string(r.n));
  }
  if (!r.model.empty()) {
    out.request.emplace_back("model", r.model);
  }
  if (!r.orbit_data.empty()) {
    out.request.emplace_back("orbit_data", r.orbit_data);
  } else if (r.command != "mu" || r.model.empty()) {
    out.request.emplace_back("system", r.system);
  }
  if (r.command == "order") {
    out.request.emplace_back("method", r.method);
  }
}

inline Report cmd_order(Request const& r) {
  Report out;
  echo(r, out);
  Family const f = family_of(r);
  require_n(r, f);
  bool const boolean = is_boolean(r);
  if (r.method != "formula" && r.method != "enumerate" && r.method != "both") {
    throw UsageError("--method must be formula, enumerate or both");
  }
  bool const exceptional = !is_classical(f);
  if (exceptional && boolean) {
    throw UsageError("exceptional families take --system arrangement");
  }
  if (exceptional && f != Family::G2 && r.method != "formula") {
    throw UsageError("only the formula is available for " + r.family);
  }

  std::optional<BigInt> formula, enumerated;
  if (r.method != "enumerate") {
    if (exceptional) {
      formula = exceptional_order(f);
    } else if (boolean) {
      formula = boolean_order(f, r.n);
      if (f == Family::D) {
        Rational const printed(boolean_order_table(f, r.n));
        out.discrepancies.push_back({"D Boolean table", str(printed),
                                     str(*formula),
                                     printed == Rational(*formula)});
      }
    } else if (f == Family::A) {
      formula = arrangement_order_A(r.n);
    } else {
      formula = arrangement_order_oracle(f, r.n);
      Rational const printed = f == Family::B
                                   ? arrangement_order_B_printed(r.n)
                                   : arrangement_order_D_printed(r.n);
      out.discrepancies.push_back(
          {std::string(f == Family::B ? "B" : "D") + " arrangement printed",
           str(printed), str(*formula), printed == Rational(*formula)});
    }
    out.add("formula", str(*formula));
  }
  if (r.method != "formula") {
    auto const m = ReflectionMonoid::build(system_of(r, f), r.max_order);
    enumerated   = BigInt(m.size());
    out.add("enumerated", str(*enumerated));
  }
  if (formula && enumerated) {
    out.add("verdict", *formula == *enumerated ? "match" : "mismatch");
  }
  return out;
}

inline Report cmd_green(Request const& r) {
  Report out;
  echo(r, out);
  Family const f = family_of(r);
  auto const   m = ReflectionMonoid::build(system_of(r, f), r.max_order);
  auto const   g = green_relations(m);
  out.add("order", std::to_string(m.size()));
  out.add("R-classes", std::to_string(g.classes.num_r));
  out.add("L-classes", std::to_string(g.classes.num_l));
  out.add("H-classes", std::to_string(g.classes.num_h));
  out.add("D-classes", std::to_string(g.classes.num_d));
  out.add("J-classes", std::to_string(g.classes.num_j));
  out.add("generic check", g.matches_generic ? "agree" : "disagree");
  return out;
}

template <IndexedMonoid M, class Show>
void report_mu(M const& m, Show show, Report& out) {
  auto const mu = mu_congruence(m);
  out.add("order", std::to_string(m.size()));
  out.add("mu-classes", std::to_string(mu.num_classes));
  out.add("fundamental", mu.fundamental ? "yes" : "no");
  if (mu.fundamental) {
    return;
  }
  Index const one = m.identity();
  std::string with_one;
  for (Index a = 0; a < m.size(); ++a) {
    if (a != one && mu.cls[a] == mu.cls[one]) {
      with_one += (with_one.empty() ? "" : " ") + show(a);
    }
  }
  if (!with_one.empty()) {
    out.add("mu-related to identity", with_one);
  } else if (mu.witness) {
    out.add("witness", show(mu.witness->first) + " ~ "
                           + show(mu.witness->second));
  }
}

inline Report cmd_mu(Request const& r) {
  Report out;
  echo(r, out);
  if (r.model == "In" || r.model == "Jn") {
    if (r.n == 0 || r.n > 4) {
      throw UsageError("--n must be between 1 and 4 for " + r.model);
    }
    if (r.model == "In") {
      EnumeratedMonoid<PartialMap> m(all_partial_maps(r.n),
                                     PartialMap::identity(r.n));
      report_mu(m, [&](Index a) { return m.element(a).to_string(); }, out);
    } else {
      EnumeratedMonoid<SignedPartialMap> m(all_signed_partial_maps(r.n),
                                           SignedPartialMap::identity(r.n));
      report_mu(m, [&](Index a) { return m.element(a).to_string(); }, out);
    }
    return out;
  }
  if (!r.model.empty() && r.model != "hexagon") {
    throw UsageError("--model must be In, Jn or hexagon");
  }
  auto const m = r.model == "hexagon"
                     ? ReflectionMonoid::build(hexagon_system(), r.max_order)
                     : ReflectionMonoid::build(system_of(r, family_of(r)),
                                               r.max_order);
  report_mu(m, [&](Index a) { return m.to_string(a); }, out);
  return out;
}

inline Report cmd_table(Request const& r) {
  Report out;
  echo(r, out);
  if (!r.orbit_data.empty()) {
    Family f;
    try {
      f = parse_family(r.orbit_data);
    } catch (Error const&) {
      throw UsageError("unknown type '" + r.orbit_data + "'");
    }
    if (is_classical(f)) {
      throw UsageError("orbit data is stored for G2, F4, E6, E7 and E8");
    }
    out.add("row", orbit_data_row(f));
    auto const rows = parse_orbit_data(orbit_data_row(f));
    BigInt const w  = weyl_order(WeylType::exceptional(f));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::string line;
      for (auto const& d : rows[k]) {
        line += (line.empty() ? "" : " ") + d.count.str() + "x|W_X|="
                + d.stabilizer_order().str();
      }
      out.add("rank " + std::to_string(k), line);
    }
    out.add("rank counts", join(orbit_data_rank_counts(f)));
    out.add("order", str(exceptional_order(f)));
    return out;
  }
  Family const f = family_of(r);
  auto const   s = system_of(r, f);
  bool const   want_ranks = r.ranks || !r.orbits;
  if (want_ranks) {
    std::vector<BigInt> counts;
    for (auto c : s.rank_counts()) {
      counts.push_back(BigInt(c));
    }
    out.add("rank counts", join(counts));
    if (!is_boolean(r) && is_classical(f)) {
      std::vector<BigInt> predicted;
      for (unsigned k = 0; k < counts.size(); ++k) {
        predicted.push_back(stirling_rank_count(f, r.n, k));
      }
      out.add("closed form", join(predicted));
      out.add("verdict", predicted == counts ? "match" : "mismatch");
    }
  }
  if (r.orbits) {
    for (auto const& o : orbit_decomposition(s)) {
      std::string v = "size " + std::to_string(o.members.size())
                      + ", |W_X| " + std::to_string(o.isotropy);
      if (o.predicted_size) {
        v += ", predicted " + o.predicted_size->str();
      }
      out.add(o.label, v);
    }
  }
  return out;
}

inline Report run(Request const& r) {
  if (r.command == "order") {
    return cmd_order(r);
  }
  if (r.command == "green") {
    return cmd_green(r);
  }
  if (r.command == "mu") {
    return cmd_mu(r);
  }
  if (r.command == "table") {
    return cmd_table(r);
  }
  throw UsageError("unknown command '" + r.command + "'");
}

inline int exit_code(Error const& e) {
  switch (e.kind()) {
    case ErrorKind::cap_exceeded: return cap;
    case ErrorKind::unsupported:
    case ErrorKind::invalid_argument:
    case ErrorKind::parse_error: return usage;
    default: return failure;
  }
}

}  // namespace refmon::cli
