#pragma once

#include <sstream>

#include "json.hpp"

#include "bilat/semantics.hpp"

namespace bilat {

using Json = nlohmann::ordered_json;

template <BilatticeValue V>
std::string value_to_string(const V& v) {
  return to_string(v);  // ADL: four:: or interval::
}

template <BilatticeValue V>
std::optional<V> value_from_string(std::string_view s) {
  if constexpr (std::same_as<V, four::Value>) {
    return four::from_string(s);
  } else {
    return interval::from_string(s);
  }
}

// One "atom = value" line per base atom, in base order.
template <BilatticeValue V>
std::string interp_to_text(const Interpretation<V>& i) {
  std::string out;
  for (size_t a = 0; a < i.size(); ++a) {
    out += i.table()->name(a);
    out += " = ";
    out += value_to_string(i[a]);
    out += "\n";
  }
  return out;
}

template <BilatticeValue V>
Json interp_to_json(const Interpretation<V>& i) {
  Json j = Json::object();
  for (size_t a = 0; a < i.size(); ++a) j[i.table()->name(a)] = value_to_string(i[a]);
  return j;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Text ("atom = value" lines, '%' comments) or a JSON object keyed by atom.
// Omitted atoms default to bot, the information-free value.
template <BilatticeValue V>
Interpretation<V> parse_interpretation(std::string_view text,
                                       const std::shared_ptr<const AtomTable>& atoms) {
  Interpretation<V> out = Interpretation<V>::bottom_k(atoms);
  std::string_view rest = detail::trim(text);
  if (!rest.empty() && rest.front() == '{') {
    Json j = Json::parse(rest, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw parse_error("malformed JSON interpretation", 1, 1);
    for (auto& [key, val] : j.items()) {
      auto idx = atoms->find(key);
      if (!idx) throw parse_error("unknown atom '" + key + "'", 1, 1);
      if (!val.is_string())
        throw parse_error("value of '" + key + "' must be a string", 1, 1);
      auto v = value_from_string<V>(val.template get<std::string>());
      if (!v) throw parse_error("bad value for '" + key + "'", 1, 1);
      out[*idx] = *v;
    }
    return out;
  }

  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto pct = s.find('%'); pct != std::string_view::npos) s = s.substr(0, pct);
    s = detail::trim(s);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected 'atom = value'", lineno, 1);
    std::string name{detail::trim(s.substr(0, eq))};
    std::string_view vs = detail::trim(s.substr(eq + 1));
    auto idx = atoms->find(name);
    if (!idx) throw parse_error("unknown atom '" + name + "'", lineno, 1);
    auto v = value_from_string<V>(vs);
    if (!v) throw parse_error("bad value '" + std::string(vs) + "'", lineno, 1);
    if constexpr (std::same_as<V, interval::Value>) {
      if (!v->in_unit_range())
        throw parse_error("interval endpoint outside [0,1]", lineno, 1);
    }
    out[*idx] = *v;
  }
  return out;
}

// One block per step: "label[i]" header then the interpretation, a blank
// line between blocks. An optional indent nests inner sequences.
template <BilatticeValue V>
std::string trace_to_text(const FixpointTrace<V>& trace, std::string_view label,
                          std::string_view indent = "") {
  std::string out;
  for (size_t s = 0; s < trace.steps.size(); ++s) {
    if (s) out += "\n";
    out += indent;
    out += label;
    out += "[" + std::to_string(s) + "]\n";
    const Interpretation<V>& i = trace.steps[s];
    for (size_t a = 0; a < i.size(); ++a) {
      out += indent;
      out += i.table()->name(a);
      out += " = ";
      out += value_to_string(i[a]);
      out += "\n";
    }
  }
  return out;
}

template <BilatticeValue V>
Json trace_to_json(const FixpointTrace<V>& trace) {
  Json steps = Json::array();
  for (const auto& i : trace.steps) steps.push_back(interp_to_json(i));
  return steps;
}

// Outer W_j (or I_n) rows with the nested per-transition sequences.
template <BilatticeValue V>
std::string wf_run_to_text(const WellFoundedRun<V>& run, WfRoute route) {
  std::string outer_label = route == WfRoute::phi_prime ? "I" : "W";
  std::string out;
  for (size_t s = 0; s < run.outer.steps.size(); ++s) {
    if (s) out += "\n";
    out += outer_label + "[" + std::to_string(s) + "]\n";
    out += interp_to_text(run.outer.steps[s]);
    if (route == WfRoute::psi_prime && s < run.psi_steps.size()) {
      out += "\n";
      out += trace_to_text(run.psi_steps[s].trace, "v", "  ");
    }
    if (route == WfRoute::phi_prime && s < run.phi_steps.size()) {
      out += "\n";
      out += trace_to_text(run.phi_steps[s].support.trace, "h", "  ");
      out += "\n";
      out += trace_to_text(run.phi_steps[s].j_trace, "J", "  ");
    }
  }
  return out;
}

template <BilatticeValue V>
Json wf_run_to_json(const WellFoundedRun<V>& run, WfRoute route) {
  Json j = Json::object();
  j["outer"] = trace_to_json(run.outer);
  if (route == WfRoute::psi_prime) {
    Json inner = Json::array();
    for (const auto& step : run.psi_steps) inner.push_back(trace_to_json(step.trace));
    j["v"] = inner;
  }
  if (route == WfRoute::phi_prime) {
    Json hs = Json::array(), js = Json::array();
    for (const auto& step : run.phi_steps) {
      hs.push_back(trace_to_json(step.support.trace));
      js.push_back(trace_to_json(step.j_trace));
    }
    j["h"] = hs;
    j["J"] = js;
  }
  return j;
}

namespace detail {

inline std::string hash_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string unfounded_to_string(const std::vector<size_t>& u, const AtomTable& atoms) {
  std::string s = "{";
  for (size_t k = 0; k < u.size(); ++k) {
    if (k) s += ",";
    s += atoms.name(u[k]);
  }
  return s + "}";
}

}  // namespace detail

inline Json classify_report_to_json(const GroundProgram<four::Value>& g,
                                    const ClassifyReport& report) {
  Json j = Json::object();
  j["program_hash"] = detail::hash_hex(program_hash(g));
  j["kind"] = "four";
  j["atoms"] = g.atoms->names();
  Json rows = Json::array();
  for (const auto& mc : report.rows) {
    Json row = Json::object();
    row["values"] = interp_to_json(mc.interpretation);
    Json flags = Json::object();
    flags["model"] = mc.flags.is_model;
    flags["cl_model"] = mc.flags.is_cl_model;
    flags["supported"] = mc.flags.is_supported;
    flags["deductively_closed"] = mc.flags.is_deductively_closed;
    flags["stable"] = mc.flags.is_stable;
    flags["kk"] = mc.flags.is_kk;
    flags["wf"] = mc.flags.is_wf;
    row["flags"] = flags;
    row["support"] = interp_to_json(mc.support);
    if (mc.unfounded) {
      Json u = Json::array();
      for (size_t a : *mc.unfounded) u.push_back(g.atoms->name(a));
      row["unfounded"] = u;
    }
    rows.push_back(std::move(row));
  }
  j["classifications"] = rows;
  j["kk"] = interp_to_json(report.kk);
  j["wf"] = interp_to_json(report.wf);
  Json stable = Json::array();
  for (const auto& i : report.stable) {
    Json vals = Json::array();
    for (size_t a = 0; a < i.size(); ++a) vals.push_back(value_to_string(i[a]));
    stable.push_back(std::move(vals));
  }
  j["stable"] = stable;
  return j;
}

// Aligned per-interpretation classification table.
std::string classify_report_to_text(const GroundProgram<four::Value>& g,
                                    const ClassifyReport& report);

// Column-aligned rendering used by the classify table.
std::string align_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace bilat
