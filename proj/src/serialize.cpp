#include "bilat/serialize.hpp"

namespace bilat {

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

std::string classify_report_to_text(const GroundProgram<four::Value>& g,
                                    const ClassifyReport& report) {
  const AtomTable& atoms = *g.atoms;
  std::vector<std::vector<std::string>> rows;

  std::vector<std::string> header{""};
  for (const auto& name : atoms.names()) header.push_back(name);
  for (const auto& name : atoms.names()) header.push_back("Sp:" + name);
  if (g.classical) header.push_back("U");
  for (const char* flag : {"mod", "cl", "sup", "dc", "stable", "KK", "WF"})
    header.push_back(flag);
  rows.push_back(std::move(header));

  auto mark = [](bool b) { return std::string(b ? "*" : "."); };
  for (size_t r = 0; r < report.rows.size(); ++r) {
    const auto& mc = report.rows[r];
    std::vector<std::string> row{"I" + std::to_string(r + 1)};
    for (size_t a = 0; a < atoms.size(); ++a)
      row.push_back(value_to_string(mc.interpretation[a]));
    for (size_t a = 0; a < atoms.size(); ++a)
      row.push_back(value_to_string(mc.support[a]));
    if (g.classical)
      row.push_back(detail::unfounded_to_string(mc.unfounded.value_or(std::vector<size_t>{}),
                                                atoms));
    row.push_back(mark(mc.flags.is_model));
    row.push_back(mark(mc.flags.is_cl_model));
    row.push_back(mark(mc.flags.is_supported));
    row.push_back(mark(mc.flags.is_deductively_closed));
    row.push_back(mark(mc.flags.is_stable));
    row.push_back(mark(mc.flags.is_kk));
    row.push_back(mark(mc.flags.is_wf));
    rows.push_back(std::move(row));
  }

  std::string out = "kind: four\n";
  out += "hash: " + detail::hash_hex(program_hash(g)) + "\n";
  out += align_columns(rows);
  out += "kk:";
  for (size_t a = 0; a < report.kk.size(); ++a)
    out += " " + atoms.name(a) + "=" + value_to_string(report.kk[a]);
  out += "\nwf:";
  for (size_t a = 0; a < report.wf.size(); ++a)
    out += " " + atoms.name(a) + "=" + value_to_string(report.wf[a]);
  out += "\nstable:";
  for (const auto& i : report.stable) {
    out += " (";
    for (size_t a = 0; a < i.size(); ++a) {
      if (a) out += ",";
      out += value_to_string(i[a]);
    }
    out += ")";
  }
  out += "\n";
  return out;
}

}  // namespace bilat
