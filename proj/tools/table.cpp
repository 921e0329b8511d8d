#include "table.hpp"

#include <algorithm>
#include <ostream>

namespace cli {

Table& Document::table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += "; ";
      s += cell_text(v[i]);
    }
    return s;
  }
  return v.dump();
}

namespace {

json as_json(const Document& doc) {
  json j;
  j["schema"] = "hecke-cli/1";
  j["command"] = doc.command;
  j["n"] = doc.n;
  j["regime"] = doc.regime;
  json tables = json::object();
  for (const auto& t : doc.tables) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) o[t.columns[c]] = r[c];
      rows.push_back(std::move(o));
    }
    tables[t.name] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  j["notes"] = doc.notes;
  for (const auto& [k, v] : doc.extra.items()) j[k] = v;
  return j;
}

void tsv(const Document& doc, std::ostream& out) {
  bool titled = doc.tables.size() > 1;
  for (const auto& t : doc.tables) {
    if (titled) out << "# " << t.name << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "\t" : "") << t.columns[c];
    out << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "\t" : "") << cell_text(r[c]);
      out << "\n";
    }
  }
}

void pretty(const Document& doc, std::ostream& out) {
  out << doc.command << "  n=" << doc.n << "  weights=" << doc.regime << "\n";
  for (const auto& t : doc.tables) {
    out << "\n" << t.name << "\n";
    std::vector<std::size_t> w(t.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = t.columns[c].size();
    for (const auto& r : t.rows) {
      auto& row = text.emplace_back();
      for (std::size_t c = 0; c < r.size(); ++c) {
        row.push_back(cell_text(r[c]));
        w[c] = std::max(w[c], row.back().size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(w[c] - cells[c].size() + 2, ' ');
      }
      out << "  " << s << "\n";
    };
    line(t.columns);
    for (const auto& r : text) line(r);
  }
  if (!doc.notes.empty()) out << "\n";
  for (const auto& n : doc.notes) out << "note: " << n << "\n";
}

}  // namespace

void render(const Document& doc, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json:
      out << as_json(doc).dump(2) << "\n";
      break;
    case Format::Tsv:
      tsv(doc, out);
      break;
    case Format::Pretty:
      pretty(doc, out);
      break;
  }
}

}  // namespace cli
