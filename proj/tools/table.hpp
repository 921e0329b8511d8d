// Tabular output shared by all subcommands: one JSON document, TSV, or
// aligned text.
#pragma once

#include <deque>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace cli {

using json = nlohmann::ordered_json;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

struct Document {
  std::string command;
  int n = 0;
  std::string regime;
  std::deque<Table> tables;  // references from table() stay valid
  json extra = json::object();  // merged into the JSON document only
  std::vector<std::string> notes;

  Table& table(std::string name, std::vector<std::string> columns);
};

enum class Format { Json, Tsv, Pretty };

std::string cell_text(const json& v);
void render(const Document& doc, Format f, std::ostream& out);

}  // namespace cli
