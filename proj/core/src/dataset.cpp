#include "qid/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "qid/error.hpp"
#include "unicode.hpp"

namespace qid {

namespace {

Label parse_label(const std::string& text, std::size_t line) {
  if (text == "0") return 0;
  if (text == "1") return 1;
  throw Error(ErrorCode::InvalidLabel, "line " + std::to_string(line) + ": label must be 0 or 1, got '" + text + "'");
}

void check_example(const LabeledExample& ex, std::size_t line, std::unordered_set<std::string>& seen) {
  if (ex.id.empty()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": empty id");
  }
  if (!unicode::is_valid_utf8(ex.text)) {
    throw Error(ErrorCode::EncodingError, "line " + std::to_string(line) + ": text is not valid UTF-8");
  }
  if (!seen.insert(ex.id).second) {
    throw Error(ErrorCode::DuplicateId, "line " + std::to_string(line) + ": duplicate id '" + ex.id + "'");
  }
}

}  // namespace

Dataset read_jsonl(std::istream& in) {
  Dataset ds;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected a JSON object");
    }
    LabeledExample ex;
    try {
      const auto& id = j.at("id");
      ex.id = id.is_string() ? id.get<std::string>() : id.dump();
      ex.text = j.at("text").get<std::string>();
      const auto& label = j.at("label");
      if (!label.is_number_integer()) {
        throw Error(ErrorCode::InvalidLabel, "line " + std::to_string(line_no) + ": label must be 0 or 1");
      }
      ex.label = parse_label(std::to_string(label.get<long long>()), line_no);
      if (j.contains("sector") && !j["sector"].is_null()) ex.sector = j["sector"].get<std::string>();
      if (j.contains("source") && !j["source"].is_null()) ex.source = j["source"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
    check_example(ex, line_no, seen);
    ds.push_back(std::move(ex));
  }
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "read error");
  }
  return ds;
}

namespace {

// Reads one RFC 4180 record; quoted fields may span lines. Returns false at
// end of input. `line` tracks physical lines for messages.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) {
    return false;
  }
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  const std::size_t start_line = line + 1;
  for (;;) {
    const int ch = in.get();
    if (ch == std::char_traits<char>::eof()) {
      if (quoted) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(start_line) + ": unterminated quoted field");
      }
      fields.push_back(std::move(field));
      ++line;
      return true;
    }
    const char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_was_quoted) {
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (c == '\r' && in.peek() == '\n') {
      // CRLF; the '\n' ends the record on the next iteration
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      ++line;
      return true;
    } else {
      field += c;
    }
  }
}

}  // namespace

Dataset read_csv(std::istream& in) {
  std::vector<std::string> header;
  std::size_t line = 0;
  if (!read_csv_record(in, header, line)) {
    return {};
  }
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) {
    header[0].erase(0, 3);
  }
  auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  const auto id_col = column("id");
  const auto text_col = column("text");
  const auto label_col = column("label");
  if (!id_col || !text_col || !label_col) {
    throw Error(ErrorCode::ParseError, "CSV header must name id, text and label columns");
  }
  const auto sector_col = column("sector");
  const auto source_col = column("source");

  Dataset ds;
  std::unordered_set<std::string> seen;
  std::vector<std::string> fields;
  while (read_csv_record(in, fields, line)) {
    if (fields.size() == 1 && fields[0].empty()) {
      continue;  // blank line
    }
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected " +
                                             std::to_string(header.size()) + " fields, got " +
                                             std::to_string(fields.size()));
    }
    LabeledExample ex;
    ex.id = fields[*id_col];
    ex.text = fields[*text_col];
    ex.label = parse_label(fields[*label_col], line);
    if (sector_col && !fields[*sector_col].empty()) ex.sector = fields[*sector_col];
    if (source_col && !fields[*source_col].empty()) ex.source = fields[*source_col];
    check_example(ex, line, seen);
    ds.push_back(std::move(ex));
  }
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot read dataset " + path.string());
  }
  return path.extension() == ".csv" ? read_csv(in) : read_jsonl(in);
}

void write_jsonl(const Dataset& dataset, std::ostream& out) {
  for (const LabeledExample& ex : dataset) {
    nlohmann::ordered_json j;
    j["id"] = ex.id;
    j["text"] = ex.text;
    j["label"] = ex.label;
    if (ex.sector) j["sector"] = *ex.sector;
    if (ex.source) j["source"] = *ex.source;
    out << j.dump() << '\n';
  }
}

}  // namespace qid
