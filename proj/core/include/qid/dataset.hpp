#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qid/classifiers.hpp"

namespace qid {

struct LabeledExample {
  std::string id;
  std::string text;
  Label label = 0;
  std::optional<std::string> sector;
  std::optional<std::string> source;

  bool operator==(const LabeledExample&) const = default;
};

using Dataset = std::vector<LabeledExample>;

/// JSON lines: {"id", "text", "label", "sector"?, "source"?} per line.
Dataset read_jsonl(std::istream& in);

/// RFC 4180 CSV with the header id,text,label[,sector][,source] (any order).
Dataset read_csv(std::istream& in);

/// Picks the reader from the extension: .csv -> CSV, anything else -> JSONL.
/// Throws Error{IoError} if unreadable, Error{ParseError} on malformed rows,
/// Error{InvalidLabel} / Error{DuplicateId} on contract violations.
Dataset load_dataset(const std::filesystem::path& path);

/// One compact JSON object per example, keys in id/text/label/sector/source order.
void write_jsonl(const Dataset& dataset, std::ostream& out);

}  // namespace qid
