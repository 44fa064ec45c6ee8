#include "report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

namespace qid::cli {

namespace {

using nlohmann::ordered_json;

std::string fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

ordered_json report_json(const EvalReport& r) {
  ordered_json j;
  j["tp"] = r.confusion.tp;
  j["fp"] = r.confusion.fp;
  j["fn"] = r.confusion.fn;
  j["tn"] = r.confusion.tn;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["macro_precision"] = r.macro_precision;
  j["macro_recall"] = r.macro_recall;
  j["macro_f1"] = r.macro_f1;
  return j;
}

ordered_json cell_json(const AblationCell& cell) {
  if (cell.ok()) {
    return report_json(*cell.report);
  }
  return ordered_json{{"error", cell.error}};
}

}  // namespace

void print_report(const EvalReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << report_json(r).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << "tp,fp,fn,tn,precision,recall,f1,macro_precision,macro_recall,macro_f1\n";
      out << r.confusion.tp << ',' << r.confusion.fp << ',' << r.confusion.fn << ',' << r.confusion.tn << ','
          << fixed(r.precision) << ',' << fixed(r.recall) << ',' << fixed(r.f1) << ','
          << fixed(r.macro_precision) << ',' << fixed(r.macro_recall) << ',' << fixed(r.macro_f1) << '\n';
      break;
    case OutputFormat::Text:
      out << "examples         " << r.confusion.total() << '\n'
          << "confusion        tp=" << r.confusion.tp << " fp=" << r.confusion.fp << " fn=" << r.confusion.fn
          << " tn=" << r.confusion.tn << '\n'
          << "precision        " << fixed(r.precision) << '\n'
          << "recall           " << fixed(r.recall) << '\n'
          << "f1               " << fixed(r.f1) << '\n'
          << "macro precision  " << fixed(r.macro_precision) << '\n'
          << "macro recall     " << fixed(r.macro_recall) << '\n'
          << "macro f1         " << fixed(r.macro_f1) << '\n';
      break;
  }
}

void print_ablation(const AblationTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["seed"] = table.seed;
    j["train_size"] = table.train_size;
    j["test_size"] = table.test_size;
    j["rows"] = ordered_json::array();
    for (const AblationRow& row : table.rows) {
      j["rows"].push_back(ordered_json{{"classifier", std::string(to_string(row.kind))},
                                       {"before", cell_json(row.before)},
                                       {"after", cell_json(row.after)}});
    }
    out << j.dump() << '\n';
    return;
  }

  auto value = [&](const AblationCell& cell, double EvalReport::*metric) {
    return cell.ok() ? fixed((*cell.report).*metric) : std::string("ERR");
  };
  if (format == OutputFormat::Csv) {
    out << "classifier,P_before,P_after,R_before,R_after,F_before,F_after\n";
    for (const AblationRow& row : table.rows) {
      out << to_string(row.kind) << ',' << value(row.before, &EvalReport::precision) << ','
          << value(row.after, &EvalReport::precision) << ',' << value(row.before, &EvalReport::recall) << ','
          << value(row.after, &EvalReport::recall) << ',' << value(row.before, &EvalReport::f1) << ','
          << value(row.after, &EvalReport::f1) << '\n';
    }
    return;
  }

  char line[160];
  std::snprintf(line, sizeof line, "%-10s %9s %9s %9s %9s %9s %9s\n", "classifier", "P before", "P after",
                "R before", "R after", "F before", "F after");
  out << line;
  for (const AblationRow& row : table.rows) {
    std::snprintf(line, sizeof line, "%-10s %9s %9s %9s %9s %9s %9s\n", std::string(to_string(row.kind)).c_str(),
                  value(row.before, &EvalReport::precision).c_str(), value(row.after, &EvalReport::precision).c_str(),
                  value(row.before, &EvalReport::recall).c_str(), value(row.after, &EvalReport::recall).c_str(),
                  value(row.before, &EvalReport::f1).c_str(), value(row.after, &EvalReport::f1).c_str());
    out << line;
  }
  out << "train " << table.train_size << " / test " << table.test_size << ", seed " << table.seed << '\n';
  for (const AblationRow& row : table.rows) {
    if (!row.before.ok()) out << "  " << to_string(row.kind) << " before: " << row.before.error << '\n';
    if (!row.after.ok()) out << "  " << to_string(row.kind) << " after: " << row.after.error << '\n';
  }
}

}  // namespace qid::cli
