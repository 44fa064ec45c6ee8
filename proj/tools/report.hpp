#pragma once

#include <iosfwd>
#include <string_view>

#include "qid/eval.hpp"

namespace qid::cli {

enum class OutputFormat { Text, Json, Csv };

void print_report(const EvalReport& report, OutputFormat format, std::ostream& out);

// Classifiers as rows; P, R and F before / after as columns.
void print_ablation(const AblationTable& table, OutputFormat format, std::ostream& out);

}  // namespace qid::cli
