// Knot-record ingestion (a small line-oriented block format), the built-in
// table of the 23 genus-one knots with at most 12 crossings, batch
// analysis, and text/JSON report rendering.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "g1cc/obstruct.hpp"

namespace g1cc {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Block format, one record per block:
//   knot <name>
//     seifert <dim> <dim*dim integers row-major>
//       | pretzel <p> <q> <r> | whitehead <+|-> <n> | det <nonneg integer>
//     det <nonneg integer>     (with a matrix/family source: declared value,
//                               cross-checked against the computed one)
//     flag two_bridge | flag fibered       (optional, repeatable)
//     note <free text to end of line>      (optional)
//   end
// Lines starting with '#' are comments. Throws ParseError with a line
// number on malformed input.
std::vector<KnotRecord> parse_catalog(std::istream& in);

// The 23 genus-one knots with at most 12 crossings and their determinants.
// 6_1 and 10_3 carry the two_bridge flag; 9_46 and 11n139 carry pretzel
// sources P(3,3,-3) and P(-5,3,-3).
std::vector<KnotRecord> builtin_table1();

struct RecordError {
    std::string knot;
    std::string message;
};

struct AnalysisResult {
    std::vector<ObstructionReport> reports;  // successfully analyzed, input order
    std::vector<RecordError> errors;         // per-record failures, input order
};

// combined_verdict per record; per-record errors are collected instead of
// aborting the batch.
AnalysisResult analyze(const std::vector<KnotRecord>& records);

enum class RenderFormat { Text, Json };

// Text: aligned summary table plus per-knot detail. Json: stable
// machine-readable structure; identical input yields byte-identical output.
std::string render(const AnalysisResult& result, RenderFormat format);

}  // namespace g1cc
