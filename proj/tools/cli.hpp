#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affvir::cli {

struct Record {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string got;
};

struct Report {
  enum class Status { Pass, Fail, Error };
  std::string verb;
  Status status = Status::Pass;
  /// Human-readable answer, one entry per output line.
  std::vector<std::string> lines;
  /// Individual checks; fail and error reports carry at least one.
  std::vector<Record> records;
};

std::string to_string(Report::Status s);
int exit_code(Report::Status s);

/// Text: the answer lines on `out`, failing records indented on `err`.
/// JSON Lines: one {"record": ...} object per record, then one
/// {"verb", "status", "lines"} summary object.
void write_report(const Report& report, bool json, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches, writes the report and returns the exit code:
/// 0 pass, 1 fail, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affvir::cli
