#pragma once

#include <string>
#include <vector>

namespace tagset::cli {

enum class Status { pass, fail, warn };

struct Verdict {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

// One verdict line per check. Exit code 0 iff nothing failed; usage and
// parse errors never reach a report (they exit 2 upstream).
struct Report {
  std::string command;
  std::vector<std::string> files;
  std::vector<Verdict> verdicts;

  void add(std::string name, Status status, std::string detail) {
    verdicts.push_back({std::move(name), status, std::move(detail)});
  }
  void pass(std::string name, std::string detail) { add(std::move(name), Status::pass, std::move(detail)); }
  void fail(std::string name, std::string detail) { add(std::move(name), Status::fail, std::move(detail)); }

  int exit_code() const;
};

// Aligned text to stdout.
void render_text(const Report& report);

// A single JSON object to stdout, field-for-field the same verdicts.
void render_json(const Report& report);

} // namespace tagset::cli
