#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iostream>

namespace tagset::cli {

namespace {

const char* status_word(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::warn: return "WARN";
  }
  return "?";
}

} // namespace

int Report::exit_code() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.status == Status::fail; })
             ? 1
             : 0;
}

void render_text(const Report& report) {
  std::size_t width = 0;
  for (const auto& v : report.verdicts) width = std::max(width, v.name.size());
  for (const auto& v : report.verdicts) {
    std::cout << "  " << v.name << std::string(width - v.name.size(), ' ') << "  "
              << status_word(v.status);
    if (!v.detail.empty()) std::cout << "  " << v.detail;
    std::cout << "\n";
  }
}

void render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["files"] = report.files;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::ordered_json vj;
    vj["name"] = v.name;
    vj["status"] = status_word(v.status);
    vj["detail"] = v.detail;
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  j["exit_code"] = report.exit_code();
  std::cout << j.dump(2) << "\n";
}

} // namespace tagset::cli
