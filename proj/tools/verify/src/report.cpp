#include "premetric/verify/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace premetric::verify {

bool Report::all_passed() const { return failed() == 0; }

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; }));
}

void Report::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

std::string Report::to_text() const {
  std::string out = "premetric " + command + "\n";
  for (const auto& c : checks) {
    out += (c.status == Status::Pass ? "PASS  " : "FAIL  ") + c.id + "  [" + c.equation + "]\n";
    if (c.status == Status::Fail) out += "      witness: " + c.witness + "\n";
  }
  for (const auto& [name, value] : artifacts) out += name + " = " + value + "\n";
  out += "summary: " + std::to_string(checks.size() - failed()) + " passed, " + std::to_string(failed()) +
         " failed\n";
  return out;
}

std::string Report::to_structured() const {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["suite"] = c.suite;
    j["equation"] = c.equation;
    j["status"] = c.status == Status::Pass ? "PASS" : "FAIL";
    j["witness"] = c.status == Status::Pass ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.witness);
    arr.push_back(std::move(j));
  }
  doc["checks"] = std::move(arr);
  nlohmann::ordered_json art = nlohmann::ordered_json::object();
  for (const auto& [name, value] : artifacts) art[name] = value;
  doc["artifacts"] = std::move(art);
  doc["summary"] = {{"passed", checks.size() - failed()}, {"failed", failed()}, {"all_passed", all_passed()}};
  return doc.dump(2) + "\n";
}

}  // namespace premetric::verify
