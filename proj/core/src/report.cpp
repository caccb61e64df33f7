#include "lietwist/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace lietwist {

bool CheckSection::passed() const {
  if (info_only) return true;
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

void CheckSection::add(const std::string& label, bool pass, const std::string& detail) {
  lines.push_back(CheckLine{label, pass, detail});
}

bool Report::all_passed() const {
  for (const auto& s : sections)
    if (!s.passed()) return false;
  return true;
}

std::string Report::first_failure() const {
  for (const auto& s : sections)
    if (!s.passed()) return s.name;
  return "";
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "algebra: " << algebra << "  K=" << order << "  D=" << test_degree << "  seed=" << seed
      << "\n";
  for (const auto& s : sections) {
    const char* status = s.info_only ? "INFO" : (s.passed() ? "PASS" : "FAIL");
    out << "[" << status << "] " << s.name << " (K=" << s.order;
    if (s.test_degree > 0) out << ", D=" << s.test_degree;
    out << ")\n";
    for (const auto& l : s.lines) {
      out << "    " << (l.pass ? "ok   " : "FAIL ") << l.label;
      if (!l.detail.empty()) out << "  -- " << l.detail;
      out << "\n";
    }
    for (const auto& [k, v] : s.payload) out << "    " << k << " = " << v << "\n";
  }
  out << (all_passed() ? "RESULT: PASS" : "RESULT: FAIL (" + first_failure() + ")") << "\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::json doc;
  doc["algebra"] = algebra;
  doc["order"] = order;
  doc["test_degree"] = test_degree;
  doc["seed"] = seed;
  doc["pass"] = all_passed();
  nlohmann::json sections_json = nlohmann::json::array();
  for (const auto& s : sections) {
    nlohmann::json sec;
    sec["name"] = s.name;
    sec["order"] = s.order;
    sec["test_degree"] = s.test_degree;
    sec["status"] = s.info_only ? "info" : (s.passed() ? "pass" : "fail");
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : s.lines) {
      nlohmann::json line;
      line["label"] = l.label;
      line["pass"] = l.pass;
      if (!l.detail.empty()) line["detail"] = l.detail;
      lines.push_back(line);
    }
    sec["checks"] = lines;
    if (!s.payload.empty()) {
      nlohmann::json payload;
      for (const auto& [k, v] : s.payload) payload[k] = v;
      sec["payload"] = payload;
    }
    sections_json.push_back(sec);
  }
  doc["sections"] = sections_json;
  return doc.dump(2) + "\n";
}

}  // namespace lietwist
