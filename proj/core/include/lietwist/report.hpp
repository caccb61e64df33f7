#ifndef LIETWIST_REPORT_HPP
#define LIETWIST_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace lietwist {

/// One verified identity inside a section.
struct CheckLine {
  std::string label;
  bool pass = true;
  std::string detail;  // first discrepancy or extra context
};

/// A named group of checks run at one (K, D) budget. Sections marked `info`
/// never fail a run; they report findings (the antipode conjecture beyond
/// the paper's checked range).
struct CheckSection {
  std::string name;
  int order = 0;        // report order K
  int test_degree = 0;  // ideal-oracle degree D (0 when unused)
  bool info_only = false;
  std::vector<CheckLine> lines;
  std::map<std::string, std::string> payload;  // canonical series strings

  bool passed() const;
  void add(const std::string& label, bool pass, const std::string& detail = "");
};

struct Report {
  std::string algebra;
  int order = 0;
  int test_degree = 0;
  unsigned long seed = 0;
  std::vector<CheckSection> sections;

  bool all_passed() const;
  /// Name of the first failing section, empty when everything passed.
  std::string first_failure() const;

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace lietwist

#endif  // LIETWIST_REPORT_HPP
