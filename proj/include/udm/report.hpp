#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace udm {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

struct Section {
  std::string name;
  std::string anchor;  // where the checked statement lives
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReportDocument {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<Section> sections;

  bool pass() const {
    for (const auto& s : sections)
      if (!s.pass) return false;
    return true;
  }
  void add(Section s) { sections.push_back(std::move(s)); }
  void add(std::vector<Section> ss) {
    for (auto& s : ss) sections.push_back(std::move(s));
  }
};

inline ReportDocument make_report(int p, int field_degree, unsigned long long seed) {
  ReportDocument r;
  r.meta["schema"] = kReportSchemaVersion;
  r.meta["version"] = kLibraryVersion;
  r.meta["p"] = p;
  r.meta["field_degree"] = field_degree;
  r.meta["seed"] = seed;
  r.meta["conventions"] = "covariant; F x = A_F sigma(x), V x = A_V sigma^-1(x); lex-first field modulus";
  return r;
}

inline std::string to_json(const ReportDocument& r) {
  nlohmann::ordered_json j;
  j["meta"] = r.meta;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : r.sections)
    j["sections"].push_back({{"name", s.name}, {"anchor", s.anchor}, {"expected", s.expected}, {"actual", s.actual}, {"pass", s.pass}});
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string to_csv(const ReportDocument& r) {
  std::ostringstream os;
  os << "name,anchor,expected,actual,pass\n";
  for (const auto& s : r.sections)
    os << detail::csv_field(s.name) << ',' << detail::csv_field(s.anchor) << ',' << detail::csv_field(s.expected) << ','
       << detail::csv_field(s.actual) << ',' << (s.pass ? "true" : "false") << '\n';
  return os.str();
}

inline std::string to_text(const ReportDocument& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.meta.items()) os << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  for (const auto& s : r.sections) {
    os << (s.pass ? "PASS " : "FAIL ") << s.name << "  [" << s.anchor << "]\n";
    os << "     expected: " << s.expected << "\n     actual:   " << s.actual << '\n';
  }
  os << (r.pass() ? "overall: PASS" : "overall: FAIL") << '\n';
  return os.str();
}

}  // namespace udm
