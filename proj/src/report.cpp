#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "nig/verify.hpp"

namespace nig {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format, bool include_timing) {
  const long wall = include_timing ? r.wall_ms : 0;
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::ordered_json j;
      j["task"] = r.task;
      j["theorem_or_bound"] = r.subject;
      j["graphs_examined"] = r.graphs_examined;
      j["equality_cases"] = r.equality_cases;
      j["violations"] = r.violations;
      j["mismatches"] = nlohmann::ordered_json::array();
      for (const auto& m : r.mismatches) {
        j["mismatches"].push_back(
            {{"graph6", m.graph6}, {"structural", m.structural}, {"computed", m.computed}});
      }
      j["pass"] = r.pass();
      j["wall_ms"] = wall;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) {
        j["checks"].push_back({{"check", c.name},
                               {"examined", c.examined},
                               {"equality_cases", c.equality_cases},
                               {"violations", c.violations}});
      }
      j["notes"] = r.notes;
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::ostringstream os;
      os << "task,theorem_or_bound,check,examined,equality_cases,violations,pass\n";
      for (const auto& c : r.checks) {
        os << csv_field(r.task) << ',' << csv_field(r.subject) << ',' << csv_field(c.name) << ','
           << c.examined << ',' << c.equality_cases << ',' << c.violations << ','
           << (c.violations == 0 ? "true" : "false") << '\n';
      }
      return os.str();
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      os << r.task << " [" << r.subject << "]: " << (r.pass() ? "PASS" : "FAIL") << '\n';
      os << "  graphs examined: " << r.graphs_examined << ", equality cases: " << r.equality_cases
         << ", violations: " << r.violations.size() << ", mismatches: " << r.mismatches.size()
         << ", wall: " << wall << " ms\n";
      for (const auto& c : r.checks) {
        os << "  check " << c.name << ": examined " << c.examined << ", equality "
           << c.equality_cases << ", violations " << c.violations << '\n';
      }
      for (const auto& v : r.violations) os << "  violation " << v << '\n';
      for (const auto& m : r.mismatches) {
        os << "  mismatch " << m.graph6 << " structural=" << m.structural
           << " computed=" << m.computed << '\n';
      }
      for (const auto& n : r.notes) os << "  note " << n << '\n';
      return os.str();
    }
  }
  throw std::invalid_argument("unknown report format");
}

}  // namespace nig
