#include "refmon/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace refmon {

  int exitCode(std::vector<Verdict> const& vs) {
    bool unknown = false;
    for (auto v : vs) {
      if (v == Verdict::fails) {
        return 1;
      }
      unknown = unknown || v == Verdict::unknown;
    }
    return unknown ? 2 : 0;
  }

  int exitCode(std::vector<PropertyReport> const& rs) {
    std::vector<Verdict> vs;
    for (auto const& r : rs) {
      vs.push_back(r.verdict);
    }
    return exitCode(vs);
  }

  char const* verdictWord(Verdict v) {
    switch (v) {
      case Verdict::holds:
        return "HOLDS";
      case Verdict::fails:
        return "FAILS";
      default:
        return "UNKNOWN";
    }
  }

  namespace {

    nlohmann::ordered_json boundJson(SearchBound const& b) {
      return {{"max_degree", b.maxDegree},
              {"max_class_size", b.maxClassSize},
              {"max_coefficient", b.maxCoefficient}};
    }

    std::string timing(std::vector<PropertyReport> const& rs) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(1);
      for (std::size_t i = 0; i < rs.size(); ++i) {
        s << (i ? " " : "") << rs[i].property << "=" << rs[i].elapsedMs << "ms";
      }
      return s.str();
    }

  }  // namespace

  std::string reportsJson(std::vector<PropertyReport> const& rs, MonoidOracle const& o) {
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (auto const& r : rs) {
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (auto const& x : r.witnesses) {
        w.push_back(o.show(x));
      }
      nlohmann::ordered_json j{{"property", r.property},
                               {"monoid", r.monoid},
                               {"verdict", verdictWord(r.verdict)},
                               {"basis", toString(r.basis)},
                               {"witnesses", w},
                               {"detail", r.detail},
                               {"bound", boundJson(r.bound)},
                               {"checked", r.checked},
                               {"unknowns", r.unknowns}};
      if (r.multiplier != 0) {
        j["multiplier"] = r.multiplier;
      }
      reports.push_back(std::move(j));
    }
    nlohmann::ordered_json doc{{"schema", "refmon-report/1"},
                               {"monoid", o.name()},
                               {"exit_code", exitCode(rs)},
                               {"reports", reports}};
    // timing on its own line, first
    auto body = doc.dump(2);
    nlohmann::json t = timing(rs);
    return "{\n  \"timing\": " + t.dump() + "," + body.substr(1) + "\n";
  }

  std::string reportsText(std::vector<PropertyReport> const& rs, MonoidOracle const& o) {
    std::ostringstream s;
    s << "timing: " << timing(rs) << "\n";
    for (auto const& r : rs) {
      s << r.monoid << " " << r.property << ": " << verdictWord(r.verdict) << " ("
        << toString(r.basis) << ") at " << toString(r.bound) << "\n";
      if (!r.witnesses.empty()) {
        s << "  witnesses:";
        for (auto const& w : r.witnesses) {
          s << " [" << o.show(w) << "]";
        }
        s << "\n";
      }
      if (!r.detail.empty()) {
        s << "  " << r.detail << "\n";
      }
      s << "  checked " << r.checked << ", undecided " << r.unknowns << "\n";
    }
    return s.str();
  }

}  // namespace refmon
