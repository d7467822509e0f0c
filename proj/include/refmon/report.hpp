#ifndef REFMON_REPORT_HPP_
#define REFMON_REPORT_HPP_

#include <string>
#include <vector>

#include "refmon/lab.hpp"

namespace refmon {

  // 0 all Holds, 1 some Fails, 2 some Unknown and no Fails
  int exitCode(std::vector<Verdict> const& vs);
  int exitCode(std::vector<PropertyReport> const& rs);

  char const* verdictWord(Verdict v);  // "HOLDS", "FAILS", "UNKNOWN"

  // Timing goes into a single "timing" line; everything else is
  // deterministic.
  std::string reportsJson(std::vector<PropertyReport> const& rs, MonoidOracle const& o);
  std::string reportsText(std::vector<PropertyReport> const& rs, MonoidOracle const& o);

}  // namespace refmon

#endif  // REFMON_REPORT_HPP_
