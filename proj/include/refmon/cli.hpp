#ifndef REFMON_CLI_HPP_
#define REFMON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace refmon {

  // Exit codes: 0 Holds, 1 Fails, 2 Unknown, 3 usage or input error.
  int runCli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace refmon

#endif  // REFMON_CLI_HPP_
