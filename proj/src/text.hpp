// Small line/token helpers shared by the file-format readers.

#ifndef REFMON_SRC_TEXT_HPP_
#define REFMON_SRC_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <string_view>
#include <vector>

namespace refmon::detail {

  inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

  inline std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t                   i = 0;
    while (i < s.size()) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      auto j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      if (j > i) {
        out.push_back(s.substr(i, j - i));
      }
      i = j;
    }
    return out;
  }

  // Calls f(lineNumber, line) for every non-blank line with comments removed.
  template <typename F>
  void forEachLine(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    std::size_t pos    = 0;
    while (pos <= text.size()) {
      auto nl   = text.find('\n', pos);
      auto line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (!line.empty()) {
        f(lineno, line);
      }
      if (nl == std::string_view::npos) {
        break;
      }
      pos = nl + 1;
    }
  }

}  // namespace refmon::detail

#endif  // REFMON_SRC_TEXT_HPP_
