// doctest printers for library values
#ifndef REFMON_TESTS_SUPPORT_HPP_
#define REFMON_TESTS_SUPPORT_HPP_

#include "doctest.h"
#include "refmon/decision.hpp"
#include "refmon/wild.hpp"

namespace doctest {
  template <>
  struct StringMaker<refmon::MElem> {
    static String convert(refmon::MElem const& e) {
      return refmon::toString(e).c_str();
    }
  };
  template <>
  struct StringMaker<refmon::MBarElem> {
    static String convert(refmon::MBarElem const& e) {
      return refmon::toString(e).c_str();
    }
  };
  template <>
  struct StringMaker<refmon::Verdict> {
    static String convert(refmon::Verdict v) {
      return refmon::toString(v);
    }
  };
}  // namespace doctest

#endif
