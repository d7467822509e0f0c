#ifndef REFMON_DECISION_HPP_
#define REFMON_DECISION_HPP_

#include <cstdint>
#include <string>
#include <utility>

namespace refmon {

  enum class Verdict { holds, fails, unknown };

  inline char const* toString(Verdict v) {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      default:
        return "unknown";
    }
  }

  // Caps for every bounded search. All caps are >= 1 except maxDegree.
  struct SearchBound {
    std::uint64_t maxDegree      = 6;
    std::uint64_t maxClassSize   = 20000;
    std::uint64_t maxCoefficient = 5;

    void validate() const;

    friend bool operator==(SearchBound const&, SearchBound const&) = default;
  };

  std::string toString(SearchBound const& b);

  // A three-valued answer. Holds and Fails carry a witness that can be
  // re-checked independently; Unknown records the bound that was exhausted.
  template <typename W>
  struct Decision {
    Verdict     verdict = Verdict::unknown;
    W           witness{};
    SearchBound bound{};

    static Decision holds(W w, SearchBound b = {}) {
      return {Verdict::holds, std::move(w), b};
    }
    static Decision fails(W w, SearchBound b = {}) {
      return {Verdict::fails, std::move(w), b};
    }
    static Decision unknown(SearchBound b, W w = {}) {
      return {Verdict::unknown, std::move(w), b};
    }

    bool isHolds() const noexcept {
      return verdict == Verdict::holds;
    }
    bool isFails() const noexcept {
      return verdict == Verdict::fails;
    }
    bool isUnknown() const noexcept {
      return verdict == Verdict::unknown;
    }
  };

}  // namespace refmon

#endif  // REFMON_DECISION_HPP_
