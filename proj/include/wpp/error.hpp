#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wpp {

enum class ErrorCode {
  NotPairwiseCoprime,
  DegenerateWeight,
  InvalidFraction,
  NotCoprime,
  RankMismatch,
  Unclassified,
  NotAdjacent,
  BadIndex,
  NotBlowdownable,
  MissingClasses,
  NotAtSignChange,
  ChopsOverlap,
  NotDelzantNeighborhood,
  NoMinusOneEdge,
  LemmaViolated,
  NoSignChange,
  Precondition,
};

std::string_view to_string(ErrorCode code);

/// Every library failure carries one of the codes above so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

  /// True for violations of proven invariants: these signal bugs, not bad input.
  bool is_invariant_violation() const noexcept;

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace wpp
