#ifndef CATMOVES_ERRORS_HPP
#define CATMOVES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catmoves {

enum class ErrorCode {
  DuplicateLabel,
  LabelOutOfRange,
  CrossingPair,
  ReversedPair,
  ShapeNotTwoRow,
  BadShape,
  DuplicateEntry,
  RowNotIncreasing,
  ColumnNotIncreasing,
  NotAdjacent,
  NotEdgesOfTree,
  IndexOutOfRange,
  RankOutOfRange,
  ShapeTooLarge,
  SizeExceedsCap,
  WrongGraphKind,
  ShapeMismatch,
  VertexOutOfRange,
  IoFailure,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// The single exception type thrown by the library. Carries a machine
/// checkable code next to the human readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catmoves

#endif  // CATMOVES_ERRORS_HPP
