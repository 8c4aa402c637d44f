#include "catmoves/errors.hpp"

namespace catmoves {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::CrossingPair: return "CrossingPair";
    case ErrorCode::ReversedPair: return "ReversedPair";
    case ErrorCode::ShapeNotTwoRow: return "ShapeNotTwoRow";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::RowNotIncreasing: return "RowNotIncreasing";
    case ErrorCode::ColumnNotIncreasing: return "ColumnNotIncreasing";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotEdgesOfTree: return "NotEdgesOfTree";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::ShapeTooLarge: return "ShapeTooLarge";
    case ErrorCode::SizeExceedsCap: return "SizeExceedsCap";
    case ErrorCode::WrongGraphKind: return "WrongGraphKind";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace catmoves
