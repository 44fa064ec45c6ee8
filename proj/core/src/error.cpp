#include "qid/error.hpp"

namespace qid {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::EncodingError: return "EncodingError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PolarityConflict: return "PolarityConflict";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::NegativeFeature: return "NegativeFeature";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::CorruptModel: return "CorruptModel";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "UnknownError";
}

}  // namespace qid
