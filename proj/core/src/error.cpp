#include "spectral/error.hpp"

namespace spectral {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_convex: return "NotConvex";
    case ErrorCode::degenerate: return "Degenerate";
    case ErrorCode::not_symmetric: return "NotSymmetric";
    case ErrorCode::edge_through_origin: return "EdgeThroughOrigin";
    case ErrorCode::not_standard_position: return "NotStandardPosition";
    case ErrorCode::no_blowup: return "NoBlowup";
    case ErrorCode::no_zeros_found: return "NoZerosFound";
    case ErrorCode::insufficient_window: return "InsufficientWindow";
    case ErrorCode::covolume_mismatch: return "CovolumeMismatch";
    case ErrorCode::not_tileable: return "NotTileable";
    case ErrorCode::parallel_features: return "ParallelFeatures";
    case ErrorCode::too_few_vertices: return "TooFewVertices";
    case ErrorCode::missing_origin: return "MissingOrigin";
    case ErrorCode::duplicate_points: return "DuplicatePoints";
  }
  return "Unknown";
}

}  // namespace spectral
