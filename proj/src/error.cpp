// SPDX-License-Identifier: Apache-2.0
#include "forests/error.hpp"

namespace forests {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopArc: return "LoopArc";
        case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::BasisCountOverflow: return "BasisCountOverflow";
        case ErrorCode::DegenerateTriple: return "DegenerateTriple";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::IndexBeyondMaxForest: return "IndexBeyondMaxForest";
        case ErrorCode::ZeroSigma: return "ZeroSigma";
        case ErrorCode::AlphaOutOfBounds: return "AlphaOutOfBounds";
        case ErrorCode::UndefinedBound: return "UndefinedBound";
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::NotASourceKnot: return "NotASourceKnot";
        case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorCode::AlphaTooLarge: return "AlphaTooLarge";
        case ErrorCode::WeightAboveOne: return "WeightAboveOne";
        case ErrorCode::GraphTooLargeForConvexity: return "GraphTooLargeForConvexity";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicateHeader: return "DuplicateHeader";
        case ErrorCode::MissingHeader: return "MissingHeader";
    }
    return "UnknownError";
}

}  // namespace forests
