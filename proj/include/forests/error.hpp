// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_ERROR_HPP_
#define FORESTS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace forests {

enum class ErrorCode {
    LoopArc,
    NonpositiveWeight,
    VertexOutOfRange,
    TooFewVertices,
    BasisCountOverflow,
    DegenerateTriple,
    NumericalBreakdown,
    IndexBeyondMaxForest,
    ZeroSigma,
    AlphaOutOfBounds,
    UndefinedBound,
    EnumerationCapExceeded,
    NotASourceKnot,
    NotStronglyConnected,
    AlphaTooLarge,
    WeightAboveOne,
    GraphTooLargeForConvexity,
    ParseError,
    DuplicateHeader,
    MissingHeader,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace forests

#endif  // FORESTS_ERROR_HPP_
