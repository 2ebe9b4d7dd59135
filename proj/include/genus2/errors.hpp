#pragma once

#include <stdexcept>
#include <string>

namespace genus2 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// log of an element within tolerance of -I has no well-defined direction.
struct CenterAmbiguity : Error { using Error::Error; };
// A flow generator would be built from a central element.
struct DegenerateGenerator : Error { using Error::Error; };
// A moment image fell outside its polytope beyond tolerance.
struct OutsidePolytope : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct RelationViolated : Error { using Error::Error; };
struct SectionSolveFailure : Error { using Error::Error; };
struct FiberSolveFailure : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct ClassificationAmbiguity : Error { using Error::Error; };
// Malformed JSONL, CSV or config input.
struct ParseError : Error { using Error::Error; };

}  // namespace genus2
