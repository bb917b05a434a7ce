#pragma once

#include <stdexcept>
#include <string>

namespace rpconf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdenticalInputs : Error { using Error::Error; };
struct DegenerateConic : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct PointNotOnConic : Error { using Error::Error; };
struct CoincidentWithCenter : Error { using Error::Error; };
struct SharedDirection : Error { using Error::Error; };
struct BasePointInput : Error { using Error::Error; };
struct CollinearBase : Error { using Error::Error; };
struct ChartThroughPoint : Error { using Error::Error; };
struct UnexpectedRank : Error { using Error::Error; };
struct NotInPencil : Error { using Error::Error; };
struct Cusp : Error { using Error::Error; };
struct PointOffCubic : Error { using Error::Error; };
struct UnknownClass : Error { using Error::Error; };
struct UnknownZone : Error { using Error::Error; };
struct MultipleDegeneracies : Error { using Error::Error; };
struct NonRealizableDiagram : Error { using Error::Error; };
struct PathBlocked : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct GoldenMismatch : Error { using Error::Error; };

}  // namespace rpconf
