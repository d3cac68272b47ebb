#pragma once

#include <stdexcept>
#include <string>

namespace cpn {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / parsing
struct ParseError : Error { using Error::Error; };
struct ZeroSeed : Error { using Error::Error; };
struct InvalidSeed : Error { using Error::Error; };

// Exact layer
struct IndexOutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct PrematureAnnihilation : Error { using Error::Error; };
struct DegenerateProjector : Error { using Error::Error; };
struct DimensionTooSmall : Error { using Error::Error; };

// Raised when a proven proposition fails on constructed data; indicates a bug.
struct PropositionViolated : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

// Numeric layer
struct PoleAtPoint : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct StencilOutOfGrid : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

} // namespace cpn
