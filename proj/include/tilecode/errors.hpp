#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tilecode {

/// Base class for all domain errors. `kind()` is a stable kebab-case tag
/// used by the CLI to emit machine-readable "error: <kind> ..." lines.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& detail) : Error("parse", "parse: " + detail) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& detail)
        : Error("dimension-mismatch", "dimension-mismatch: " + detail) {}
};

/// {prev, next} is not an adjacent pair on the tile's slot cycle.
struct NoLift : Error {
    explicit NoLift(const std::string& detail) : Error("no-lift", "no-lift: " + detail) {}
};

struct NotAdjacent : Error {
    explicit NotAdjacent(const std::string& detail)
        : Error("not-adjacent", "not-adjacent: " + detail) {}
};

/// No lift class of the flat tile has a constant height vector.
struct NoSurfaceTile : Error {
    explicit NoSurfaceTile(const std::string& detail)
        : Error("no-surface-tile", "no-surface-tile: " + detail) {}
};

/// More than one lift class has a constant height vector.
struct AmbiguousSurface : Error {
    explicit AmbiguousSurface(const std::string& detail)
        : Error("ambiguous-surface", "ambiguous-surface: " + detail) {}
};

/// The flow cannot continue past the given tile (1-based index).
struct TrajectoryBreak : Error {
    explicit TrajectoryBreak(std::size_t tile)
        : Error("trajectory-break", "trajectory-break at tile " + std::to_string(tile)),
          tile_index(tile) {}

    std::size_t tile_index;
};

struct OverlapMismatch : Error {
    explicit OverlapMismatch(std::size_t tile)
        : Error("overlap-mismatch", "overlap-mismatch at tile " + std::to_string(tile)),
          tile_index(tile) {}

    std::size_t tile_index;
};

struct PatchConflict : Error {
    explicit PatchConflict(std::size_t tile)
        : Error("patch-conflict", "patch-conflict at tile " + std::to_string(tile)),
          tile_index(tile) {}

    std::size_t tile_index;
};

struct LengthNotMultipleOfThree : Error {
    explicit LengthNotMultipleOfThree(std::size_t length)
        : Error("length-not-multiple-of-three",
                "length-not-multiple-of-three: code has " + std::to_string(length) + " letters") {}
};

} // namespace tilecode
