#pragma once

#include <stdexcept>
#include <string>

#include "symladder/cell.hpp"

namespace symladder {

struct SymladderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string cell_str(Cell c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}
}  // namespace detail

// Ladder shape errors --------------------------------------------------------

struct EmptyLadder : SymladderError {
    EmptyLadder() : SymladderError("ladder has no cells") {}
};

struct OutOfRange : SymladderError {
    Cell cell;
    int n;
    OutOfRange(Cell c, int n_)
        : SymladderError("cell " + detail::cell_str(c) + " outside grid 1.." + std::to_string(n_)),
          cell(c),
          n(n_) {}
};

// Witness: cells a, b in the region with a.i < b.i and a.j > b.j whose
// completion cell `missing` = (a.i, b.j) is absent.
struct ClosureViolation : SymladderError {
    Cell a, b, missing;
    ClosureViolation(Cell a_, Cell b_, Cell m)
        : SymladderError("cells " + detail::cell_str(a_) + " and " + detail::cell_str(b_) +
                         " force missing cell " + detail::cell_str(m)),
          a(a_),
          b(b_),
          missing(m) {}
};

struct MalformedCorners : SymladderError {
    using SymladderError::SymladderError;
};

struct CellNotInLadder : SymladderError {
    Cell cell;
    explicit CellNotInLadder(Cell c)
        : SymladderError("cell " + detail::cell_str(c) + " is not in the ladder"), cell(c) {}
};

// Ideal construction errors --------------------------------------------------

struct PointNotOnBorder : SymladderError {
    Point point;
    explicit PointNotOnBorder(Point p)
        : SymladderError("distinguished point (" + std::to_string(p.v) + "," +
                         std::to_string(p.w) + ") is not on the upper border"),
          point(p) {}
};

struct MissingUpperOutsideCorner : SymladderError {
    Cell corner;
    explicit MissingUpperOutsideCorner(Cell c)
        : SymladderError("upper outside corner " + detail::cell_str(c) +
                         " is not among the distinguished points"),
          corner(c) {}
};

struct LengthMismatch : SymladderError {
    LengthMismatch(std::size_t points, std::size_t sizes)
        : SymladderError("got " + std::to_string(points) + " points but " +
                         std::to_string(sizes) + " minor sizes") {}
};

struct NonPositiveSize : SymladderError {
    int value;
    explicit NonPositiveSize(int t)
        : SymladderError("minor size " + std::to_string(t) + " must be >= 1"), value(t) {}
};

// Height / descent errors ----------------------------------------------------

struct NotNormalized : SymladderError {
    NotNormalized() : SymladderError("operation requires a normalized ideal") {}
};

struct InvalidPivot : SymladderError {
    int k;
    explicit InvalidPivot(int k_)
        : SymladderError("index " + std::to_string(k_) + " is not a valid pivot"), k(k_) {}
};

// Raised by descend_step when every minor size is 1: the terminal state of a
// descent, not a malfunction.
struct NoPivot : SymladderError {
    NoPivot() : SymladderError("all minor sizes are 1; the ideal is already terminal") {}
};

// Cogenerated / embedding errors ---------------------------------------------

struct PreconditionCornerMissing : SymladderError {
    int n;
    explicit PreconditionCornerMissing(int n_)
        : SymladderError("cogenerated construction requires cell (1," + std::to_string(n_) +
                         ") in the ladder"),
          n(n_) {}
};

struct AlphaOutOfRange : SymladderError {
    using SymladderError::SymladderError;
};

struct MalformedBlocks : SymladderError {
    using SymladderError::SymladderError;
};

// Polynomial oracle errors ----------------------------------------------------

struct IndexOutOfRange : SymladderError {
    using SymladderError::SymladderError;
};

// A configured degree / pair / time cap was exceeded; the caller decides
// whether that is fatal or downgrades the check to "skipped".
struct ResourceBound : SymladderError {
    using SymladderError::SymladderError;
};

}  // namespace symladder
