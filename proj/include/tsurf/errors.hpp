#pragma once

#include <stdexcept>
#include <string>

#include "tsurf/rational.hpp"

namespace tsurf {

// A computation needed a vertex beyond the hard window cap.
struct window_limit_error : std::runtime_error {
    long k;
    explicit window_limit_error(long kk)
        : std::runtime_error("window limit exceeded at vertex index " + std::to_string(kk)), k(kk) {}
};

// A point does not lie in the (materialized) region of its component.
struct outside_surface_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A code symbol is not an edge of the running triangle, or the code backtracks.
struct malformed_code_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A separatrix direction points into no angular sector at the given vertex.
struct no_sector_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The interval intersection of a development is degenerate.
struct degenerate_interval_error : std::runtime_error {
    Rational lo, hi;
    degenerate_interval_error(Rational l, Rational h)
        : std::runtime_error("degenerate level interval [" + l.str() + ", " + h.str() + "]"),
          lo(std::move(l)),
          hi(std::move(h)) {}
};

}  // namespace tsurf
