#ifndef ACCUT_RUDY_HPP
#define ACCUT_RUDY_HPP

#include <istream>
#include <string>

#include "accut/graph.hpp"

namespace accut {

// Reads the plain edge-list format used by the classic maxcut instance
// collections: a header line "n m" followed by m lines "i j w" with 1-based
// endpoints. Blank lines are ignored. Throws std::runtime_error with the
// offending line number on malformed input.
Graph parse_rudy(std::istream& in);

// Same, reading from a file; errors are prefixed with the path.
Graph parse_rudy_file(const std::string& path);

}  // namespace accut

#endif
