#pragma once

#include <string>
#include <vector>

#include "symladder/ladder.hpp"

namespace symladder::io {

// n lines of n characters: '.' outside the canonical region, '#' for ladder
// cells, 'H' for overlay cells, '*' for marked points.  Overlay and marks
// are given as canonical cells; the mirror triangle renders as outside.
std::string render_grid(const Ladder& lad, const std::vector<Cell>& overlay,
                        const std::vector<Cell>& marks);

}  // namespace symladder::io
