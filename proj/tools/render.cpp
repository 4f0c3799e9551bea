#include "render.hpp"

#include <algorithm>

namespace symladder::io {

std::string render_grid(const Ladder& lad, const std::vector<Cell>& overlay,
                        const std::vector<Cell>& marks) {
    const int n = lad.n();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    const auto has = [](const std::vector<Cell>& cs, Cell c) {
        return std::find(cs.begin(), cs.end(), c) != cs.end();
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const Cell c{i, j};
            char ch = '.';
            if (i <= j && lad.cells().end() !=
                              std::find(lad.cells().begin(), lad.cells().end(), c)) {
                ch = '#';
                if (has(overlay, c)) ch = 'H';
                if (has(marks, c)) ch = '*';
            }
            out.push_back(ch);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace symladder::io
