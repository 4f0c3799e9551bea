#include "symladder/height.hpp"

#include <algorithm>

#include "symladder/errors.hpp"

namespace symladder {

HeightProfile h_plus(const MixedLadderIdeal& ideal) {
    if (!is_normalized(ideal)) throw NotNormalized();
    HeightProfile out;
    const auto& pts = ideal.points();
    const auto& t = ideal.sizes();
    const int s = ideal.s();
    if (s == 0) return out;
    for (Cell c : ideal.ladder().cells()) {
        if (c.j > pts[0].w - t[0] + 1) continue;
        if (c.i > pts[static_cast<std::size_t>(s) - 1].v - t[static_cast<std::size_t>(s) - 1] + 1)
            continue;
        bool keep = true;
        for (int k = 1; k < s; ++k)
            if (c.i > pts[k - 1].v - t[k - 1] + 1 && c.j > pts[k].w - t[k] + 1) {
                keep = false;
                break;
            }
        if (keep) out.h_plus.push_back(c);
    }
    out.height = static_cast<int>(out.h_plus.size());
    return out;
}

HeightProfile i_plus(const MixedLadderIdeal& ideal, int k) {
    const int s = ideal.s();
    if (k < 1 || k > s) throw InvalidPivot(k);
    HeightProfile profile = h_plus(ideal);
    const auto& pts = ideal.points();
    const auto& t = ideal.sizes();
    const int v_prev = k >= 2 ? pts[k - 2].v : 0;
    const int w_next = k < s ? pts[k].w : 0;
    if (t[k - 1] < 2 || pts[k - 1].v <= v_prev || pts[k - 1].w <= w_next) throw InvalidPivot(k);

    const Cell removed{pts[k - 1].v - t[k - 1] + 1, pts[k - 1].w - t[k - 1] + 1};
    const auto it = std::find(profile.h_plus.begin(), profile.h_plus.end(), removed);
    if (it == profile.h_plus.end())
        throw SymladderError("internal: pivot corner cell missing from h_plus");
    profile.h_plus.erase(it);
    profile.height -= 1;
    return profile;
}

}  // namespace symladder
