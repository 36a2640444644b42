#pragma once

#include "sws/model.hpp"

namespace sws::fixtures {

inline Rational q(const char* decimal) { return parse_rational(decimal); }

/// Triangle 1->2, 2->3, 1->3 with no sight. Best plan is the direct edge (0.7 vs 0.25).
inline Instance fix_a() {
    return Instance(3, {{{1, 2}, q("0.5")}, {{2, 3}, q("0.5")}, {{1, 3}, q("0.3")}}, {}, {1, 3});
}

/// Triangle where the start sees the onward edge 2->3.
inline Instance fix_b() {
    return Instance(3, {{{1, 2}, q("0.1")}, {{2, 3}, q("0.5")}, {{1, 3}, q("0.2")}}, {{1, {2, 3}}}, {1, 3});
}

/// Vertex 2 sees both of its fair-coin exits, which makes the detour via 2
/// (0.675) beat the direct edge 1->5 (0.6) even though the blind product via 2
/// is only 0.45.
inline Instance fix_c() {
    return Instance(5,
                    {{{1, 2}, q("0.1")},
                     {{1, 5}, q("0.4")},
                     {{2, 3}, q("0.5")},
                     {{2, 4}, q("0.5")},
                     {{3, 5}, q("0")},
                     {{4, 5}, q("0")}},
                    {{2, {2, 3}}, {2, {2, 4}}}, {1, 5});
}

/// Chain 1->2->3->4, no sight.
inline Instance fix_d() {
    return Instance(4, {{{1, 2}, q("0.5")}, {{2, 3}, q("0.5")}, {{3, 4}, q("0.5")}}, {}, {1, 4});
}

}  // namespace sws::fixtures
