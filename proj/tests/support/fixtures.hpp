#pragma once

// Hand-built edge-labelled TEGs, each breaking one consistency condition.

#include "teg/edge_labelled.hpp"

namespace fixture {

using teg::Motif;

/// Two out-edges of e0 both claim node A moves on (xi_out A twice).
inline teg::EdgeLabelledTeg breaks_c2()
{
    return teg::EdgeLabelledTeg(3, {{0, 1, 1.0, Motif::ABAC}, {0, 2, 2.0, Motif::ABCA}});
}

/// Both in-edges of e2 dictate its first node (xi_in A twice).
inline teg::EdgeLabelledTeg breaks_c3()
{
    return teg::EdgeLabelledTeg(3, {{0, 2, 2.0, Motif::ABAC}, {1, 2, 1.0, Motif::ABBC}});
}

/// Two routes from e0 to e2 with different total time (1 + 1 != 3).
inline teg::EdgeLabelledTeg breaks_c1()
{
    return teg::EdgeLabelledTeg(3, {{0, 1, 1.0, Motif::ABAC}, {1, 2, 1.0, Motif::ABCB}, {0, 2, 3.0, Motif::ABBC}});
}

/// Node B stays the target along e0 -> e1 -> e2 (xi_switch product +1), so
/// the direct edge e0 -> e2 must be ABAB, not ABBA.
inline teg::EdgeLabelledTeg breaks_c4()
{
    return teg::EdgeLabelledTeg(3, {{0, 1, 1.0, Motif::ABAC}, {1, 2, 1.0, Motif::ABAC}, {0, 2, 2.0, Motif::ABBA}});
}

/// breaks_c4 with the label corrected.
inline teg::EdgeLabelledTeg repaired_c4()
{
    return teg::EdgeLabelledTeg(3, {{0, 1, 1.0, Motif::ABAC}, {1, 2, 1.0, Motif::ABAC}, {0, 2, 2.0, Motif::ABAB}});
}

}  // namespace fixture
