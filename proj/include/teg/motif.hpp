#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "teg/event.hpp"

namespace teg {

/// The six two-event motifs. Enumerator order is the canonical reporting
/// order used by every distribution and output file.
enum class Motif : std::uint8_t { ABAB, ABBA, ABAC, ABCA, ABBC, ABCB };

inline constexpr std::size_t motif_count = 6;

inline constexpr std::array<Motif, motif_count> all_motifs{
    Motif::ABAB, Motif::ABBA, Motif::ABAC, Motif::ABCA, Motif::ABBC, Motif::ABCB};

/// Role attribute of a motif: which event slot(s) hold the shared node(s).
/// `A` is the first (source) slot, `B` the second (target) slot.
enum class XiLabel : std::uint8_t { A, B, AB, BA };

struct MotifAttributes {
    XiLabel xi_out;
    XiLabel xi_in;
    int xi_switch;
};

constexpr std::size_t index_of(Motif m) noexcept { return static_cast<std::size_t>(m); }

constexpr MotifAttributes attributes(Motif m) noexcept
{
    switch (m) {
    case Motif::ABAB: return {XiLabel::AB, XiLabel::AB, +1};
    case Motif::ABBA: return {XiLabel::AB, XiLabel::BA, -1};
    case Motif::ABAC: return {XiLabel::A, XiLabel::A, +1};
    case Motif::ABCA: return {XiLabel::A, XiLabel::B, -1};
    case Motif::ABBC: return {XiLabel::B, XiLabel::A, -1};
    case Motif::ABCB: return {XiLabel::B, XiLabel::B, +1};
    }
    return {XiLabel::AB, XiLabel::AB, +1};
}

constexpr XiLabel xi_out(Motif m) noexcept { return attributes(m).xi_out; }
constexpr XiLabel xi_in(Motif m) noexcept { return attributes(m).xi_in; }
constexpr int xi_switch(Motif m) noexcept { return attributes(m).xi_switch; }

/// True for ABAB and ABBA, the motifs whose two events share both nodes.
constexpr bool is_two_node(Motif m) noexcept { return m == Motif::ABAB || m == Motif::ABBA; }

constexpr std::string_view to_string(Motif m) noexcept
{
    constexpr std::array<std::string_view, motif_count> names{"ABAB", "ABBA", "ABAC",
                                                              "ABCA", "ABBC", "ABCB"};
    return names[index_of(m)];
}

constexpr std::string_view to_string(XiLabel x) noexcept
{
    switch (x) {
    case XiLabel::A: return "A";
    case XiLabel::B: return "B";
    case XiLabel::AB: return "AB";
    case XiLabel::BA: return "BA";
    }
    return "?";
}

inline std::optional<Motif> parse_motif(std::string_view text) noexcept
{
    for (Motif m : all_motifs) {
        if (to_string(m) == text) return m;
    }
    return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, Motif m) { return os << to_string(m); }

/// Motif formed by the ordered pair (earlier, later): the node sequence
/// (u_i, v_i, u_j, v_j) is lettered A, B, C in order of first appearance.
///
/// Throws std::invalid_argument when the events share no node.
inline Motif classify_motif(const Event& earlier, const Event& later)
{
    const std::array<NodeId, 4> seq{earlier.source, earlier.target, later.source, later.target};
    std::array<NodeId, 4> seen{};
    std::size_t distinct = 0;
    std::array<char, 4> word{};
    for (std::size_t k = 0; k < seq.size(); ++k) {
        std::size_t letter = 0;
        while (letter < distinct && seen[letter] != seq[k]) ++letter;
        if (letter == distinct) seen[distinct++] = seq[k];
        word[k] = static_cast<char>('A' + letter);
    }
    if (auto m = parse_motif(std::string_view(word.data(), word.size()))) return *m;
    throw std::invalid_argument("events " + std::string(word.data(), word.size()) +
                                " do not form a two-event motif");
}

}  // namespace teg
