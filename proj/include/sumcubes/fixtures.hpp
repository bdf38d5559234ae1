#pragma once

// Edge sets and cycle strings for the ternary cube-residue graph B({0,1,8}, 3).

#include <optional>
#include <string_view>

#include "sumcubes/debruijn.hpp"

namespace sumcubes::fixtures {

inline constexpr std::string_view kBinaryAlphabet = "01";
inline constexpr std::string_view kCubeAlphabet = "018";
inline constexpr int kCubeOrder = 3;

/// Binary order-3 cycle covering all eight triples.
inline constexpr std::string_view kBinaryCycle = "00010111";
/// Claimed 23-symbol cycle for the full ternary graph.
inline constexpr std::string_view kClaimedTernaryCycle = "00088808881118100010110";
/// Claimed cycles for the E1 and E2 subgraphs (22 symbols each).
inline constexpr std::string_view kClaimedE1Cycle = "0111818880800018180801";
inline constexpr std::string_view kClaimedE2Cycle = "8111010008088818101081";

Alphabet cube_alphabet();

/// The six alternating triples: three 2-cycles 08<->80, 18<->81, 01<->10.
EdgeSubgraph e0();
EdgeSubgraph e1();
/// Elementwise reversal of E1.
EdgeSubgraph e2();

/// "E0", "E1" or "E2"; nullopt for anything else.
std::optional<EdgeSubgraph> by_name(std::string_view name);

}  // namespace sumcubes::fixtures
