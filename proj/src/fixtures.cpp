#include "sumcubes/fixtures.hpp"

namespace sumcubes::fixtures {

Alphabet cube_alphabet() { return Alphabet(kCubeAlphabet); }

EdgeSubgraph e0() {
  return EdgeSubgraph(cube_alphabet(), kCubeOrder, {"181", "818", "101", "010", "080", "808"});
}

EdgeSubgraph e1() {
  return EdgeSubgraph(cube_alphabet(), kCubeOrder,
                      {"011", "111", "118", "188", "888", "880", "800", "000", "001", "018", "180", "801"});
}

EdgeSubgraph e2() {
  return EdgeSubgraph(cube_alphabet(), kCubeOrder,
                      {"811", "111", "110", "100", "000", "008", "088", "888", "881", "810", "108", "081"});
}

std::optional<EdgeSubgraph> by_name(std::string_view name) {
  if (name == "E0") return e0();
  if (name == "E1") return e1();
  if (name == "E2") return e2();
  return std::nullopt;
}

}  // namespace sumcubes::fixtures
