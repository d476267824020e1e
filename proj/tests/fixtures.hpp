#pragma once

#include <vector>

namespace fixtures {

inline constexpr const char* trefoil = "X+ 1 5 2 4 ; X+ 3 1 4 6 ; X+ 5 3 6 2";
inline constexpr const char* left_trefoil = "X- 1 4 2 5 ; X- 3 6 4 1 ; X- 5 2 6 3";
inline constexpr const char* figure_eight = "X+ 4 2 5 1 ; X+ 8 6 1 5 ; X- 6 3 7 4 ; X- 2 7 3 8";
inline constexpr const char* positive_hopf = "X+ 1 3 2 4 ; X+ 3 1 4 2";
inline constexpr const char* negative_hopf = "X- 4 1 3 2 ; X- 2 3 1 4";
inline constexpr const char* cinquefoil = "X+ 2 8 3 7 ; X+ 4 10 5 9 ; X+ 6 2 7 1 ; X+ 8 4 9 3 ; X+ 10 6 1 5";
inline constexpr const char* three_twist = "X+ 1 5 2 4 ; X+ 3 9 4 8 ; X+ 5 1 6 10 ; X+ 7 3 8 2 ; X+ 9 7 10 6";
inline constexpr const char* stevedore =
    "X+ 1 7 2 6 ; X- 3 10 4 11 ; X+ 5 3 6 2 ; X+ 7 1 8 12 ; X- 9 4 10 5 ; X+ 11 9 12 8";
inline constexpr const char* knot_7_4 =
    "X+ 2 10 3 9 ; X+ 4 12 5 11 ; X+ 6 14 7 13 ; X+ 8 4 9 3 ; X+ 10 2 11 1 ; X+ 12 8 13 7 ; "
    "X+ 14 6 1 5";
inline constexpr const char* three_chain =
    "X+ 6 2 7 1 ; X- 10 3 11 4 ; X+ 12 6 9 5 ; X+ 8 12 5 11 ; X+ 2 8 3 7 ; X- 4 9 1 10";
inline constexpr const char* borromean =
    "X- 6 1 7 2 ; X+ 12 8 9 7 ; X+ 4 12 1 11 ; X- 10 5 11 6 ; X+ 8 4 5 3 ; X- 2 9 3 10";
inline constexpr const char* non_alternating =
    "X- 6 1 7 2 ; X+ 12 8 9 7 ; X+ 4 12 1 11 ; X+ 5 11 6 10 ; X- 3 8 4 5 ; X+ 9 3 10 2";
// Trefoil joined to a second trefoil through a nugatory crossing.
inline constexpr const char* nugatory =
    "X+ 1 5 2 4 ; X+ 3 1 4 7 ; X+ 5 3 6 2 ; X+ 17 15 12 14 ; X+ 13 11 14 16 ; X+ 15 13 16 12 ; "
    "X+ 11 17 7 6";

struct Expected {
  const char* name;
  const char* pd;
  std::size_t n, s, k, c, o;
  int w, w_x, w_y;
  bool alternating, reduced;
};

/// Hand-computed values; the oracle tests recompute all of them.
inline std::vector<Expected> knots_and_links() {
  return {
      {"trefoil", trefoil, 3, 2, 1, 1, 2, 3, 2, 1, true, true},
      {"left_trefoil", left_trefoil, 3, 2, 1, 1, 2, -3, -2, -1, true, true},
      {"figure_eight", figure_eight, 4, 3, 1, 1, 2, 0, 0, 0, true, true},
      {"positive_hopf", positive_hopf, 2, 2, 1, 2, 1, 2, 1, 1, true, true},
      {"negative_hopf", negative_hopf, 2, 2, 1, 2, 1, -2, -1, -1, true, true},
      {"cinquefoil", cinquefoil, 5, 2, 1, 1, 4, 5, 4, 1, true, true},
      {"three_twist", three_twist, 5, 4, 1, 1, 2, 5, 2, 3, true, true},
      {"stevedore", stevedore, 6, 5, 1, 1, 2, 2, 0, 2, true, true},
      {"knot_7_4", knot_7_4, 7, 6, 1, 1, 2, 7, 2, 5, true, true},
      {"three_chain", three_chain, 6, 3, 1, 3, 4, 2, 2, 0, true, true},
      {"borromean", borromean, 6, 3, 1, 3, 4, 0, 0, 0, true, true},
      {"nugatory", nugatory, 7, 4, 1, 1, 4, 7, 4, 3, true, false},
  };
}

}  // namespace fixtures
