#pragma once

#include <vector>

namespace fixtures {

inline const std::vector<int> kSeven = {1, 4, 5, 6, 3, 2, 7};

// Fifteen-point example whose labels 3..14 form the reference window.
inline const std::vector<int> kSigmaStar = {1, 14, 13, 6, 5, 4, 7, 12, 11, 8, 9, 10, 3, 2, 15};

// Window offsets 1..12 (labels 3..14) in axis order, anchor Morse index 2.
inline const std::vector<int> kWindowOrder = {12, 11, 4, 3, 2, 5, 10, 9, 6, 7, 8, 1};
inline constexpr int kWindowAnchor = 2;

inline const std::vector<std::vector<int>> kWindowMatrix = {
    {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1},
    {1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 1, 1},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    {1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 1, 1, 1, 2, 1, 1, 1},
    {1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
};

inline const std::vector<int> kWindowMorse = {2, 1, 2, 1, 0, 1, 0, 1, 2, 1, 2, 1};

}  // namespace fixtures
