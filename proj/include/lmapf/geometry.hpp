#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace lmapf {

// Grid coordinates are (row, col) with row 0 at the top, matching the text
// order of movingai map files. Where an X/Y pair is exposed (corridor delta
// values, goal vectors), X is the column axis and Y is the row axis.
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
    bool operator!=(const Cell& o) const { return !(*this == o); }
    bool operator<(const Cell& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

inline int manhattan(Cell a, Cell b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

inline std::string to_string(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Canonical action order; every 5-vector (validity, distributions) uses it.
enum class Action : uint8_t { North = 0, East = 1, South = 2, West = 3, Stay = 4 };

inline constexpr int kNumActions = 5;

// Displacements in (row, col); North decreases the row index.
inline constexpr std::array<std::array<int, 2>, kNumActions> kActionDelta = {{
    {-1, 0},  // North
    {0, 1},   // East
    {1, 0},   // South
    {0, -1},  // West
    {0, 0},   // Stay
}};

inline Cell apply_action(Cell c, Action a) {
    const auto& d = kActionDelta[static_cast<int>(a)];
    return Cell{c.row + d[0], c.col + d[1]};
}

// Neighbor expansion order shared by all searches: N, E, S, W.
inline constexpr std::array<Action, 4> kMoveActions = {Action::North, Action::East,
                                                       Action::South, Action::West};

inline const char* action_name(Action a) {
    switch (a) {
        case Action::North: return "north";
        case Action::East: return "east";
        case Action::South: return "south";
        case Action::West: return "west";
        case Action::Stay: return "stay";
    }
    return "?";
}

}  // namespace lmapf

template <>
struct std::hash<lmapf::Cell> {
    std::size_t operator()(const lmapf::Cell& c) const noexcept {
        return std::hash<int64_t>()((static_cast<int64_t>(c.row) << 32) ^
                                    static_cast<uint32_t>(c.col));
    }
};
