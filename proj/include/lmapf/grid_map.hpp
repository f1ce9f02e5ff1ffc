#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lmapf/geometry.hpp"

namespace lmapf {

enum class Tile : uint8_t { Free = 0, Obstacle = 1 };

// Static world geometry. Immutable after construction in normal use; the
// mutating accessors exist for generators and test fixtures.
class GridMap {
  public:
    GridMap(int height, int width, Tile fill = Tile::Free);

    int height() const { return height_; }
    int width() const { return width_; }
    int cell_count() const { return height_ * width_; }

    bool in_bounds(Cell c) const {
        return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
    }
    int index(Cell c) const { return c.row * width_ + c.col; }

    Tile at(Cell c) const { return cells_[index(c)]; }
    void set(Cell c, Tile t) { cells_[index(c)] = t; }

    // In-bounds and Free; the query most call sites want.
    bool is_free(Cell c) const { return in_bounds(c) && at(c) == Tile::Free; }

    int obstacle_count() const;
    int free_count() const { return cell_count() - obstacle_count(); }
    double obstacle_density() const {
        return static_cast<double>(obstacle_count()) / cell_count();
    }

    std::vector<Cell> free_cells() const;

    bool operator==(const GridMap& o) const {
        return width_ == o.width_ && height_ == o.height_ && cells_ == o.cells_;
    }

  private:
    int height_;
    int width_;
    std::vector<Tile> cells_;
};

struct MazeParams {
    int size = 20;                // square side, cells
    double density = 0.3;         // target obstacle fraction
    int corridor_length = 10;     // typical straight wall length, cells
    uint64_t seed = 0;

    void validate() const;
};

// Places straight wall segments of length uniform in
// [max(1, L/2), 3L/2] at random positions/orientations, rejecting any
// placement that would disconnect the free space, until the target obstacle
// count is reached or an attempt budget of 50*size^2 is exhausted (the
// achieved density is then clamped below the target). The free region is a
// single 4-connected component on every map this produces.
GridMap generate_maze(const MazeParams& params);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column);
    int line;    // 1-based
    int column;  // 1-based, 0 when the error is not tied to a column
};

// movingai .map format: "type <t>" / "height <H>" / "width <W>" / "map",
// then H rows of W symbols. '.' and 'G' parse as Free; '@', 'O', 'T' as
// Obstacle. Anything else is a ParseError naming line and column.
GridMap parse_movingai_map(std::string_view text);

// Inverse of parse_movingai_map on the cell grid ('.'/'@' symbols).
std::string to_movingai(const GridMap& map);

// True iff a 4-connected Free path links a and b. Throws std::invalid_argument
// on out-of-bounds coordinates.
bool connected(const GridMap& map, Cell a, Cell b);

// Free-space component labeling for O(1) repeated connectivity queries.
class ComponentLabels {
  public:
    explicit ComponentLabels(const GridMap& map);

    // -1 on obstacles.
    int label(Cell c) const { return labels_[c.row * width_ + c.col]; }
    bool same_component(Cell a, Cell b) const {
        return label(a) >= 0 && label(a) == label(b);
    }
    int component_count() const { return count_; }
    int component_size(int label) const { return sizes_[label]; }
    const std::vector<Cell>& component_cells(int label) const { return cells_[label]; }

  private:
    int width_;
    int count_;
    std::vector<int32_t> labels_;
    std::vector<int> sizes_;
    std::vector<std::vector<Cell>> cells_;
};

}  // namespace lmapf
