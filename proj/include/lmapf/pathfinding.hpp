#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lmapf/agent.hpp"
#include "lmapf/grid_map.hpp"

namespace lmapf {

// Exact single-source shortest-path distances over free cells (BFS metric).
class DistanceField {
  public:
    static constexpr int32_t kUnreachable = -1;

    DistanceField(const GridMap& map, Cell goal);

    Cell goal() const { return goal_; }

    // kUnreachable for obstacles, unreachable cells, and out-of-bounds.
    int32_t distance(Cell c) const {
        if (c.row < 0 || c.row >= height_ || c.col < 0 || c.col >= width_)
            return kUnreachable;
        return distances_[c.row * width_ + c.col];
    }
    bool reachable(Cell c) const { return distance(c) >= 0; }

  private:
    int width_;
    int height_;
    Cell goal_;
    std::vector<int32_t> distances_;
};

DistanceField distance_field(const GridMap& map, Cell goal);

struct TimedCell {
    Cell cell;
    int t = 0;
    bool operator==(const TimedCell& o) const { return cell == o.cell && t == o.t; }
};

// Space-time occupancy ledger for prioritized planning. An edge reservation
// (a, b, t) forbids traversing a->b arriving at t and the swap b->a alike.
class ReservationTable {
  public:
    explicit ReservationTable(const GridMap& map);

    void reserve_vertex(Cell c, int t);
    void reserve_edge(Cell from, Cell to, int t);

    bool vertex_reserved(Cell c, int t) const;
    bool edge_reserved(Cell from, Cell to, int t) const;

    // Reserves every vertex and edge of the path, then parks the final cell
    // through `horizon`.
    void reserve_path(std::span<const TimedCell> path, int horizon);

    // Last timestep with a vertex reservation on c; -1 when none.
    int last_vertex_reservation(Cell c) const;

    bool empty() const { return vertices_.empty() && edges_.empty(); }

  private:
    uint64_t vertex_key(Cell c, int t) const;
    uint64_t edge_key(Cell from, Cell to, int t) const;

    int width_;
    std::unordered_set<uint64_t> vertices_;
    std::unordered_set<uint64_t> edges_;
    std::unordered_map<int64_t, int> last_on_cell_;
};

// Shortest timed path (waiting allowed, unit cost per step) from start to
// goal violating no reservation, with the arrival late enough that parking
// on the goal conflicts with nothing. Expansion order N, E, S, W, Wait;
// ties broken toward deeper states then insertion order, so results are
// reproducible. Returns nullopt when no path exists within `horizon`.
std::optional<std::vector<TimedCell>> space_time_astar(
    const GridMap& map, Cell start, Cell goal,
    const ReservationTable& reservations, int horizon);

// Shortest 4-connected path start..goal inclusive, or nullopt when
// unreachable. Runs the space-time search against an empty table, so the
// single-agent case of prioritized planning reproduces it exactly.
std::optional<std::vector<Cell>> astar_path(const GridMap& map, Cell start,
                                            Cell goal);

// Positions after 1..horizon steps along the canonical shortest path to the
// agent's goal (deterministic N,E,S,W descent of the distance field). The
// goal cell repeats once the path is exhausted; agents with unreachable
// goals are predicted stationary.
std::vector<Cell> predict_positions(const DistanceField& field, Cell start,
                                    int horizon);
std::vector<Cell> predict_positions(const GridMap& map, const AgentState& agent,
                                    int horizon);

}  // namespace lmapf
