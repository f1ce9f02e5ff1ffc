#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lmapf/agent.hpp"
#include "lmapf/grid_map.hpp"

namespace lmapf {

// Signed displacement between corridor endpoints; x is the column axis,
// y the row axis.
struct Delta {
    int dx = 0;
    int dy = 0;
    bool operator==(const Delta& o) const { return dx == o.dx && dy == o.dy; }
};

// A maximal chain of free cells that each have at most two free 4-neighbors.
// Chains are ordered front-to-back; when the corridor has endpoints, the
// front of the chain is an endpoint (and for two-endpoint corridors so is
// the back). 2x2 open blocks form closed candidate loops with no endpoints
// and are kept but flagged unenterable.
struct Corridor {
    int id = 0;
    std::vector<Cell> cells;            // 4-connected chain (walk order for loops)
    std::vector<Cell> endpoints;        // 0, 1, or 2 cells of the chain
    std::vector<Cell> decision_points;  // free non-corridor cells adjacent to endpoints
    std::vector<Delta> deltas;          // per endpoint; (0,0) unless two endpoints
    bool dead_end = false;              // exactly one endpoint and a sealed far end
    bool loop = false;                  // candidate cycle (no chain ends)

    bool enterable() const { return !endpoints.empty(); }

    // The endpoint an occupant with this record will leave through; nullopt
    // when the direction of travel is unknown.
    std::optional<Cell> exit_endpoint(const CorridorRecord& record) const;

    Cell other_endpoint(Cell endpoint) const;
};

class CorridorTopology {
  public:
    static CorridorTopology analyze(const GridMap& map);

    const std::vector<Corridor>& corridors() const { return corridors_; }
    const Corridor& corridor(int id) const { return corridors_[id]; }

    // -1 when the cell is not part of any corridor.
    int corridor_id_at(Cell c) const { return grid_value(corridor_id_, c); }
    // Index of the cell within its corridor's chain; -1 outside corridors.
    int chain_index_at(Cell c) const { return grid_value(chain_index_, c); }
    // Slot within Corridor::endpoints (0 or 1); -1 when not an endpoint.
    int endpoint_slot_at(Cell c) const { return grid_value(endpoint_slot_, c); }

    bool is_corridor_cell(Cell c) const { return corridor_id_at(c) >= 0; }
    bool is_endpoint(Cell c) const { return endpoint_slot_at(c) >= 0; }

    int candidate_cell_count() const { return candidate_cells_; }
    int width() const { return width_; }
    int height() const { return height_; }

  private:
    int grid_value(const std::vector<int32_t>& grid, Cell c) const {
        if (c.row < 0 || c.row >= height_ || c.col < 0 || c.col >= width_) return -1;
        return grid[c.row * width_ + c.col];
    }

    int width_ = 0;
    int height_ = 0;
    int candidate_cells_ = 0;
    std::vector<int32_t> corridor_id_;
    std::vector<int32_t> chain_index_;
    std::vector<int32_t> endpoint_slot_;
    std::vector<Corridor> corridors_;
};

// Displacement from `endpoint` to the corridor's other endpoint; (0,0) for
// single-endpoint corridors. Throws std::invalid_argument when the cell is
// not an endpoint.
Delta delta_at(const CorridorTopology& topology, Cell endpoint);

// Snapshot of which agents occupy which corridor, with their exit endpoints
// resolved. Rebuilt once per timestep; keeps blocking queries O(occupants).
class CorridorOccupancy {
  public:
    struct Occupant {
        int agent_id = -1;
        std::optional<Cell> exit;  // nullopt: direction unknown, blocks both ends
    };

    CorridorOccupancy() = default;
    CorridorOccupancy(const CorridorTopology& topology,
                      std::span<const AgentState> agents);

    const std::vector<Occupant>& occupants(int corridor_id) const {
        return by_corridor_[corridor_id];
    }

  private:
    std::vector<std::vector<Occupant>> by_corridor_;
};

// True iff some agent other than `observer` occupies the corridor of
// `endpoint` and will exit through it. Occupants whose direction is unknown
// block both endpoints. Throws std::invalid_argument when `endpoint` is not
// a corridor endpoint.
bool blocking(const CorridorTopology& topology, const CorridorOccupancy& occupancy,
              int observer, Cell endpoint);
bool blocking(const CorridorTopology& topology, std::span<const AgentState> agents,
              int observer, Cell endpoint);

// Corridor record for an agent arriving on `to`. `from` is nullopt for
// initial placement. Returns nullopt when `to` is not a corridor cell.
std::optional<CorridorRecord> record_after_move(const CorridorTopology& topology,
                                                std::optional<Cell> from, Cell to,
                                                const std::optional<CorridorRecord>& prev);

// Forgets the direction of travel (used when a new goal is assigned);
// single-endpoint corridors keep their forced entry.
void reset_direction(const CorridorTopology& topology, CorridorRecord& record);

}  // namespace lmapf
