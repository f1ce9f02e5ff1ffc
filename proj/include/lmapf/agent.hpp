#pragma once

#include <optional>

#include "lmapf/geometry.hpp"

namespace lmapf {

// Corridor-occupancy bookkeeping for one agent. `entry` is the endpoint the
// agent is treated as having entered through (what it will NOT exit from);
// nullopt when the direction of travel is not yet established (placed inside
// a corridor at episode start, or direction reset on goal reassignment).
// `dir` is the agent's travel direction along the corridor's cell chain
// (+1 toward the back of the chain, -1 toward the front, 0 unknown).
struct CorridorRecord {
    int corridor_id = -1;
    std::optional<Cell> entry;
    int dir = 0;
};

struct AgentState {
    int id = 0;
    Cell position;
    std::optional<Cell> previous_position;  // position at t-1; reset on new goal
    Cell goal;
    bool active = true;  // one-shot agents deactivate on arrival
    std::optional<CorridorRecord> corridor_record;  // present iff on a corridor cell
    int goals_reached = 0;
};

}  // namespace lmapf
