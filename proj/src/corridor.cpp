#include "lmapf/corridor.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmapf {

namespace {

int free_neighbor_count(const GridMap& map, Cell c) {
    int n = 0;
    for (Action a : kMoveActions)
        if (map.is_free(apply_action(c, a))) ++n;
    return n;
}

}  // namespace

std::optional<Cell> Corridor::exit_endpoint(const CorridorRecord& record) const {
    if (endpoints.empty()) return std::nullopt;
    if (endpoints.size() == 1) return endpoints[0];
    if (!record.entry) return std::nullopt;
    return other_endpoint(*record.entry);
}

Cell Corridor::other_endpoint(Cell endpoint) const {
    if (endpoints.size() == 2)
        return endpoints[0] == endpoint ? endpoints[1] : endpoints[0];
    return endpoint;
}

CorridorTopology CorridorTopology::analyze(const GridMap& map) {
    CorridorTopology topo;
    topo.width_ = map.width();
    topo.height_ = map.height();
    const int n = map.cell_count();
    topo.corridor_id_.assign(n, -1);
    topo.chain_index_.assign(n, -1);
    topo.endpoint_slot_.assign(n, -1);

    // Corridor candidates: free cells where at most two actions besides
    // staying are available.
    std::vector<char> candidate(n, 0);
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            Cell cell{r, c};
            if (map.is_free(cell) && free_neighbor_count(map, cell) <= 2) {
                candidate[map.index(cell)] = 1;
                ++topo.candidate_cells_;
            }
        }
    }
    auto is_candidate = [&](Cell c) {
        return map.in_bounds(c) && candidate[map.index(c)];
    };

    // Components of candidate cells are paths or cycles: a candidate has at
    // most two free neighbors, so at most two candidate neighbors.
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            Cell seed{r, c};
            if (!is_candidate(seed) || topo.corridor_id_[map.index(seed)] >= 0)
                continue;

            // Collect the component.
            std::vector<Cell> component{seed};
            topo.corridor_id_[map.index(seed)] = static_cast<int>(topo.corridors_.size());
            for (size_t i = 0; i < component.size(); ++i) {
                for (Action a : kMoveActions) {
                    Cell nb = apply_action(component[i], a);
                    if (!is_candidate(nb) || topo.corridor_id_[map.index(nb)] >= 0)
                        continue;
                    topo.corridor_id_[map.index(nb)] =
                        static_cast<int>(topo.corridors_.size());
                    component.push_back(nb);
                }
            }

            Corridor corridor;
            corridor.id = static_cast<int>(topo.corridors_.size());

            auto component_degree = [&](Cell cell) {
                int d = 0;
                for (Action a : kMoveActions)
                    if (is_candidate(apply_action(cell, a))) ++d;
                return d;
            };
            auto touches_room = [&](Cell cell) {
                for (Action a : kMoveActions) {
                    Cell nb = apply_action(cell, a);
                    if (map.is_free(nb) && !is_candidate(nb)) return true;
                }
                return false;
            };

            std::vector<Cell> ends;
            for (Cell cell : component)
                if (component_degree(cell) <= 1) ends.push_back(cell);
            std::sort(ends.begin(), ends.end());

            // Order the chain. Start from an end that opens into a room so
            // that chain index 0 is an endpoint whenever one exists; loops
            // (2x2 open blocks) have no ends and get walk order.
            Cell start;
            if (ends.empty()) {
                corridor.loop = true;
                start = *std::min_element(component.begin(), component.end());
            } else if (ends.size() == 1) {
                start = ends[0];  // single cell
            } else {
                start = touches_room(ends[1]) && !touches_room(ends[0]) ? ends[1]
                                                                        : ends[0];
            }

            corridor.cells.reserve(component.size());
            {
                Cell prev{-1, -1};
                Cell cur = start;
                for (size_t k = 0; k < component.size(); ++k) {
                    corridor.cells.push_back(cur);
                    topo.chain_index_[map.index(cur)] = static_cast<int>(k);
                    Cell next{-1, -1};
                    for (Action a : kMoveActions) {
                        Cell nb = apply_action(cur, a);
                        if (is_candidate(nb) && nb != prev &&
                            topo.chain_index_[map.index(nb)] < 0) {
                            next = nb;
                            break;
                        }
                    }
                    prev = cur;
                    cur = next;
                }
            }

            // Endpoints are chain ends adjacent to a free non-candidate cell;
            // interior cells never qualify (both their free neighbors are
            // chain cells).
            if (!corridor.loop) {
                Cell front = corridor.cells.front();
                Cell back = corridor.cells.back();
                if (touches_room(front)) corridor.endpoints.push_back(front);
                if (back != front && touches_room(back))
                    corridor.endpoints.push_back(back);
            }
            for (size_t s = 0; s < corridor.endpoints.size(); ++s)
                topo.endpoint_slot_[map.index(corridor.endpoints[s])] =
                    static_cast<int>(s);

            for (Cell e : corridor.endpoints) {
                for (Action a : kMoveActions) {
                    Cell nb = apply_action(e, a);
                    if (map.is_free(nb) && !is_candidate(nb) &&
                        std::find(corridor.decision_points.begin(),
                                  corridor.decision_points.end(),
                                  nb) == corridor.decision_points.end())
                        corridor.decision_points.push_back(nb);
                }
            }

            if (corridor.endpoints.size() == 2) {
                Cell a = corridor.endpoints[0];
                Cell b = corridor.endpoints[1];
                corridor.deltas.push_back({b.col - a.col, b.row - a.row});
                corridor.deltas.push_back({a.col - b.col, a.row - b.row});
            } else {
                corridor.deltas.assign(corridor.endpoints.size(), Delta{0, 0});
            }

            // A single cell flanked by two rooms is a corridor whose
            // endpoints coincide, not a dead-end.
            corridor.dead_end =
                corridor.endpoints.size() == 1 &&
                !(corridor.cells.size() == 1 && corridor.decision_points.size() >= 2);

            topo.corridors_.push_back(std::move(corridor));
        }
    }
    return topo;
}

Delta delta_at(const CorridorTopology& topology, Cell endpoint) {
    int slot = topology.endpoint_slot_at(endpoint);
    if (slot < 0)
        throw std::invalid_argument("delta_at(): " + to_string(endpoint) +
                                    " is not a corridor endpoint");
    return topology.corridor(topology.corridor_id_at(endpoint)).deltas[slot];
}

CorridorOccupancy::CorridorOccupancy(const CorridorTopology& topology,
                                     std::span<const AgentState> agents)
    : by_corridor_(topology.corridors().size()) {
    for (const AgentState& agent : agents) {
        if (!agent.active || !agent.corridor_record) continue;
        const CorridorRecord& rec = *agent.corridor_record;
        const Corridor& corridor = topology.corridor(rec.corridor_id);
        by_corridor_[rec.corridor_id].push_back(
            {agent.id, corridor.exit_endpoint(rec)});
    }
}

bool blocking(const CorridorTopology& topology, const CorridorOccupancy& occupancy,
              int observer, Cell endpoint) {
    if (!topology.is_endpoint(endpoint))
        throw std::invalid_argument("blocking(): " + to_string(endpoint) +
                                    " is not a corridor endpoint");
    const int id = topology.corridor_id_at(endpoint);
    for (const auto& occ : occupancy.occupants(id)) {
        if (occ.agent_id == observer) continue;
        if (!occ.exit || *occ.exit == endpoint) return true;
    }
    return false;
}

bool blocking(const CorridorTopology& topology, std::span<const AgentState> agents,
              int observer, Cell endpoint) {
    return blocking(topology, CorridorOccupancy(topology, agents), observer,
                    endpoint);
}

std::optional<CorridorRecord> record_after_move(
    const CorridorTopology& topology, std::optional<Cell> from, Cell to,
    const std::optional<CorridorRecord>& prev) {
    const int id = topology.corridor_id_at(to);
    if (id < 0) return std::nullopt;
    const Corridor& corridor = topology.corridor(id);

    CorridorRecord rec;
    rec.corridor_id = id;

    if (prev && prev->corridor_id == id && from && *from != to) {
        // Move within the corridor: direction follows the step just taken.
        if (corridor.loop) return CorridorRecord{id, std::nullopt, 0};
        int from_idx = topology.chain_index_at(*from);
        int to_idx = topology.chain_index_at(to);
        rec.dir = to_idx > from_idx ? 1 : -1;
        if (corridor.endpoints.size() == 2)
            rec.entry = rec.dir > 0 ? corridor.endpoints[0] : corridor.endpoints[1];
        else if (corridor.endpoints.size() == 1)
            rec.entry = corridor.endpoints[0];
        return rec;
    }
    if (prev && prev->corridor_id == id) return prev;  // stayed put

    if (from && *from != to) {
        // Entering from outside; the entry cell is always an endpoint.
        rec.entry = to;
        if (corridor.cells.size() > 1 && !corridor.loop)
            rec.dir = to == corridor.cells.front() ? 1 : -1;
        return rec;
    }

    // Initial placement: direction unknown; a single-endpoint corridor still
    // forces the entry.
    if (corridor.endpoints.size() == 1) rec.entry = corridor.endpoints[0];
    return rec;
}

void reset_direction(const CorridorTopology& topology, CorridorRecord& record) {
    record.dir = 0;
    const Corridor& corridor = topology.corridor(record.corridor_id);
    record.entry = corridor.endpoints.size() == 1
                       ? std::optional<Cell>(corridor.endpoints[0])
                       : std::nullopt;
}

}  // namespace lmapf
