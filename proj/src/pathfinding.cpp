#include "lmapf/pathfinding.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace lmapf {

DistanceField::DistanceField(const GridMap& map, Cell goal)
    : width_(map.width()), height_(map.height()), goal_(goal) {
    if (!map.is_free(goal))
        throw std::invalid_argument("distance_field(): goal " + to_string(goal) +
                                    " is not a free cell");
    distances_.assign(map.cell_count(), kUnreachable);
    distances_[map.index(goal)] = 0;
    std::deque<Cell> queue{goal};
    while (!queue.empty()) {
        Cell cur = queue.front();
        queue.pop_front();
        const int32_t d = distances_[map.index(cur)];
        for (Action a : kMoveActions) {
            Cell n = apply_action(cur, a);
            if (!map.is_free(n) || distances_[map.index(n)] != kUnreachable)
                continue;
            distances_[map.index(n)] = d + 1;
            queue.push_back(n);
        }
    }
}

DistanceField distance_field(const GridMap& map, Cell goal) {
    return DistanceField(map, goal);
}

ReservationTable::ReservationTable(const GridMap& map) : width_(map.width()) {}

uint64_t ReservationTable::vertex_key(Cell c, int t) const {
    return (static_cast<uint64_t>(static_cast<uint32_t>(c.row * width_ + c.col))
            << 32) |
           static_cast<uint32_t>(t);
}

uint64_t ReservationTable::edge_key(Cell from, Cell to, int t) const {
    const uint64_t f = static_cast<uint32_t>(from.row * width_ + from.col);
    const uint64_t g = static_cast<uint32_t>(to.row * width_ + to.col);
    return (f << 42) | (g << 21) | static_cast<uint32_t>(t);
}

void ReservationTable::reserve_vertex(Cell c, int t) {
    vertices_.insert(vertex_key(c, t));
    auto [it, inserted] = last_on_cell_.try_emplace(c.row * width_ + c.col, t);
    if (!inserted) it->second = std::max(it->second, t);
}

void ReservationTable::reserve_edge(Cell from, Cell to, int t) {
    edges_.insert(edge_key(from, to, t));
    edges_.insert(edge_key(to, from, t));
}

bool ReservationTable::vertex_reserved(Cell c, int t) const {
    return vertices_.count(vertex_key(c, t)) > 0;
}

bool ReservationTable::edge_reserved(Cell from, Cell to, int t) const {
    return edges_.count(edge_key(from, to, t)) > 0;
}

void ReservationTable::reserve_path(std::span<const TimedCell> path, int horizon) {
    for (size_t i = 0; i < path.size(); ++i) {
        reserve_vertex(path[i].cell, path[i].t);
        if (i > 0 && path[i].cell != path[i - 1].cell)
            reserve_edge(path[i - 1].cell, path[i].cell, path[i].t);
    }
    if (!path.empty())
        for (int t = path.back().t + 1; t <= horizon; ++t)
            reserve_vertex(path.back().cell, t);
}

int ReservationTable::last_vertex_reservation(Cell c) const {
    auto it = last_on_cell_.find(c.row * width_ + c.col);
    return it == last_on_cell_.end() ? -1 : it->second;
}

namespace {

struct SearchNode {
    Cell cell;
    int t;
    int parent;  // index into the node arena, -1 for the root
};

struct HeapEntry {
    int f;
    int g;
    uint64_t order;  // insertion counter, ascending
    int node;

    bool operator>(const HeapEntry& o) const {
        if (f != o.f) return f > o.f;
        if (g != o.g) return g < o.g;  // deeper states first
        return order > o.order;
    }
};

}  // namespace

std::optional<std::vector<TimedCell>> space_time_astar(
    const GridMap& map, Cell start, Cell goal,
    const ReservationTable& reservations, int horizon) {
    if (!map.is_free(start) || !map.is_free(goal))
        throw std::invalid_argument(
            "space_time_astar(): start and goal must be free cells");

    // A state (c, t) with no vertex reservation on c at any t' >= t dominates
    // every later (c, t'): the agent can simply wait on c. Such cells are
    // closed once ("timeless"), which keeps searches with sparse tables --
    // and in particular the empty table -- as small as plain spatial A*.
    std::vector<char> closed_timeless(map.cell_count(), 0);
    std::unordered_set<uint64_t> closed_exact;
    std::unordered_set<uint64_t> seen;  // pushed states
    auto key = [&](Cell c, int t) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(map.index(c))) << 32) |
               static_cast<uint32_t>(t);
    };

    const int park_after = reservations.last_vertex_reservation(goal);

    std::vector<SearchNode> arena;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> open;
    uint64_t counter = 0;

    arena.push_back({start, 0, -1});
    seen.insert(key(start, 0));
    open.push({manhattan(start, goal), 0, counter++, 0});

    while (!open.empty()) {
        const HeapEntry top = open.top();
        open.pop();
        const SearchNode node = arena[top.node];

        if (closed_timeless[map.index(node.cell)]) continue;
        if (node.t > reservations.last_vertex_reservation(node.cell))
            closed_timeless[map.index(node.cell)] = 1;

        if (node.cell == goal && node.t > park_after) {
            std::vector<TimedCell> path;
            for (int i = top.node; i >= 0; i = arena[i].parent)
                path.push_back({arena[i].cell, arena[i].t});
            std::reverse(path.begin(), path.end());
            return path;
        }

        const int nt = node.t + 1;
        if (nt > horizon) continue;
        auto consider = [&](Cell target, bool is_move) {
            if (!map.is_free(target)) return;
            if (reservations.vertex_reserved(target, nt)) return;
            if (is_move && reservations.edge_reserved(node.cell, target, nt)) return;
            if (closed_timeless[map.index(target)]) return;
            if (!seen.insert(key(target, nt)).second) return;
            arena.push_back({target, nt, top.node});
            open.push({nt + manhattan(target, goal), nt, counter++,
                       static_cast<int>(arena.size()) - 1});
        };
        for (Action a : kMoveActions) consider(apply_action(node.cell, a), true);
        consider(node.cell, false);  // wait
    }
    return std::nullopt;
}

std::optional<std::vector<Cell>> astar_path(const GridMap& map, Cell start,
                                            Cell goal) {
    if (!map.is_free(start) || !map.is_free(goal))
        throw std::invalid_argument(
            "astar_path(): start and goal must be free cells");
    ReservationTable empty(map);
    auto timed = space_time_astar(map, start, goal, empty, map.cell_count());
    if (!timed) return std::nullopt;
    std::vector<Cell> path;
    path.reserve(timed->size());
    for (const TimedCell& tc : *timed) path.push_back(tc.cell);
    return path;
}

std::vector<Cell> predict_positions(const DistanceField& field, Cell start,
                                    int horizon) {
    if (horizon < 1)
        throw std::invalid_argument("predict_positions(): horizon must be >= 1");
    std::vector<Cell> out;
    out.reserve(horizon);
    Cell cur = start;
    for (int t = 0; t < horizon; ++t) {
        const int32_t d = field.distance(cur);
        if (d > 0) {
            for (Action a : kMoveActions) {
                Cell n = apply_action(cur, a);
                if (field.distance(n) == d - 1) {
                    cur = n;
                    break;
                }
            }
        }
        // d == 0: on goal, repeat it; d unreachable: predicted stationary.
        out.push_back(cur);
    }
    return out;
}

std::vector<Cell> predict_positions(const GridMap& map, const AgentState& agent,
                                    int horizon) {
    if (!map.is_free(agent.goal)) {
        // Unreachable/invalid goal: stationary forecast.
        return std::vector<Cell>(static_cast<size_t>(std::max(horizon, 1)),
                                 agent.position);
    }
    DistanceField field(map, agent.goal);
    return predict_positions(field, agent.position, horizon);
}

}  // namespace lmapf
