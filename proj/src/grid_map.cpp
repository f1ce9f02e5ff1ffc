#include "lmapf/grid_map.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "lmapf/rng.hpp"

namespace lmapf {

GridMap::GridMap(int height, int width, Tile fill)
    : height_(height), width_(width) {
    if (height < 1 || width < 1)
        throw std::invalid_argument("GridMap dimensions must be >= 1");
    cells_.assign(static_cast<size_t>(height) * width, fill);
}

int GridMap::obstacle_count() const {
    return static_cast<int>(
        std::count(cells_.begin(), cells_.end(), Tile::Obstacle));
}

std::vector<Cell> GridMap::free_cells() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (cells_[r * width_ + c] == Tile::Free) out.push_back({r, c});
    return out;
}

void MazeParams::validate() const {
    if (size < 2) throw std::invalid_argument("maze size must be >= 2");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("maze density must be in [0,1]");
    if (corridor_length < 1)
        throw std::invalid_argument("corridor_length must be >= 1");
}

namespace {

// Checks that turning `removed` (currently Free cells, marked in scratch)
// into obstacles keeps the rest of the free space connected. Equivalent to:
// every free neighbor of the removed set stays mutually reachable. The BFS
// exits as soon as all neighbors are found, so accepted placements usually
// cost a handful of cell visits.
class ConnectivityChecker {
  public:
    explicit ConnectivityChecker(const GridMap& map)
        : map_(map), mark_(map.cell_count(), 0), epoch_(0) {}

    bool removal_keeps_connected(const std::vector<Cell>& removed) {
        ++epoch_;
        for (Cell c : removed) mark_[map_.index(c)] = epoch_;  // blocked

        neighbors_.clear();
        for (Cell c : removed) {
            for (Action a : kMoveActions) {
                Cell n = apply_action(c, a);
                if (!map_.is_free(n)) continue;
                int idx = map_.index(n);
                if (mark_[idx] == epoch_ || mark_[idx] == -epoch_) continue;
                mark_[idx] = -epoch_;  // neighbor, pending
                neighbors_.push_back(n);
            }
        }
        if (neighbors_.size() <= 1) {
            // Removing an entire pocket would drop free cells silently;
            // only allow placements the free space can survive.
            return !neighbors_.empty() || removed.empty();
        }

        size_t found = 1;
        queue_.clear();
        queue_.push_back(neighbors_[0]);
        mark_[map_.index(neighbors_[0])] = epoch_ + kVisited;
        while (!queue_.empty() && found < neighbors_.size()) {
            Cell cur = queue_.front();
            queue_.pop_front();
            for (Action a : kMoveActions) {
                Cell n = apply_action(cur, a);
                if (!map_.is_free(n)) continue;
                int idx = map_.index(n);
                int m = mark_[idx];
                if (m == epoch_ || m == epoch_ + kVisited) continue;  // blocked or seen
                if (m == -epoch_) ++found;
                mark_[idx] = epoch_ + kVisited;
                queue_.push_back(n);
            }
        }
        bool ok = found == neighbors_.size();
        // Epoch arithmetic must never collide across iterations.
        epoch_ += 2;
        return ok;
    }

  private:
    static constexpr int kVisited = 1;
    const GridMap& map_;
    std::vector<int> mark_;
    int epoch_;
    std::vector<Cell> neighbors_;
    std::deque<Cell> queue_;
};

}  // namespace

GridMap generate_maze(const MazeParams& params) {
    params.validate();
    const int n = params.size;
    GridMap map(n, n);
    const int target = static_cast<int>(std::llround(params.density * n * n));
    if (target <= 0) return map;

    Rng rng(params.seed);
    ConnectivityChecker checker(map);
    const int lo = std::max(1, params.corridor_length / 2);
    const int hi = std::max(lo, (3 * params.corridor_length) / 2);
    const long attempt_budget = 50L * n * n;

    int placed = 0;
    std::vector<Cell> segment;
    for (long attempt = 0; attempt < attempt_budget && placed < target; ++attempt) {
        const bool horizontal = rng.bounded(2) == 0;
        const int len = rng.uniform_int(lo, hi);
        Cell start{rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1)};

        segment.clear();
        for (int k = 0; k < len; ++k) {
            Cell c = horizontal ? Cell{start.row, start.col + k}
                                : Cell{start.row + k, start.col};
            if (!map.in_bounds(c)) break;           // clip at the boundary
            if (map.at(c) == Tile::Obstacle) continue;  // overlap is harmless
            segment.push_back(c);
            if (placed + static_cast<int>(segment.size()) >= target) break;
        }
        if (segment.empty()) continue;
        if (!checker.removal_keeps_connected(segment)) continue;

        for (Cell c : segment) map.set(c, Tile::Obstacle);
        placed += static_cast<int>(segment.size());
    }
    return map;
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " (line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : "") +
                         ")"),
      line(line),
      column(column) {}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

int parse_header_int(const std::vector<std::string>& lines, size_t idx,
                     const std::string& key) {
    if (idx >= lines.size())
        throw ParseError("missing '" + key + "' header line",
                         static_cast<int>(idx) + 1, 0);
    const std::string& line = lines[idx];
    if (line.rfind(key + " ", 0) != 0)
        throw ParseError("expected '" + key + " <value>'",
                         static_cast<int>(idx) + 1, 0);
    try {
        size_t pos = 0;
        int v = std::stoi(line.substr(key.size() + 1), &pos);
        if (v < 1) throw std::invalid_argument("non-positive");
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid integer in '" + key + "' header",
                         static_cast<int>(idx) + 1, 0);
    }
}

}  // namespace

GridMap parse_movingai_map(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0].rfind("type", 0) != 0)
        throw ParseError("expected 'type <t>' header", 1, 0);
    const int height = parse_header_int(lines, 1, "height");
    const int width = parse_header_int(lines, 2, "width");
    if (lines.size() <= 3 || lines[3] != "map")
        throw ParseError("expected 'map' header line", 4, 0);

    GridMap map(height, width);
    for (int r = 0; r < height; ++r) {
        const size_t line_idx = 4 + static_cast<size_t>(r);
        if (line_idx >= lines.size())
            throw ParseError("map body ended early: expected " +
                                 std::to_string(height) + " rows",
                             static_cast<int>(line_idx) + 1, 0);
        const std::string& row = lines[line_idx];
        if (static_cast<int>(row.size()) != width)
            throw ParseError("row has " + std::to_string(row.size()) +
                                 " symbols, header claims width " +
                                 std::to_string(width),
                             static_cast<int>(line_idx) + 1, 0);
        for (int c = 0; c < width; ++c) {
            switch (row[c]) {
                case '.':
                case 'G':
                    break;
                case '@':
                case 'O':
                case 'T':
                    map.set({r, c}, Tile::Obstacle);
                    break;
                default:
                    throw ParseError(std::string("unknown map symbol '") +
                                         row[c] + "'",
                                     static_cast<int>(line_idx) + 1, c + 1);
            }
        }
    }
    for (size_t i = 4 + static_cast<size_t>(height); i < lines.size(); ++i) {
        if (!lines[i].empty())
            throw ParseError("unexpected content after map body",
                             static_cast<int>(i) + 1, 0);
    }
    return map;
}

std::string to_movingai(const GridMap& map) {
    std::ostringstream out;
    out << "type octile\nheight " << map.height() << "\nwidth " << map.width()
        << "\nmap\n";
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c)
            out << (map.at({r, c}) == Tile::Free ? '.' : '@');
        out << '\n';
    }
    return out.str();
}

bool connected(const GridMap& map, Cell a, Cell b) {
    if (!map.in_bounds(a) || !map.in_bounds(b))
        throw std::invalid_argument("connected(): coordinate out of bounds");
    if (map.at(a) != Tile::Free || map.at(b) != Tile::Free) return false;
    if (a == b) return true;

    std::vector<char> seen(map.cell_count(), 0);
    std::deque<Cell> queue{a};
    seen[map.index(a)] = 1;
    while (!queue.empty()) {
        Cell cur = queue.front();
        queue.pop_front();
        for (Action act : kMoveActions) {
            Cell n = apply_action(cur, act);
            if (!map.is_free(n) || seen[map.index(n)]) continue;
            if (n == b) return true;
            seen[map.index(n)] = 1;
            queue.push_back(n);
        }
    }
    return false;
}

ComponentLabels::ComponentLabels(const GridMap& map)
    : width_(map.width()), count_(0), labels_(map.cell_count(), -1) {
    std::deque<Cell> queue;
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            Cell seed{r, c};
            if (!map.is_free(seed) || labels_[map.index(seed)] >= 0) continue;
            const int id = count_++;
            sizes_.push_back(0);
            cells_.emplace_back();
            labels_[map.index(seed)] = id;
            queue.push_back(seed);
            while (!queue.empty()) {
                Cell cur = queue.front();
                queue.pop_front();
                ++sizes_[id];
                cells_[id].push_back(cur);
                for (Action act : kMoveActions) {
                    Cell n = apply_action(cur, act);
                    if (!map.is_free(n) || labels_[map.index(n)] >= 0) continue;
                    labels_[map.index(n)] = id;
                    queue.push_back(n);
                }
            }
        }
    }
}

}  // namespace lmapf
