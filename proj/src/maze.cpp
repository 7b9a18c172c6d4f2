#include "polyreach/maze.hpp"

#include <random>
#include <stdexcept>

#include "polyreach/parser.hpp"

namespace polyreach {

namespace {

std::string vertex_name(std::size_t i, std::size_t j) {
    return "v" + std::to_string(i) + "_" + std::to_string(j);
}

std::size_t vertex_index(const MazeGrid& g, std::size_t i, std::size_t j) { return j * (g.width + 1) + i; }

VertexSet triangle(const MazeGrid& g, std::size_t x, std::size_t y, int which) {
    auto a = vertex_index(g, x, y), b = vertex_index(g, x + 1, y);
    auto c = vertex_index(g, x + 1, y + 1), d = vertex_index(g, x, y + 1);
    VertexSet vs = which == 0 ? VertexSet{a, b, c} : VertexSet{a, c, d};
    std::sort(vs.begin(), vs.end());
    return vs;
}

} // namespace

std::string room_name(Room r) {
    switch (r) {
    case Room::White: return "white";
    case Room::Gray: return "gray";
    case Room::Red: return "red";
    case Room::Green: return "green";
    case Room::Corridor: return "corridor";
    }
    return "white";
}

MazeGrid random_maze_grid(std::size_t width, std::size_t height, std::uint64_t seed, const MazeDensities& d) {
    if (width == 0 || height == 0) throw std::invalid_argument("maze dimensions must be at least 1");
    MazeGrid g{width, height, std::vector<Room>(width * height, Room::White)};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& c : g.cells) {
        double r = u(rng);
        if ((r -= d.red) < 0) c = Room::Red;
        else if ((r -= d.green) < 0) c = Room::Green;
        else if ((r -= d.gray) < 0) c = Room::Gray;
        else if ((r -= d.corridor) < 0) c = Room::Corridor;
        else c = Room::White;
    }
    return g;
}

MazeGrid demo_maze_grid(std::size_t width, std::size_t height, std::uint64_t seed, bool walled) {
    if (width < 6 || height < 4) throw std::invalid_argument("demo maze needs width >= 6 and height >= 4");
    MazeDensities bg{0.0, 0.0, 0.35, 0.0};
    auto g = random_maze_grid(width, height, seed, bg);
    const std::size_t r = height / 2 - 1;
    for (std::size_t y = r; y <= r + 1; ++y) {
        g.at(0, y) = g.at(1, y) = Room::Red;
        g.at(width - 2, y) = g.at(width - 1, y) = Room::Green;
    }
    for (std::size_t y = r == 0 ? 0 : r - 1; y <= std::min(r + 2, height - 1); ++y) g.at(2, y) = Room::Gray;
    for (std::size_t x = 0; x < 2; ++x) {
        if (r >= 1) g.at(x, r - 1) = Room::Gray;
        if (r + 2 < height) g.at(x, r + 2) = Room::Gray;
    }
    for (std::size_t x = 2; x + 3 <= width; ++x) g.at(x, r) = walled ? Room::Gray : Room::Corridor;
    return g;
}

PolyhedralModel maze_model(const MazeGrid& g) {
    if (g.width == 0 || g.height == 0 || g.cells.size() != g.width * g.height)
        throw std::invalid_argument("malformed maze grid");
    std::vector<std::string> ids;
    std::vector<Point> coords;
    for (std::size_t j = 0; j <= g.height; ++j)
        for (std::size_t i = 0; i <= g.width; ++i) {
            ids.push_back(vertex_name(i, j));
            coords.push_back(Point{{static_cast<double>(i), static_cast<double>(j)}});
        }
    std::vector<VertexSet> tris;
    for (std::size_t y = 0; y < g.height; ++y)
        for (std::size_t x = 0; x < g.width; ++x)
            for (int w = 0; w < 2; ++w) tris.push_back(triangle(g, x, y, w));
    PolyhedralModel m;
    m.complex = SimplicialComplex::build(std::move(ids), std::move(coords), tris);
    for (auto r : {Room::White, Room::Gray, Room::Red, Room::Green, Room::Corridor}) m.valuation[room_name(r)];
    for (std::size_t y = 0; y < g.height; ++y)
        for (std::size_t x = 0; x < g.width; ++x) {
            auto& cells = m.valuation[room_name(g.at(x, y))];
            for (int w = 0; w < 2; ++w) {
                const auto vs = triangle(g, x, y, w);
                for (std::uint32_t mask = 1; mask < 8; ++mask) {
                    VertexSet f;
                    for (std::size_t i = 0; i < 3; ++i)
                        if (mask >> i & 1U) f.push_back(vs[i]);
                    cells.insert(*m.complex.find(f));
                }
            }
        }
    return m;
}

PolyhedralModel maze_generate(std::size_t width, std::size_t height, std::uint64_t seed, const MazeDensities& d) {
    return maze_model(random_maze_grid(width, height, seed, d));
}

SimplexId maze_triangle(const PolyhedralModel& maze, std::size_t x, std::size_t y, int which) {
    const auto& k = maze.complex;
    auto a = k.find_vertex(vertex_name(x, y));
    auto b = k.find_vertex(vertex_name(x + 1, y));
    auto c = k.find_vertex(vertex_name(x + 1, y + 1));
    auto d = k.find_vertex(vertex_name(x, y + 1));
    if (!a || !b || !c || !d) throw std::out_of_range("square outside the maze");
    VertexSet vs = which == 0 ? VertexSet{*a, *b, *c} : VertexSet{*a, *c, *d};
    std::sort(vs.begin(), vs.end());
    auto s = k.find(vs);
    if (!s) throw std::out_of_range("square outside the maze");
    return *s;
}

Formula fig1_formula() { return parse_formula("red & gamma(red | corridor | white, green)"); }

} // namespace polyreach
