// Grid mazes as polyhedral models: unit squares split into two triangles,
// every face of a square's triangles labeled with the square's class.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyreach/complex.hpp"

namespace polyreach {

enum class Room : unsigned char { White, Gray, Red, Green, Corridor };

std::string room_name(Room r);

struct MazeGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    // Row-major, index y * width + x.
    std::vector<Room> cells;

    Room at(std::size_t x, std::size_t y) const { return cells.at(y * width + x); }
    Room& at(std::size_t x, std::size_t y) { return cells.at(y * width + x); }
};

// Relative weights; white takes the remainder up to 1.
struct MazeDensities {
    double red = 0.1;
    double green = 0.1;
    double gray = 0.3;
    double corridor = 0.1;
};

MazeGrid random_maze_grid(std::size_t width, std::size_t height, std::uint64_t seed, const MazeDensities& d);

// Red block on the left behind a gray moat, green block on the right and a
// corridor between them along row height/2 - 1; the rest is random white or
// gray. With `walled`, the corridor is gray. Needs width >= 6, height >= 4.
MazeGrid demo_maze_grid(std::size_t width, std::size_t height, std::uint64_t seed, bool walled);

// Vertex (i, j) is named v{i}_{j}. Square (x, y) has lower triangle
// (x,y)(x+1,y)(x+1,y+1) and upper triangle (x,y)(x+1,y+1)(x,y+1).
PolyhedralModel maze_model(const MazeGrid& grid);

PolyhedralModel maze_generate(std::size_t width, std::size_t height, std::uint64_t seed, const MazeDensities& d);

// Simplex of triangle `which` (0 lower, 1 upper) of square (x, y).
SimplexId maze_triangle(const PolyhedralModel& maze, std::size_t x, std::size_t y, int which);

// red & gamma(red | corridor | white, green)
Formula fig1_formula();

} // namespace polyreach
