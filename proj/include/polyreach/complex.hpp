// Simplicial complexes in R^m, their face posets, and polyhedral models
// evaluated through the Kripke companion.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "polyreach/evaluate.hpp"
#include "polyreach/formula.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

// Absolute tolerance on coordinates scaled to the unit bounding box.
inline constexpr double kGeomTolerance = 1e-9;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Point = Eigen::VectorXd;
using SimplexId = std::size_t;
// Sorted vertex indices.
using VertexSet = std::vector<std::size_t>;

// Vertex and simplex lists as written, before face completion or checks.
struct RawComplex {
    std::vector<std::string> vertex_ids;
    std::vector<Point> coords;
    std::vector<VertexSet> simplices;
    // atom -> simplex names as written
    std::vector<std::pair<std::string, std::vector<std::string>>> valuation;
    std::vector<std::size_t> valuation_lines;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Adds every non-empty face of the given simplices, then validates
    // affine independence. Throws GeometryError.
    static SimplicialComplex build(std::vector<std::string> vertex_ids, std::vector<Point> coords,
                                   const std::vector<VertexSet>& simplices);

    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::size_t ambient_dimension() const noexcept { return ambient_; }
    // Largest simplex dimension, or -1 for the empty complex.
    int dimension() const noexcept;
    const std::string& vertex_id(std::size_t v) const { return ids_.at(v); }
    std::optional<std::size_t> find_vertex(std::string_view id) const;
    const Point& coord(std::size_t v) const { return coords_.at(v); }

    // Ordered by size, then lexicographically.
    const std::vector<VertexSet>& simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    std::optional<SimplexId> find(const VertexSet& vs) const;
    // Concatenated sorted vertex ids, or '+'-joined ids when concatenation
    // would be ambiguous in this complex.
    const std::string& label(SimplexId s) const { return labels_.at(s); }
    // Accepts both the concatenated and the '+'-joined form.
    std::optional<SimplexId> find_label(std::string_view label) const;
    std::vector<SimplexId> maximal_simplices() const;

    Point barycenter(SimplexId s) const;
    bool is_face(SimplexId tau, SimplexId sigma) const;

    // Coordinates after translating and uniformly scaling the bounding box
    // to unit size; all tolerance tests use these.
    const Point& scaled(std::size_t v) const { return scaled_.at(v); }
    Point scale_point(const Point& x) const;

private:
    void index();

    std::vector<std::string> ids_;
    std::vector<Point> coords_;
    std::vector<Point> scaled_;
    Point origin_;
    double scale_ = 1.0;
    std::size_t ambient_ = 0;
    std::vector<VertexSet> simplices_;
    std::map<VertexSet, SimplexId> lookup_;
    std::vector<std::string> labels_;
    std::map<std::string, SimplexId, std::less<>> by_label_;
};

struct PolyhedralModel {
    SimplicialComplex complex;
    std::map<std::string, std::set<SimplexId>> valuation;
};

// Simplices ordered by inclusion, worlds named by simplex labels.
PreorderModel face_poset(const SimplicialComplex& k);
// Face poset carrying the cell valuation.
PreorderModel companion(const PolyhedralModel& x);

struct Cell {
    SimplexId simplex;
    // Barycentric coordinates, aligned with the simplex's vertex list.
    Eigen::VectorXd lambda;
};

// Least-squares barycentric coordinates of x with respect to simplex s and
// the residual, both in scaled coordinates.
std::pair<Eigen::VectorXd, double> barycentric(const SimplicialComplex& k, SimplexId s, const Point& x);

// The unique simplex whose relative interior contains x. Throws
// GeometryError if x lies outside |K| or if the answer is not unique within
// tolerance.
Cell cell_of(const SimplicialComplex& k, const Point& x);

// Truth of f at the point x, defined through the companion at cell_of(x).
bool evaluate_polyhedral(const PolyhedralModel& x, const Formula& f, const Point& p);
// Same, reusing an already computed companion extension of f.
WorldSet evaluate_cells(const PolyhedralModel& x, const Formula& f, const EvalOptions& opts = {});

// Geometric realization of a poset model: vertex e_w for each world, one
// simplex per non-empty chain, valuation from the chain's maximum. Vertex i
// is world i, so a simplex's vertex set is its chain.
PolyhedralModel realize(const PreorderModel& poset);

// Breakpoints x, barycenters of `through` in order, y. The sequence
// (cell_of(x), through..., cell_of(y)) must be an up-down path of the face
// poset; throws GeometryError otherwise.
std::vector<Point> path_witness_poly(const SimplicialComplex& k, const Point& x, const Point& y,
                                     const std::vector<SimplexId>& through);

// Text format:
//   vertex v0 0.0 0.0
//   simplex v0 v1 v2
//   valuation red v0v1v2 v1
RawComplex parse_complex_raw(std::string_view text);
// Parses and completes faces.
PolyhedralModel parse_complex(std::string_view text);
PolyhedralModel load_complex(const std::string& path);
// Emits every simplex, so the output also passes the strict audit.
std::string write_complex(const PolyhedralModel& x);

struct AuditIssue {
    std::string kind;
    std::string detail;
};

// Structural audit without face completion: missing faces, affinely
// dependent simplices, combinatorial intersection condition. With
// `geometric`, additionally checks conv(s) & conv(t) = conv(s & t) for every
// pair of maximal simplices (ambient dimension <= 3).
std::vector<AuditIssue> audit_complex(const RawComplex& raw, bool geometric);

// Only the geometric part, on a valid complex.
std::vector<AuditIssue> geometric_audit(const SimplicialComplex& k);

} // namespace polyreach
