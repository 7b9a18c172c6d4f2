#include "polyreach/complex.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "polyreach/chains.hpp"
#include "polyreach/parser.hpp"

namespace polyreach {

namespace {

bool affinely_independent(const SimplicialComplex& k, const VertexSet& vs) {
    if (vs.size() <= 1) return true;
    const auto cols = static_cast<Eigen::Index>(vs.size() - 1);
    const auto rows = static_cast<Eigen::Index>(k.ambient_dimension());
    if (cols > rows) return false;
    Eigen::MatrixXd d(rows, cols);
    for (Eigen::Index i = 0; i < cols; ++i) d.col(i) = k.scaled(vs[static_cast<std::size_t>(i) + 1]) - k.scaled(vs[0]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
    return svd.singularValues().minCoeff() > kGeomTolerance;
}

std::string brace_list(const SimplicialComplex& k, const VertexSet& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += k.vertex_id(vs[i]);
    }
    return out + "}";
}

std::string brace_list(const std::vector<std::string>& ids, const VertexSet& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += ids[vs[i]];
    }
    return out + "}";
}

template <typename Fn>
void for_each_face(const VertexSet& vs, Fn&& fn) {
    const auto n = vs.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) face.push_back(vs[i]);
        fn(face);
    }
}

// Barycentric coordinates of a scaled point against scaled vertices.
std::pair<Eigen::VectorXd, double> scaled_barycentric(const SimplicialComplex& k, const VertexSet& vs,
                                                      const Point& sx) {
    const auto cols = static_cast<Eigen::Index>(vs.size() - 1);
    Eigen::VectorXd lambda(cols + 1);
    if (cols == 0) {
        lambda(0) = 1.0;
        return {lambda, (sx - k.scaled(vs[0])).norm()};
    }
    Eigen::MatrixXd d(sx.size(), cols);
    for (Eigen::Index i = 0; i < cols; ++i) d.col(i) = k.scaled(vs[static_cast<std::size_t>(i) + 1]) - k.scaled(vs[0]);
    Eigen::VectorXd rhs = sx - k.scaled(vs[0]);
    Eigen::VectorXd mu = d.colPivHouseholderQr().solve(rhs);
    lambda(0) = 1.0 - mu.sum();
    lambda.tail(cols) = mu;
    return {lambda, (d * mu - rhs).norm()};
}

constexpr std::size_t kMaxSimplexVertices = 24;

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::build(std::vector<std::string> vertex_ids, std::vector<Point> coords,
                                           const std::vector<VertexSet>& simplices) {
    if (vertex_ids.size() != coords.size()) throw GeometryError("vertex id and coordinate counts differ");
    SimplicialComplex k;
    k.ids_ = std::move(vertex_ids);
    k.coords_ = std::move(coords);
    std::set<std::string_view> seen;
    for (const auto& id : k.ids_) {
        if (!is_identifier(id)) throw GeometryError("invalid vertex id '" + id + "'");
        if (!seen.insert(id).second) throw GeometryError("duplicate vertex id '" + id + "'");
    }
    if (!k.coords_.empty()) {
        k.ambient_ = static_cast<std::size_t>(k.coords_[0].size());
        if (k.ambient_ == 0) throw GeometryError("vertices need at least one coordinate");
        for (std::size_t v = 0; v < k.coords_.size(); ++v) {
            if (static_cast<std::size_t>(k.coords_[v].size()) != k.ambient_)
                throw GeometryError("vertex '" + k.ids_[v] + "' has a different number of coordinates");
        }
        Point lo = k.coords_[0], hi = k.coords_[0];
        for (const auto& c : k.coords_) {
            lo = lo.cwiseMin(c);
            hi = hi.cwiseMax(c);
        }
        k.origin_ = lo;
        double extent = (hi - lo).maxCoeff();
        k.scale_ = extent > 0 ? extent : 1.0;
        for (const auto& c : k.coords_) k.scaled_.push_back(k.scale_point(c));
    }

    std::set<VertexSet> all;
    for (auto vs : simplices) {
        if (vs.empty()) throw GeometryError("empty simplex");
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw GeometryError("repeated vertex in simplex");
        if (vs.back() >= k.ids_.size()) throw GeometryError("simplex refers to an unknown vertex");
        if (vs.size() > kMaxSimplexVertices) throw GeometryError("simplex has too many vertices");
        if (all.count(vs)) continue;
        if (!affinely_independent(k, vs))
            throw GeometryError("simplex " + brace_list(k, vs) + " is not affinely independent");
        for_each_face(vs, [&](const VertexSet& f) { all.insert(f); });
    }
    k.simplices_.assign(all.begin(), all.end());
    std::stable_sort(k.simplices_.begin(), k.simplices_.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    k.index();
    return k;
}

void SimplicialComplex::index() {
    lookup_.clear();
    labels_.clear();
    by_label_.clear();
    std::map<std::string, std::size_t> concat_count;
    std::vector<std::string> concat, plus;
    for (SimplexId s = 0; s < simplices_.size(); ++s) {
        lookup_.emplace(simplices_[s], s);
        std::vector<std::string> names;
        for (auto v : simplices_[s]) names.push_back(ids_[v]);
        std::sort(names.begin(), names.end());
        std::string c, p;
        for (std::size_t i = 0; i < names.size(); ++i) {
            c += names[i];
            if (i) p += '+';
            p += names[i];
        }
        ++concat_count[c];
        concat.push_back(std::move(c));
        plus.push_back(std::move(p));
    }
    // Concatenation is ambiguous if it collides with another simplex's
    // concatenation or with a different simplex's '+' form.
    bool ambiguous = false;
    for (const auto& [c, n] : concat_count)
        if (n > 1) ambiguous = true;
    for (SimplexId s = 0; s < simplices_.size(); ++s) by_label_.emplace(plus[s], s);
    for (SimplexId s = 0; s < simplices_.size() && !ambiguous; ++s) {
        auto it = by_label_.find(concat[s]);
        if (it != by_label_.end() && it->second != s) ambiguous = true;
    }
    for (SimplexId s = 0; s < simplices_.size(); ++s) {
        labels_.push_back(ambiguous ? plus[s] : concat[s]);
        if (!ambiguous) by_label_.emplace(concat[s], s);
    }
}

int SimplicialComplex::dimension() const noexcept {
    return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::optional<std::size_t> SimplicialComplex::find_vertex(std::string_view id) const {
    for (std::size_t v = 0; v < ids_.size(); ++v)
        if (ids_[v] == id) return v;
    return std::nullopt;
}

std::optional<SimplexId> SimplicialComplex::find(const VertexSet& vs) const {
    auto it = lookup_.find(vs);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<SimplexId> SimplicialComplex::find_label(std::string_view label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

std::vector<SimplexId> SimplicialComplex::maximal_simplices() const {
    std::vector<bool> covered(simplices_.size(), false);
    for (SimplexId s = 0; s < simplices_.size(); ++s) {
        const auto& vs = simplices_[s];
        for (std::size_t drop = 0; drop < vs.size() && vs.size() > 1; ++drop) {
            VertexSet f = vs;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
            covered[lookup_.at(f)] = true;
        }
    }
    std::vector<SimplexId> out;
    for (SimplexId s = 0; s < simplices_.size(); ++s)
        if (!covered[s]) out.push_back(s);
    return out;
}

Point SimplicialComplex::barycenter(SimplexId s) const {
    const auto& vs = simplices_.at(s);
    Point c = Point::Zero(static_cast<Eigen::Index>(ambient_));
    for (auto v : vs) c += coords_[v];
    return c / static_cast<double>(vs.size());
}

bool SimplicialComplex::is_face(SimplexId tau, SimplexId sigma) const {
    const auto& a = simplices_.at(tau);
    const auto& b = simplices_.at(sigma);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Point SimplicialComplex::scale_point(const Point& x) const {
    if (static_cast<std::size_t>(x.size()) != ambient_) throw GeometryError("point has the wrong dimension");
    return (x - origin_) / scale_;
}

PreorderModel face_poset(const SimplicialComplex& k) {
    const auto n = k.size();
    std::vector<std::string> names;
    std::vector<WorldSet> rel(n, WorldSet(n));
    for (SimplexId s = 0; s < n; ++s) {
        names.push_back(k.label(s));
        for_each_face(k.simplices()[s], [&](const VertexSet& f) { rel[*k.find(f)].set(s); });
    }
    return PreorderModel::from_relation(std::move(names), std::move(rel), {});
}

PreorderModel companion(const PolyhedralModel& x) {
    const auto& k = x.complex;
    auto fp = face_poset(k);
    std::map<std::string, WorldSet> val;
    for (const auto& [atom, cells] : x.valuation) {
        WorldSet s(k.size());
        for (auto c : cells) s.set(c);
        val.emplace(atom, std::move(s));
    }
    return PreorderModel::from_relation(fp.names(), fp.up_sets(), std::move(val));
}

std::pair<Eigen::VectorXd, double> barycentric(const SimplicialComplex& k, SimplexId s, const Point& x) {
    return scaled_barycentric(k, k.simplices().at(s), k.scale_point(x));
}

Cell cell_of(const SimplicialComplex& k, const Point& x) {
    Point sx = k.scale_point(x);
    std::vector<Cell> interior;
    bool in_closed = false;
    for (SimplexId s = 0; s < k.size(); ++s) {
        const auto& vs = k.simplices()[s];
        bool box = true;
        for (Eigen::Index d = 0; d < sx.size() && box; ++d) {
            double lo = k.scaled(vs[0])(d), hi = lo;
            for (auto v : vs) {
                lo = std::min(lo, k.scaled(v)(d));
                hi = std::max(hi, k.scaled(v)(d));
            }
            if (sx(d) < lo - kGeomTolerance || sx(d) > hi + kGeomTolerance) box = false;
        }
        if (!box) continue;
        auto [lambda, residual] = barycentric(k, s, x);
        if (residual > kGeomTolerance || lambda.minCoeff() < -kGeomTolerance) continue;
        in_closed = true;
        if (lambda.minCoeff() > kGeomTolerance) interior.push_back({s, lambda});
    }
    if (!in_closed) throw GeometryError("point lies outside the polyhedron");
    if (interior.size() != 1) {
        std::string which;
        for (const auto& c : interior) which += (which.empty() ? "" : ", ") + k.label(c.simplex);
        throw GeometryError("ambiguous cell for point within tolerance of a cell boundary" +
                            (which.empty() ? std::string() : " (candidates: " + which + ")"));
    }
    return interior.front();
}

WorldSet evaluate_cells(const PolyhedralModel& x, const Formula& f, const EvalOptions& opts) {
    return evaluate(companion(x), f, opts);
}

bool evaluate_polyhedral(const PolyhedralModel& x, const Formula& f, const Point& p) {
    auto cell = cell_of(x.complex, p);
    return evaluate_cells(x, f).test(cell.simplex);
}

PolyhedralModel realize(const PreorderModel& poset) {
    const auto n = poset.size();
    auto chains = enumerate_chains(poset);
    bool plain = true;
    for (const auto& name : poset.names()) plain = plain && is_identifier(name);
    std::vector<std::string> ids;
    std::vector<Point> coords;
    for (WorldId w = 0; w < n; ++w) {
        ids.push_back(plain ? poset.name(w) : "e" + std::to_string(w));
        coords.push_back(Point::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(w)));
    }
    std::vector<VertexSet> simplices;
    for (auto c : chains) {
        std::sort(c.begin(), c.end());
        simplices.push_back(std::move(c));
    }
    PolyhedralModel x;
    x.complex = SimplicialComplex::build(std::move(ids), std::move(coords), simplices);
    for (const auto& [atom, ws] : poset.valuations()) {
        auto& cells = x.valuation[atom];
        for (const auto& c : chains) {
            if (!ws.test(c.back())) continue;
            VertexSet vs = c;
            std::sort(vs.begin(), vs.end());
            cells.insert(*x.complex.find(vs));
        }
    }
    return x;
}

std::vector<Point> path_witness_poly(const SimplicialComplex& k, const Point& x, const Point& y,
                                     const std::vector<SimplexId>& through) {
    UpDownPath path;
    path.worlds.push_back(cell_of(k, x).simplex);
    for (auto s : through) {
        if (s >= k.size()) throw GeometryError("unknown simplex in path");
        path.worlds.push_back(s);
    }
    path.worlds.push_back(cell_of(k, y).simplex);
    auto fp = face_poset(k);
    if (!check_path(fp, path, fp.all()))
        throw GeometryError("cells " + format_path(fp, path) + " do not form an up-down path in the face poset");
    std::vector<Point> out{x};
    for (auto s : through) out.push_back(k.barycenter(s));
    out.push_back(y);
    return out;
}

RawComplex parse_complex_raw(std::string_view text) {
    RawComplex raw;
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> simplex_lines;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        std::vector<std::string> args;
        for (std::string a; ls >> a;) args.push_back(a);
        if (directive == "vertex") {
            if (args.size() < 2) throw FormatError("vertex expects an id and coordinates", lineno);
            if (!is_identifier(args[0])) throw FormatError("invalid vertex id '" + args[0] + "'", lineno);
            if (!index.emplace(args[0], raw.vertex_ids.size()).second)
                throw FormatError("duplicate vertex id '" + args[0] + "'", lineno);
            Point p(static_cast<Eigen::Index>(args.size() - 1));
            for (std::size_t i = 1; i < args.size(); ++i) {
                char* end = nullptr;
                double v = std::strtod(args[i].c_str(), &end);
                if (end != args[i].c_str() + args[i].size() || !std::isfinite(v))
                    throw FormatError("invalid coordinate '" + args[i] + "'", lineno);
                p(static_cast<Eigen::Index>(i - 1)) = v;
            }
            if (!raw.coords.empty() && raw.coords[0].size() != p.size())
                throw FormatError("vertex '" + args[0] + "' has a different number of coordinates", lineno);
            raw.vertex_ids.push_back(args[0]);
            raw.coords.push_back(std::move(p));
        } else if (directive == "simplex") {
            if (args.empty()) throw FormatError("simplex expects vertex ids", lineno);
            simplex_lines.emplace_back(std::move(args), lineno);
        } else if (directive == "valuation") {
            if (args.empty()) throw FormatError("valuation expects an atom name", lineno);
            if (args[0] == Formula::kTruthAtom || !is_identifier(args[0]))
                throw FormatError("invalid atom name '" + args[0] + "'", lineno);
            std::string atom = args[0];
            args.erase(args.begin());
            raw.valuation.emplace_back(std::move(atom), std::move(args));
            raw.valuation_lines.push_back(lineno);
        } else {
            throw FormatError("unknown directive '" + directive + "'", lineno);
        }
    }
    for (const auto& [names, l] : simplex_lines) {
        VertexSet vs;
        for (const auto& n : names) {
            auto it = index.find(n);
            if (it == index.end()) throw FormatError("unknown vertex id '" + n + "'", l);
            vs.push_back(it->second);
        }
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw FormatError("repeated vertex in simplex", l);
        if (vs.size() > kMaxSimplexVertices) throw FormatError("simplex has too many vertices", l);
        raw.simplices.push_back(std::move(vs));
    }
    return raw;
}

PolyhedralModel parse_complex(std::string_view text) {
    auto raw = parse_complex_raw(text);
    PolyhedralModel x;
    x.complex = SimplicialComplex::build(raw.vertex_ids, raw.coords, raw.simplices);
    for (std::size_t i = 0; i < raw.valuation.size(); ++i) {
        const auto& [atom, names] = raw.valuation[i];
        auto& cells = x.valuation[atom];
        for (const auto& n : names) {
            auto s = x.complex.find_label(n);
            if (!s) throw FormatError("unknown simplex '" + n + "'", raw.valuation_lines[i]);
            cells.insert(*s);
        }
    }
    return x;
}

PolyhedralModel load_complex(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_complex(ss.str());
}

std::string write_complex(const PolyhedralModel& x) {
    const auto& k = x.complex;
    std::ostringstream out;
    out << std::setprecision(17);
    for (std::size_t v = 0; v < k.vertex_count(); ++v) {
        out << "vertex " << k.vertex_id(v);
        for (Eigen::Index d = 0; d < k.coord(v).size(); ++d) out << ' ' << k.coord(v)(d);
        out << '\n';
    }
    for (SimplexId s = 0; s < k.size(); ++s) {
        out << "simplex";
        for (auto v : k.simplices()[s]) out << ' ' << k.vertex_id(v);
        out << '\n';
    }
    for (const auto& [atom, cells] : x.valuation) {
        out << "valuation " << atom;
        for (auto c : cells) out << ' ' << k.label(c);
        out << '\n';
    }
    return out.str();
}

std::vector<AuditIssue> geometric_audit(const SimplicialComplex& k) {
    std::vector<AuditIssue> issues;
    const auto m = static_cast<Eigen::Index>(k.ambient_dimension());
    auto maxima = k.maximal_simplices();
    auto bbox = [&](SimplexId s) {
        const auto& vs = k.simplices()[s];
        Point lo = k.scaled(vs[0]), hi = lo;
        for (auto v : vs) {
            lo = lo.cwiseMin(k.scaled(v));
            hi = hi.cwiseMax(k.scaled(v));
        }
        return std::pair{lo, hi};
    };
    std::vector<std::pair<Point, Point>> boxes;
    for (auto s : maxima) boxes.push_back(bbox(s));

    for (std::size_t i = 0; i < maxima.size(); ++i) {
        for (std::size_t j = i + 1; j < maxima.size(); ++j) {
            const auto& [lo1, hi1] = boxes[i];
            const auto& [lo2, hi2] = boxes[j];
            if (((lo1.array() - kGeomTolerance) > hi2.array()).any() ||
                ((lo2.array() - kGeomTolerance) > hi1.array()).any())
                continue;
            const auto& s1 = k.simplices()[maxima[i]];
            const auto& s2 = k.simplices()[maxima[j]];
            auto shared = intersect(s1, s2);
            bool reported = false;
            for_each_face(s1, [&](const VertexSet& a) {
                if (reported) return;
                for_each_face(s2, [&](const VertexSet& b) {
                    if (reported) return;
                    const auto na = static_cast<Eigen::Index>(a.size());
                    const auto nb = static_cast<Eigen::Index>(b.size());
                    if (na + nb - 2 > m) return;
                    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m + 2, na + nb);
                    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 2);
                    for (Eigen::Index c = 0; c < na; ++c) {
                        sys.block(0, c, m, 1) = k.scaled(a[static_cast<std::size_t>(c)]);
                        sys(m, c) = 1.0;
                    }
                    for (Eigen::Index c = 0; c < nb; ++c) {
                        sys.block(0, na + c, m, 1) = -k.scaled(b[static_cast<std::size_t>(c)]);
                        sys(m + 1, na + c) = 1.0;
                    }
                    rhs(m) = rhs(m + 1) = 1.0;
                    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys);
                    qr.setThreshold(kGeomTolerance);
                    if (qr.rank() < na + nb) return;
                    Eigen::VectorXd sol = qr.solve(rhs);
                    if ((sys * sol - rhs).norm() > kGeomTolerance || sol.minCoeff() < -kGeomTolerance) return;
                    Point p = Point::Zero(m);
                    for (Eigen::Index c = 0; c < na; ++c) p += sol(c) * k.scaled(a[static_cast<std::size_t>(c)]);
                    bool inside = false;
                    if (!shared.empty()) {
                        auto [lambda, residual] = scaled_barycentric(k, shared, p);
                        inside = residual <= kGeomTolerance && lambda.minCoeff() >= -kGeomTolerance;
                    }
                    if (!inside) {
                        issues.push_back({"intersection", "simplices " + brace_list(k, s1) + " and " +
                                                              brace_list(k, s2) +
                                                              " meet outside their common face " +
                                                              brace_list(k, shared)});
                        reported = true;
                    }
                });
            });
        }
    }
    return issues;
}

std::vector<AuditIssue> audit_complex(const RawComplex& raw, bool geometric) {
    std::vector<AuditIssue> issues;
    std::set<VertexSet> given(raw.simplices.begin(), raw.simplices.end());
    std::set<VertexSet> missing;
    for (const auto& vs : given) {
        for_each_face(vs, [&](const VertexSet& f) {
            if (!given.count(f) && missing.insert(f).second)
                issues.push_back({"missing-face", "face " + brace_list(raw.vertex_ids, f) + " of " +
                                                      brace_list(raw.vertex_ids, vs) + " is not a simplex"});
        });
    }
    std::vector<VertexSet> list(given.begin(), given.end());
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            auto shared = intersect(list[i], list[j]);
            if (!shared.empty() && !given.count(shared) && missing.insert(shared).second)
                issues.push_back({"intersection", "common part " + brace_list(raw.vertex_ids, shared) + " of " +
                                                      brace_list(raw.vertex_ids, list[i]) + " and " +
                                                      brace_list(raw.vertex_ids, list[j]) + " is not a simplex"});
        }

    // Affine independence, using a complex over the vertices only.
    SimplicialComplex verts;
    try {
        std::vector<VertexSet> points;
        for (std::size_t v = 0; v < raw.vertex_ids.size(); ++v) points.push_back({v});
        verts = SimplicialComplex::build(raw.vertex_ids, raw.coords, points);
    } catch (const GeometryError& e) {
        issues.push_back({"vertices", e.what()});
        return issues;
    }
    bool independent = true;
    for (const auto& vs : given) {
        if (!affinely_independent(verts, vs)) {
            independent = false;
            issues.push_back({"affine", "simplex " + brace_list(raw.vertex_ids, vs) + " is not affinely independent"});
        }
    }
    if (geometric && independent) {
        auto k = SimplicialComplex::build(raw.vertex_ids, raw.coords, raw.simplices);
        auto more = geometric_audit(k);
        issues.insert(issues.end(), more.begin(), more.end());
    }
    return issues;
}

} // namespace polyreach
