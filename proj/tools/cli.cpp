#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polyreach/axioms.hpp"
#include "polyreach/bounded_sat.hpp"
#include "polyreach/complex.hpp"
#include "polyreach/evaluate.hpp"
#include "polyreach/maze.hpp"
#include "polyreach/morphism.hpp"
#include "polyreach/nerve.hpp"
#include "polyreach/parser.hpp"
#include "polyreach/pipeline.hpp"

namespace polyreach::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void put(const std::string& key, const std::string& value) { out_ << key << '\t' << value << '\n'; }
    void put(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }
    void text(const std::string& key, const std::string& body) {
        std::istringstream in(body);
        for (std::string line; std::getline(in, line);) put(key, line);
    }

private:
    std::ostream& out_;
};

// 64-bit FNV-1a.
class Digest {
public:
    void add(std::string_view s) {
        for (unsigned char c : s) {
            h_ ^= c;
            h_ *= 0x100000001b3ULL;
        }
        h_ ^= 0xff;
        h_ *= 0x100000001b3ULL;
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << body)) throw InputError("cannot write '" + path + "'");
}

Formula parse(const std::string& text) {
    try {
        return parse_formula(text);
    } catch (const ParseError& e) {
        throw InputError("formula '" + text + "' position " + std::to_string(e.position()) + ": " + e.message());
    }
}

// First non-comment directive decides between the two file formats.
bool looks_like_complex(const std::string& body) {
    std::istringstream in(body);
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (ls >> directive) return directive == "vertex" || directive == "simplex";
    }
    return false;
}

struct Input {
    std::string body;
    PreorderModel model;
    std::optional<PolyhedralModel> complex;
};

Input load(const std::string& path, Digest& digest) {
    Input in;
    in.body = read_file(path);
    digest.add(in.body);
    if (looks_like_complex(in.body)) {
        in.complex = parse_complex(in.body);
        in.model = companion(*in.complex);
    } else {
        in.model = parse_model(in.body);
    }
    return in;
}

std::vector<Formula> load_formulas(const std::vector<std::string>& inline_formulas, const std::string& file,
                                   Digest& digest) {
    std::vector<Formula> out;
    for (const auto& f : inline_formulas) {
        digest.add(f);
        out.push_back(parse(f));
    }
    if (!file.empty()) {
        auto body = read_file(file);
        digest.add(body);
        std::istringstream in(body);
        std::size_t lineno = 0;
        for (std::string line; std::getline(in, line);) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                out.push_back(parse_formula(line));
            } catch (const ParseError& e) {
                throw InputError(file + " line " + std::to_string(lineno) + " position " +
                                 std::to_string(e.position()) + ": " + e.message());
            }
        }
    }
    return out;
}

WorldId world_of(const PreorderModel& m, const std::string& name) {
    auto w = m.find(name);
    if (!w) throw InputError("unknown world '" + name + "'");
    return *w;
}

// The gamma subformula whose witness explains truth of f: f itself or the
// first gamma conjunct along the conjunction spine.
std::optional<Formula> explained_reach(const Formula& f) {
    if (f.kind() == Kind::Reach) return f;
    if (f.kind() == Kind::And) {
        if (auto l = explained_reach(f.left())) return l;
        return explained_reach(f.right());
    }
    return std::nullopt;
}

void emit(Report& r, const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        r.text("output", body);
    } else {
        write_file(out_path, body);
        r.put("output-file", out_path);
    }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

struct Options {
    std::string path;
    std::string formula;
    std::string world;
    std::size_t max_worlds = 4;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string formulas_file;
    std::vector<std::string> formulas;
    bool geometric = false;
    std::size_t width = 8;
    std::size_t height = 8;
    std::string query;
    std::string layout = "random";
    std::string densities;
    bool witness = false;
    std::size_t instances = 40;
};

int cmd_check(const Options& o, Report& r) {
    Digest d;
    auto in = load(o.path, d);
    auto f = parse(o.formula);
    d.add(o.formula);
    const auto& m = in.model;
    std::optional<WorldId> at;
    if (!o.world.empty()) at = world_of(m, o.world);
    r.put("digest", d.hex());
    r.put("formula", to_string(f));
    auto ext = evaluate(m, f);
    r.put("extension", m.format_set(ext));
    r.put("valid", ext.count() == m.size() ? "true" : "false");
    auto reach = explained_reach(f);
    std::vector<WorldId> worlds;
    int code = kPass;
    if (at) {
        auto w = *at;
        r.put("world", o.world);
        r.put("holds", ext.test(w) ? "true" : "false");
        if (ext.test(w)) worlds.push_back(w);
        else code = kFail;
    } else {
        worlds = ext.members();
    }
    if (reach) {
        auto a = evaluate(m, reach->left());
        auto b = evaluate(m, reach->right());
        for (auto w : worlds) {
            auto p = witness_path(m, w, a, b);
            if (!p) throw std::logic_error("gamma holds without a witness path");
            r.put("witness", m.name(w) + " " + format_path(m, *p));
        }
    }
    r.put("status", code == kPass ? "pass" : "fail");
    return code;
}

int cmd_sat(const Options& o, Report& r) {
    if (o.max_worlds < 1) throw InputError("--max-worlds must be at least 1");
    auto f = parse(o.formula);
    Digest d;
    d.add(o.formula);
    r.put("digest", d.hex());
    r.put("formula", to_string(f));
    r.put("max-worlds", o.max_worlds);
    SatOptions so;
    so.max_worlds = o.max_worlds;
    auto res = bounded_sat(f, so);
    r.put("models-checked", std::to_string(res.models_checked));
    if (res.witness) {
        r.put("result", "SAT");
        r.put("world", res.witness->model.name(res.witness->world));
        r.put("worlds", res.witness->model.size());
        emit(r, o.out, write_model(res.witness->model));
    } else {
        r.put("result", "UNSAT-UP-TO " + std::to_string(res.searched_bound));
    }
    r.put("status", "pass");
    return kPass;
}

int cmd_nerve(const Options& o, Report& r) {
    Digest d;
    auto in = load(o.path, d);
    r.put("digest", d.hex());
    if (!in.model.is_poset()) throw InputError("nerve needs a poset model");
    auto n = nerve(in.model);
    auto text = write_model(n.model);
    auto again = parse_model(text);
    bool reparse = again.up_sets() == n.model.up_sets() && again.valuations() == n.model.valuations();
    auto mc = is_updown_morphism(n.max_map(), n.model, in.model);
    r.put("worlds", n.model.size());
    r.put("max-morphism", mc.ok ? "pass" : "fail " + mc.clause + ": " + mc.witness);
    r.put("reparse", reparse ? "pass" : "fail");
    emit(r, o.out, text);
    bool ok = mc.ok && reparse;
    r.put("status", ok ? "pass" : "fail");
    return ok ? kPass : kFail;
}

int cmd_cut(const Options& o, Report& r) {
    Digest d;
    auto in = load(o.path, d);
    r.put("digest", d.hex());
    auto c = cut(in.model);
    auto text = write_model(c);
    bool reparse = parse_model(text).up_sets() == c.up_sets();
    r.put("worlds", c.size());
    r.put("poset", c.is_poset() ? "true" : "false");
    r.put("reparse", reparse ? "pass" : "fail");
    emit(r, o.out, text);
    bool ok = reparse && c.is_poset();
    r.put("status", ok ? "pass" : "fail");
    return ok ? kPass : kFail;
}

int cmd_filtrate(const Options& o, Report& r) {
    Digest d;
    auto in = load(o.path, d);
    auto fs = load_formulas(o.formulas, o.formulas_file, d);
    if (fs.empty()) throw InputError("filtrate needs at least one formula");
    r.put("digest", d.hex());
    auto sigma = adequate_closure({fs.begin(), fs.end()});
    auto cm = filtrate(in.model, sigma);
    r.put("sigma", sigma.size());
    r.put("classes", cm.theories.size());
    std::size_t failures = 0;
    for (const auto& s : sigma.members) {
        auto src = evaluate(in.model, s), dst = evaluate(cm.model, s);
        for (WorldId w = 0; w < in.model.size(); ++w)
            if (src.test(w) != dst.test(cm.class_map[w])) {
                if (++failures <= 5) r.put("preservation-failure", to_string(s) + " at " + in.model.name(w));
            }
    }
    r.put("preservation", failures ? "fail" : "pass");
    auto text = write_model(cm.model);
    bool reparse = parse_model(text).up_sets() == cm.model.up_sets();
    r.put("reparse", reparse ? "pass" : "fail");
    emit(r, o.out, text);
    bool ok = !failures && reparse;
    r.put("status", ok ? "pass" : "fail");
    return ok ? kPass : kFail;
}

int cmd_pipeline(const Options& o, Report& r) {
    Digest d;
    auto in = load(o.path, d);
    auto fs = load_formulas(o.formulas, o.formulas_file, d);
    if (fs.empty()) throw InputError("pipeline needs at least one formula");
    r.put("digest", d.hex());
    auto res = plr_pipeline(in.model, {fs.begin(), fs.end()});
    const auto& rep = res.report;
    r.put("closure", rep.closure_size);
    r.put("hat", rep.hat_size);
    r.put("classes", rep.classes);
    r.put("output-poset", rep.output_is_poset ? "true" : "false");
    r.put("preservation-checks", rep.checks);
    r.put("preservation", rep.failures.empty() ? "pass" : "fail");
    for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i)
        r.put("preservation-failure", to_string(rep.failures[i].formula) + " at " +
                                          in.model.name(rep.failures[i].world));
    r.put("witnesses-checked", rep.witnesses_checked);
    r.put("normalized-witness", rep.witness_failures.empty() ? "pass" : "fail");
    for (std::size_t i = 0; i < rep.witness_failures.size() && i < 5; ++i)
        r.put("witness-failure", to_string(rep.witness_failures[i].formula) + " at " +
                                     res.output.name(rep.witness_failures[i].class_index));
    auto text = write_model(res.output);
    bool reparse = parse_model(text).up_sets() == res.output.up_sets();
    r.put("reparse", reparse ? "pass" : "fail");
    emit(r, o.out, text);
    if (rep.advisory) {
        r.put("advisory", "input is not a poset; preservation is reported, not asserted");
        r.put("status", rep.ok() && reparse ? "pass" : "advisory-fail");
        return reparse ? kPass : kFail;
    }
    bool ok = rep.ok() && reparse;
    r.put("status", ok ? "pass" : "fail");
    return ok ? kPass : kFail;
}

int cmd_realize(const Options& o, Report& r) {
    Digest d;
    auto in = load(o.path, d);
    r.put("digest", d.hex());
    if (!in.model.is_poset()) throw InputError("realize needs a poset model");
    auto x = realize(in.model);
    auto text = write_complex(x);
    auto again = parse_complex(text);
    bool reparse = again.complex.simplices() == x.complex.simplices() && again.valuation == x.valuation;
    // Face poset against the nerve, by vertex set = chain.
    auto n = nerve(in.model);
    auto fp = face_poset(x.complex);
    bool iso = fp.size() == n.model.size();
    std::vector<std::size_t> to_simplex;
    for (std::size_t c = 0; c < n.chains.size() && iso; ++c) {
        auto vs = n.chains[c];
        std::sort(vs.begin(), vs.end());
        auto s = x.complex.find(vs);
        if (!s) iso = false;
        else to_simplex.push_back(*s);
    }
    for (std::size_t a = 0; a < to_simplex.size() && iso; ++a)
        for (std::size_t b = 0; b < to_simplex.size() && iso; ++b)
            if (n.model.leq(a, b) != fp.leq(to_simplex[a], to_simplex[b])) iso = false;
    r.put("simplices", x.complex.size());
    r.put("dimension", std::to_string(x.complex.dimension()));
    r.put("face-poset-nerve", iso ? "pass" : "fail");
    r.put("reparse", reparse ? "pass" : "fail");
    emit(r, o.out, text);
    bool ok = iso && reparse;
    r.put("status", ok ? "pass" : "fail");
    return ok ? kPass : kFail;
}

int cmd_companion(const Options& o, Report& r) {
    auto body = read_file(o.path);
    Digest d;
    d.add(body);
    r.put("digest", d.hex());
    auto x = parse_complex(body);
    auto m = companion(x);
    auto text = write_model(m);
    bool reparse = parse_model(text).up_sets() == m.up_sets();
    r.put("worlds", m.size());
    r.put("reparse", reparse ? "pass" : "fail");
    emit(r, o.out, text);
    r.put("status", reparse ? "pass" : "fail");
    return reparse ? kPass : kFail;
}

MazeDensities parse_densities(const std::string& s) {
    MazeDensities d;
    if (s.empty()) return d;
    std::vector<double> v;
    std::istringstream in(s);
    for (std::string part; std::getline(in, part, ',');) {
        char* end = nullptr;
        double x = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size() || x < 0 || x > 1)
            throw InputError("invalid density '" + part + "'");
        v.push_back(x);
    }
    if (v.size() != 4) throw InputError("--densities expects red,green,gray,corridor");
    if (v[0] + v[1] + v[2] + v[3] > 1.0 + 1e-12) throw InputError("densities sum above 1");
    return {v[0], v[1], v[2], v[3]};
}

int cmd_maze(const Options& o, Report& r) {
    if (!o.seed) throw InputError("maze needs --seed");
    if (o.width < 1 || o.height < 1) throw InputError("maze dimensions must be at least 1");
    MazeGrid grid;
    if (o.layout == "random") grid = random_maze_grid(o.width, o.height, *o.seed, parse_densities(o.densities));
    else if (o.layout == "corridor" || o.layout == "walled") {
        if (o.width < 6 || o.height < 4) throw InputError("corridor layouts need width >= 6 and height >= 4");
        grid = demo_maze_grid(o.width, o.height, *o.seed, o.layout == "walled");
    } else {
        throw InputError("unknown layout '" + o.layout + "'");
    }
    auto f = o.query.empty() ? fig1_formula() : parse(o.query);
    auto x = maze_model(grid);
    r.put("width", o.width);
    r.put("height", o.height);
    r.put("seed", std::to_string(*o.seed));
    r.put("layout", o.layout);
    r.put("query", to_string(f));
    for (std::size_t y = grid.height; y-- > 0;) {
        std::string row;
        for (std::size_t xx = 0; xx < grid.width; ++xx) row += "WYRGC"[static_cast<int>(grid.at(xx, y))];
        r.put("grid", row);
    }
    auto cm = companion(x);
    auto ext = evaluate(cm, f);
    std::vector<std::string> cells;
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t y = 0; y < grid.height; ++y)
        for (std::size_t xx = 0; xx < grid.width; ++xx)
            for (int w = 0; w < 2; ++w)
                if (ext.test(maze_triangle(x, xx, y, w))) {
                    cells.push_back("(" + std::to_string(xx) + "," + std::to_string(y) + (w ? ",upper)" : ",lower)"));
                    if (!first) first = {xx, y};
                }
    r.put("satisfying-cells", cells.size());
    if (!cells.empty()) r.put("cells", join(cells, " "));
    if (o.witness && first) {
        auto reach = explained_reach(f);
        if (reach) {
            auto s = maze_triangle(x, first->first, first->second, 0);
            auto a = evaluate(cm, reach->left()), b = evaluate(cm, reach->right());
            if (auto p = witness_path(cm, s, a, b)) {
                r.put("witness-cells", format_path(cm, *p));
                std::vector<SimplexId> through(p->worlds.begin() + 1, p->worlds.end() - 1);
                auto poly = path_witness_poly(x.complex, x.complex.barycenter(p->worlds.front()),
                                              x.complex.barycenter(p->worlds.back()), through);
                std::vector<std::string> pts;
                for (const auto& q : poly) {
                    std::ostringstream ss;
                    ss << std::setprecision(6) << "(" << q(0) << "," << q(1) << ")";
                    pts.push_back(ss.str());
                }
                r.put("witness-polyline", join(pts, " "));
            }
        }
    }
    if (!o.out.empty()) {
        write_file(o.out, write_complex(x));
        r.put("output-file", o.out);
    }
    r.put("status", "pass");
    return kPass;
}

int cmd_audit(const Options& o, Report& r) {
    auto body = read_file(o.path);
    Digest d;
    d.add(body);
    r.put("digest", d.hex());
    if (looks_like_complex(body)) {
        auto raw = parse_complex_raw(body);
        r.put("input", "complex");
        r.put("given-simplices", raw.simplices.size());
        bool geometric = o.geometric;
        if (geometric && !raw.coords.empty() && raw.coords[0].size() > 3) {
            r.put("geometric", "skipped: ambient dimension above 3");
            geometric = false;
        }
        auto issues = audit_complex(raw, geometric);
        for (const auto& i : issues) r.put(i.kind, i.detail);
        if (issues.empty()) {
            // Valuation names must resolve once faces are present.
            parse_complex(body);
        }
        r.put("structural", issues.empty() ? "pass" : "fail");
        if (geometric) r.put("geometric", issues.empty() ? "pass" : "fail");
        r.put("status", issues.empty() ? "pass" : "fail");
        return issues.empty() ? kPass : kFail;
    }
    if (!o.seed) throw InputError("model audit needs --seed");
    auto m = parse_model(body);
    r.put("input", m.is_poset() ? "poset" : "preorder");
    AxiomSuiteConfig cfg;
    cfg.seed = *o.seed;
    cfg.instances = o.instances;
    auto rep = axiom_suite(m, cfg);
    for (const auto& c : rep.checks) {
        std::string v = c.ok() ? "pass" : "fail";
        v += " tested=" + std::to_string(c.tested);
        if (c.name.rfind("rule", 0) == 0) v += " premises-valid=" + std::to_string(c.premises_valid);
        r.put(c.name, v);
        for (std::size_t i = 0; i < c.violations.size() && i < 3; ++i)
            r.put(c.name + "-violation", to_string(c.violations[i].instance) + " at " + m.name(c.violations[i].world));
    }
    r.put("alr", rep.alr_ok() ? "pass" : "fail");
    r.put("status", rep.ok() ? "pass" : "fail");
    return rep.ok() ? kPass : kFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Model checking and model transformations for the reachability modal logic", "polyreach"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "Evaluate a formula on a model or complex");
    check->add_option("model", o.path, "Model or complex file")->required();
    check->add_option("formula", o.formula, "Formula")->required();
    check->add_option("--world", o.world, "Report truth at this world");

    auto* sat = app.add_subcommand("sat", "Search small posets for a model of a formula");
    sat->add_option("formula", o.formula, "Formula")->required();
    sat->add_option("--max-worlds", o.max_worlds, "Largest model size searched")->check(CLI::Range(1, 7));
    sat->add_option("--out", o.out, "Write the witness model here");

    std::vector<CLI::App*> transforms;
    for (const auto* name : {"nerve", "cut", "realize"}) {
        auto* t = app.add_subcommand(name, std::string("Apply ") + name + " to a model");
        t->add_option("model", o.path, "Model file")->required();
        t->add_option("--out", o.out, "Output file");
        transforms.push_back(t);
    }
    auto* comp = app.add_subcommand("companion", "Kripke companion of a complex");
    comp->add_option("complex", o.path, "Complex file")->required();
    comp->add_option("--out", o.out, "Output file");
    for (const auto* name : {"filtrate", "pipeline"}) {
        auto* t = app.add_subcommand(name, std::string("Run ") + name + " for a set of formulas");
        t->add_option("model", o.path, "Model file")->required();
        t->add_option("formula", o.formulas, "Formulas");
        t->add_option("--formulas", o.formulas_file, "File with one formula per line");
        t->add_option("--out", o.out, "Output file");
        transforms.push_back(t);
    }

    auto* maze = app.add_subcommand("maze", "Generate a maze and evaluate a query on it");
    maze->add_option("--width", o.width, "Squares per row");
    maze->add_option("--height", o.height, "Rows");
    maze->add_option("--seed", seed, "Random seed")->required();
    maze->add_option("--query", o.query, "Formula (default: red & gamma(red | corridor | white, green))");
    maze->add_option("--layout", o.layout, "random, corridor or walled")
        ->check(CLI::IsMember({"random", "corridor", "walled"}));
    maze->add_option("--densities", o.densities, "red,green,gray,corridor for the random layout");
    maze->add_flag("--witness", o.witness, "Emit a witness polyline for the first satisfying cell");
    maze->add_option("--out", o.out, "Write the complex here");

    auto* audit = app.add_subcommand("audit", "Axiom suite on a model, or structural audit of a complex");
    audit->add_option("input", o.path, "Model or complex file")->required();
    auto* audit_seed = audit->add_option("--seed", seed, "Seed for sampled axiom instances");
    audit->add_option("--instances", o.instances, "Random instances per axiom");
    audit->add_flag("--geometric-audit", o.geometric, "Also check geometric intersections (dimension <= 3)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error\t" << e.what() << '\n';
        return kInputError;
    }
    if (maze->parsed() || audit_seed->count() > 0) o.seed = seed;

    Report r(out);
    auto* sub = app.get_subcommands().front();
    r.put("command", sub->get_name());
    const auto start = std::chrono::steady_clock::now();
    int code = kInputError;
    try {
        const auto& name = sub->get_name();
        if (name == "check") code = cmd_check(o, r);
        else if (name == "sat") code = cmd_sat(o, r);
        else if (name == "nerve") code = cmd_nerve(o, r);
        else if (name == "cut") code = cmd_cut(o, r);
        else if (name == "filtrate") code = cmd_filtrate(o, r);
        else if (name == "pipeline") code = cmd_pipeline(o, r);
        else if (name == "realize") code = cmd_realize(o, r);
        else if (name == "companion") code = cmd_companion(o, r);
        else if (name == "maze") code = cmd_maze(o, r);
        else if (name == "audit") code = cmd_audit(o, r);
    } catch (const InputError& e) {
        err << "error\t" << e.what() << '\n';
        return kInputError;
    } catch (const FormatError& e) {
        err << "error\t" << o.path << " " << e.what() << '\n';
        return kInputError;
    } catch (const ParseError& e) {
        err << "error\tposition " << e.position() << ": " << e.message() << '\n';
        return kInputError;
    } catch (const GeometryError& e) {
        err << "error\t" << e.what() << '\n';
        return kInputError;
    } catch (const ModelError& e) {
        err << "error\t" << e.what() << '\n';
        return kInputError;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "time-ms\t" << ms << '\n';
    return code;
}

} // namespace polyreach::cli
