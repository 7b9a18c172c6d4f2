#include "polyreach/model.hpp"

#include <fstream>
#include <sstream>

#include "polyreach/parser.hpp"

namespace polyreach {

PreorderModel PreorderModel::build(std::vector<std::string> worlds, const std::vector<Edge>& edges,
                                   const std::map<std::string, std::vector<std::string>>& valuation) {
    std::map<std::string, WorldId> index;
    for (WorldId i = 0; i < worlds.size(); ++i) {
        if (!index.emplace(worlds[i], i).second)
            throw ModelError("duplicate world id '" + worlds[i] + "'");
    }
    auto lookup = [&](const std::string& w) {
        auto it = index.find(w);
        if (it == index.end()) throw ModelError("unknown world id '" + w + "'");
        return it->second;
    };
    std::vector<WorldSet> rel(worlds.size(), WorldSet(worlds.size()));
    for (const auto& [a, b] : edges) rel[lookup(a)].set(lookup(b));
    std::map<std::string, WorldSet> val;
    for (const auto& [atom, ws] : valuation) {
        auto& s = val.try_emplace(atom, worlds.size()).first->second;
        for (const auto& w : ws) s.set(lookup(w));
    }
    return from_relation(std::move(worlds), std::move(rel), std::move(val));
}

PreorderModel PreorderModel::from_relation(std::vector<std::string> worlds, std::vector<WorldSet> relation,
                                           std::map<std::string, WorldSet> valuation) {
    const auto n = worlds.size();
    if (relation.size() != n) throw ModelError("relation size does not match world count");
    PreorderModel m;
    m.names_ = std::move(worlds);
    for (WorldId i = 0; i < n; ++i) {
        if (!m.index_.emplace(m.names_[i], i).second)
            throw ModelError("duplicate world id '" + m.names_[i] + "'");
    }
    for (auto& [atom, s] : valuation) {
        if (s.universe() != n) throw ModelError("valuation of '" + atom + "' has wrong universe");
    }
    m.up_ = std::move(relation);
    m.valuation_ = std::move(valuation);
    m.finish();
    return m;
}

void PreorderModel::finish() {
    const auto n = names_.size();
    for (WorldId i = 0; i < n; ++i) up_[i].set(i);
    for (WorldId k = 0; k < n; ++k) {
        for (WorldId i = 0; i < n; ++i) {
            if (up_[i].test(k)) up_[i] |= up_[k];
        }
    }
    down_.assign(n, WorldSet(n));
    poset_ = true;
    for (WorldId i = 0; i < n; ++i) {
        up_[i].for_each([&](std::size_t j) {
            down_[j].set(i);
            if (j != i && up_[j].test(i)) poset_ = false;
        });
    }
}

std::optional<WorldId> PreorderModel::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

WorldSet PreorderModel::valuation(const std::string& atom) const {
    auto it = valuation_.find(atom);
    if (it == valuation_.end()) return none();
    return it->second;
}

std::vector<std::string> PreorderModel::atoms() const {
    std::vector<std::string> out;
    for (const auto& [atom, s] : valuation_) out.push_back(atom);
    return out;
}

WorldSet PreorderModel::down_closure(const WorldSet& s) const {
    WorldSet r = none();
    s.for_each([&](std::size_t v) { r |= down_[v]; });
    return r;
}

WorldSet PreorderModel::up_closure(const WorldSet& s) const {
    WorldSet r = none();
    s.for_each([&](std::size_t v) { r |= up_[v]; });
    return r;
}

std::string PreorderModel::format_set(const WorldSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t w) {
        if (!first) out += ", ";
        out += names_[w];
        first = false;
    });
    return out + "}";
}

bool is_world_label(std::string_view s) noexcept {
    std::size_t start = 0;
    while (true) {
        auto plus = s.find('+', start);
        auto part = s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        if (!is_identifier(part)) return false;
        if (plus == std::string_view::npos) return true;
        start = plus + 1;
    }
}

FormatError::FormatError(const std::string& message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

PreorderModel parse_model(std::string_view text) {
    std::vector<std::string> worlds;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> edge_lines;
    std::map<std::string, std::vector<std::string>> valuation;
    std::map<std::string, std::size_t> world_line;
    std::vector<std::pair<std::string, std::size_t>> val_refs;

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
        if (directive == "worlds") {
            for (auto& w : args) {
                if (!is_world_label(w)) throw FormatError("invalid world id '" + w + "'", lineno);
                if (!world_line.emplace(w, lineno).second)
                    throw FormatError("duplicate world id '" + w + "'", lineno);
                worlds.push_back(w);
            }
        } else if (directive == "order") {
            if (args.size() != 2) throw FormatError("order expects exactly two worlds", lineno);
            edges.emplace_back(args[0], args[1]);
            edge_lines.push_back(lineno);
        } else if (directive == "valuation") {
            if (args.empty()) throw FormatError("valuation expects an atom name", lineno);
            if (args[0] == Formula::kTruthAtom || !is_identifier(args[0]))
                throw FormatError("invalid atom name '" + args[0] + "'", lineno);
            auto& ws = valuation[args[0]];
            for (std::size_t i = 1; i < args.size(); ++i) {
                ws.push_back(args[i]);
                val_refs.emplace_back(args[i], lineno);
            }
        } else {
            throw FormatError("unknown directive '" + directive + "'", lineno);
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (const auto* w : {&edges[i].first, &edges[i].second}) {
            if (!world_line.count(*w)) throw FormatError("unknown world id '" + *w + "'", edge_lines[i]);
        }
    }
    for (const auto& [w, l] : val_refs) {
        if (!world_line.count(w)) throw FormatError("unknown world id '" + w + "'", l);
    }
    return PreorderModel::build(std::move(worlds), edges, valuation);
}

PreorderModel load_model(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_model(ss.str());
}

std::string write_model(const PreorderModel& m) {
    std::ostringstream out;
    out << "worlds";
    for (const auto& n : m.names()) out << ' ' << n;
    out << '\n';
    const auto n = m.size();
    for (WorldId a = 0; a < n; ++a) {
        for (WorldId b = 0; b < n; ++b) {
            if (a == b || !m.leq(a, b)) continue;
            if (m.is_poset()) {
                bool covered = true;
                for (WorldId z = 0; z < n && covered; ++z) {
                    if (z != a && z != b && m.leq(a, z) && m.leq(z, b)) covered = false;
                }
                if (!covered) continue;
            }
            out << "order " << m.name(a) << ' ' << m.name(b) << '\n';
        }
    }
    for (const auto& [atom, s] : m.valuations()) {
        out << "valuation " << atom;
        s.for_each([&](std::size_t w) { out << ' ' << m.name(w); });
        out << '\n';
    }
    return out.str();
}

} // namespace polyreach
