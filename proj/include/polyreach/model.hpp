// Finite preorder (Alexandroff) models and their text format.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyreach/world_set.hpp"

namespace polyreach {

using WorldId = std::size_t;

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreorderModel {
public:
    using Edge = std::pair<std::string, std::string>;

    PreorderModel() = default;

    // Order is the reflexive-transitive closure of `edges`.
    static PreorderModel build(std::vector<std::string> worlds, const std::vector<Edge>& edges,
                               const std::map<std::string, std::vector<std::string>>& valuation);

    // `relation[w]` holds the worlds v with w <= v before closure; the result
    // is reflexively and transitively closed.
    static PreorderModel from_relation(std::vector<std::string> worlds, std::vector<WorldSet> relation,
                                       std::map<std::string, WorldSet> valuation);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(WorldId w) const { return names_.at(w); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<WorldId> find(std::string_view name) const;

    bool leq(WorldId a, WorldId b) const noexcept { return up_[a].test(b); }
    bool less(WorldId a, WorldId b) const noexcept { return leq(a, b) && !leq(b, a); }
    // {v : w <= v}
    const WorldSet& up(WorldId w) const noexcept { return up_[w]; }
    // {v : v <= w}
    const WorldSet& down(WorldId w) const noexcept { return down_[w]; }
    const std::vector<WorldSet>& up_sets() const noexcept { return up_; }

    bool is_poset() const noexcept { return poset_; }

    // Empty set for atoms without a valuation entry.
    WorldSet valuation(const std::string& atom) const;
    const std::map<std::string, WorldSet>& valuations() const noexcept { return valuation_; }
    std::vector<std::string> atoms() const;

    WorldSet all() const { return WorldSet::full(size()); }
    WorldSet none() const { return WorldSet(size()); }

    // Downward closure {w : w <= v for some v in s}.
    WorldSet down_closure(const WorldSet& s) const;
    // Upward closure {w : v <= w for some v in s}.
    WorldSet up_closure(const WorldSet& s) const;

    std::string format_set(const WorldSet& s) const;

private:
    void finish();

    std::vector<std::string> names_;
    std::map<std::string, WorldId> index_;
    std::vector<WorldSet> up_;
    std::vector<WorldSet> down_;
    std::map<std::string, WorldSet> valuation_;
    bool poset_ = true;
};

using PosetModel = PreorderModel;

// World ids are identifiers, optionally joined by '+' (labels of chains and
// filtration classes).
bool is_world_label(std::string_view s) noexcept;

class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& message, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Line format:
//   worlds a b c
//   order a b        (generator a <= b)
//   valuation p a c
// '#' starts a comment; unknown directives are errors.
PreorderModel parse_model(std::string_view text);
PreorderModel load_model(const std::string& path);

// Emits covering pairs for posets and every non-reflexive pair otherwise.
std::string write_model(const PreorderModel& m);

} // namespace polyreach
