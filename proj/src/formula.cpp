#include "polyreach/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polyreach {

struct Formula::Node {
    Kind kind;
    std::string name;
    std::vector<Formula> kids;
    std::size_t size;
    std::size_t depth;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty atom name");
    auto h = mix(static_cast<std::size_t>(Kind::Atom), std::hash<std::string>{}(name));
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, 1, 0, h}));
}

Formula Formula::negation(Formula child) {
    auto s = child.size() + 1;
    auto d = child.depth();
    auto h = mix(static_cast<std::size_t>(Kind::Not), child.hash());
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(child)}, s, d, h}));
}

Formula Formula::conjunction(Formula left, Formula right) {
    auto s = left.size() + right.size() + 1;
    auto d = std::max(left.depth(), right.depth());
    auto h = mix(mix(static_cast<std::size_t>(Kind::And), left.hash()), right.hash());
    return Formula(std::make_shared<const Node>(
        Node{Kind::And, {}, {std::move(left), std::move(right)}, s, d, h}));
}

Formula Formula::box(Formula child) {
    auto s = child.size() + 1;
    auto d = child.depth() + 1;
    auto h = mix(static_cast<std::size_t>(Kind::Box), child.hash());
    return Formula(std::make_shared<const Node>(Node{Kind::Box, {}, {std::move(child)}, s, d, h}));
}

Formula Formula::reach(Formula path, Formula target) {
    auto s = path.size() + target.size() + 1;
    auto d = std::max(path.depth(), target.depth()) + 1;
    auto h = mix(mix(static_cast<std::size_t>(Kind::Reach), path.hash()), target.hash());
    return Formula(std::make_shared<const Node>(
        Node{Kind::Reach, {}, {std::move(path), std::move(target)}, s, d, h}));
}

Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
    if (node_->kind != Kind::Atom) throw std::logic_error("name() on non-atom formula");
    return node_->name;
}

const Formula& Formula::child() const {
    if (node_->kind != Kind::Not && node_->kind != Kind::Box)
        throw std::logic_error("child() on formula without a single child");
    return node_->kids[0];
}

const Formula& Formula::left() const {
    if (node_->kids.size() != 2) throw std::logic_error("left() on non-binary formula");
    return node_->kids[0];
}

const Formula& Formula::right() const {
    if (node_->kids.size() != 2) throw std::logic_error("right() on non-binary formula");
    return node_->kids[1];
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (x.kind == Kind::Atom) return x.name.compare(y.name) <=> 0;
    for (std::size_t i = 0; i < x.kids.size(); ++i) {
        if (auto c = x.kids[i] <=> y.kids[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Formula top() {
    auto t = Formula::atom(std::string(Formula::kTruthAtom));
    return Formula::negation(Formula::conjunction(t, Formula::negation(t)));
}

Formula bottom() {
    auto t = Formula::atom(std::string(Formula::kTruthAtom));
    return Formula::conjunction(t, Formula::negation(t));
}

bool is_bottom(const Formula& f) noexcept {
    if (f.kind() != Kind::And) return false;
    const auto& l = f.left();
    const auto& r = f.right();
    return l.is_atom() && l.name() == Formula::kTruthAtom && r.is_negation() && r.child() == l;
}

bool is_top(const Formula& f) noexcept {
    return f.is_negation() && is_bottom(f.child());
}

Formula diamond(Formula f) {
    return Formula::negation(Formula::box(Formula::negation(std::move(f))));
}

Formula disjunction(Formula a, Formula b) {
    return Formula::negation(
        Formula::conjunction(Formula::negation(std::move(a)), Formula::negation(std::move(b))));
}

Formula implication(Formula a, Formula b) {
    return Formula::negation(Formula::conjunction(std::move(a), Formula::negation(std::move(b))));
}

Formula equivalence(Formula a, Formula b) {
    return Formula::conjunction(implication(a, b), implication(b, a));
}

Formula global_box(Formula f) {
    return Formula::negation(Formula::reach(top(), Formula::negation(std::move(f))));
}

Formula big_and(const std::vector<Formula>& fs) {
    if (fs.empty()) return top();
    Formula acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = Formula::conjunction(*it, acc);
    return acc;
}

Formula big_or(const std::vector<Formula>& fs) {
    if (fs.empty()) return bottom();
    Formula acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = disjunction(*it, acc);
    return acc;
}

Formula single_negation(const Formula& f) {
    if (f.is_negation()) return f.child();
    return Formula::negation(f);
}

std::optional<Formula> diamond_body(const Formula& f) {
    if (!f.is_negation()) return std::nullopt;
    const auto& b = f.child();
    if (b.kind() != Kind::Box || !b.child().is_negation()) return std::nullopt;
    return b.child().child();
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
    case Kind::Atom:
        if (f.name() != Formula::kTruthAtom) out.insert(f.name());
        return;
    case Kind::Not:
    case Kind::Box:
        collect_atoms(f.child(), out);
        return;
    case Kind::And:
    case Kind::Reach:
        collect_atoms(f.left(), out);
        collect_atoms(f.right(), out);
        return;
    }
}

} // namespace

std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

} // namespace polyreach
