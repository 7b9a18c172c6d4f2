#include "polyreach/evaluate.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>

namespace polyreach {

namespace {

// Packs per-world flags computed in parallel; WorldSet words are shared
// between neighbouring worlds and cannot be written concurrently.
template <typename Pred>
WorldSet collect(std::size_t n, Execution exec, Pred&& pred) {
    WorldSet out(n);
    if (exec == Execution::Serial) {
        for (std::size_t w = 0; w < n; ++w)
            if (pred(w)) out.set(w);
        return out;
    }
    std::vector<unsigned char> flags(n, 0);
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long w = 0; w < count; ++w) flags[static_cast<std::size_t>(w)] = pred(static_cast<std::size_t>(w)) ? 1 : 0;
    for (std::size_t w = 0; w < n; ++w)
        if (flags[w]) out.set(w);
    return out;
}

class Evaluator {
public:
    Evaluator(const PreorderModel& m, const Valuation& val, const EvalOptions& opts)
        : m_(m), val_(val), opts_(opts) {}

    WorldSet eval(const Formula& f) {
        if (f.is_atom()) {
            if (f.name() == Formula::kTruthAtom) return m_.none();
            auto it = val_.find(f.name());
            return it == val_.end() ? m_.none() : it->second;
        }
        if (auto it = cache_.find(f); it != cache_.end()) return it->second;
        WorldSet r;
        switch (f.kind()) {
        case Kind::Atom:
            break;
        case Kind::Not:
            r = eval(f.child()).complement();
            break;
        case Kind::And:
            r = eval(f.left()) & eval(f.right());
            break;
        case Kind::Box:
            r = box_kernel(m_, eval(f.child()), opts_.execution);
            break;
        case Kind::Reach: {
            auto a = eval(f.left());
            auto b = eval(f.right());
            r = opts_.reach == ReachMethod::Components ? reach_components(m_, a, b, opts_.execution)
                                                       : reach_fixpoint(m_, a, b);
            break;
        }
        }
        cache_.emplace(f, r);
        return r;
    }

private:
    const PreorderModel& m_;
    const Valuation& val_;
    EvalOptions opts_;
    std::unordered_map<Formula, WorldSet, FormulaHash> cache_;
};

} // namespace

WorldSet evaluate(const PreorderModel& m, const Formula& f, const EvalOptions& opts) {
    return Evaluator(m, m.valuations(), opts).eval(f);
}

WorldSet evaluate(const PreorderModel& m, const Valuation& valuation, const Formula& f,
                  const EvalOptions& opts) {
    for (const auto& [atom, s] : valuation) {
        if (s.universe() != m.size()) throw ModelError("valuation of '" + atom + "' has wrong universe");
    }
    return Evaluator(m, valuation, opts).eval(f);
}

bool holds_at(const PreorderModel& m, const Formula& f, WorldId w, const EvalOptions& opts) {
    return evaluate(m, f, opts).test(w);
}

bool is_valid(const PreorderModel& m, const Formula& f, const EvalOptions& opts) {
    return evaluate(m, f, opts).count() == m.size();
}

WorldSet box_kernel(const PreorderModel& m, const WorldSet& a, Execution exec) {
    return collect(m.size(), exec, [&](std::size_t w) { return m.up(w).subset_of(a); });
}

Relation reach_oracle(const PreorderModel& m, const WorldSet& a) {
    const auto n = m.size();
    Relation rel(n, m.none());
    for (WorldId w = 0; w < n; ++w) {
        (m.up(w) & a).for_each([&](std::size_t u) { rel[w] |= m.down(u); });
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (WorldId w = 0; w < n; ++w) {
            WorldSet next = rel[w];
            (rel[w] & a).for_each([&](std::size_t u) { next |= rel[u]; });
            if (!(next == rel[w])) {
                rel[w] = std::move(next);
                changed = true;
            }
        }
    }
    return rel;
}

WorldSet reach_fixpoint(const PreorderModel& m, const WorldSet& a, const WorldSet& b) {
    auto rel = reach_oracle(m, a);
    WorldSet out = m.none();
    for (WorldId w = 0; w < m.size(); ++w)
        if (rel[w].intersects(b)) out.set(w);
    return out;
}

WorldSet reach_components(const PreorderModel& m, const WorldSet& a, const WorldSet& b, Execution exec) {
    const auto n = m.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    a.for_each([&](std::size_t u) {
        ((m.up(u) | m.down(u)) & a).for_each([&](std::size_t v) {
            auto ru = find(u), rv = find(v);
            if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
        });
    });
    // A component is good when one of its points lies above some point of b.
    WorldSet good_roots = m.none();
    (a & m.up_closure(b)).for_each([&](std::size_t u) { good_roots.set(find(u)); });
    WorldSet good = m.none();
    a.for_each([&](std::size_t u) {
        if (good_roots.test(find(u))) good.set(u);
    });
    return collect(n, exec, [&](std::size_t w) { return m.up(w).intersects(good); });
}

std::optional<UpDownPath> witness_path(const PreorderModel& m, WorldId w, const WorldSet& a,
                                       const WorldSet& b) {
    const auto n = m.size();
    // State 2*x is "x reached as a peak", 2*x+1 is "x reached as a valley".
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(2 * n, kNone);
    std::vector<bool> seen(2 * n, false);
    std::deque<std::size_t> queue;
    const std::size_t kStart = 2 * n;

    (m.up(w) & a).for_each([&](std::size_t p) {
        seen[2 * p] = true;
        parent[2 * p] = kStart;
        queue.push_back(2 * p);
    });
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        auto x = s / 2;
        if (s % 2 == 0) {
            auto ends = m.down(x) & b;
            if (!ends.empty()) {
                UpDownPath path;
                path.worlds.push_back(ends.first());
                for (auto t = s; t != kStart; t = parent[t]) path.worlds.push_back(t / 2);
                path.worlds.push_back(w);
                return UpDownPath{{path.worlds.rbegin(), path.worlds.rend()}};
            }
            // Strictly below the peak.
            ((m.down(x) - m.up(x)) & a).for_each([&](std::size_t q) {
                if (!seen[2 * q + 1]) {
                    seen[2 * q + 1] = true;
                    parent[2 * q + 1] = s;
                    queue.push_back(2 * q + 1);
                }
            });
        } else {
            ((m.up(x) - m.down(x)) & a).for_each([&](std::size_t p) {
                if (!seen[2 * p]) {
                    seen[2 * p] = true;
                    parent[2 * p] = s;
                    queue.push_back(2 * p);
                }
            });
        }
    }
    return std::nullopt;
}

bool check_path(const PreorderModel& m, const UpDownPath& p, const WorldSet& a) {
    const auto& w = p.worlds;
    if (w.size() < 3 || w.size() % 2 == 0) return false;
    for (auto x : w)
        if (x >= m.size()) return false;
    const auto k = w.size() - 1;
    if (!m.leq(w[0], w[1]) || !m.leq(w[k], w[k - 1])) return false;
    for (std::size_t i = 1; 2 * i < k; ++i) {
        if (!m.less(w[2 * i], w[2 * i - 1]) || !m.less(w[2 * i], w[2 * i + 1])) return false;
    }
    for (std::size_t i = 1; i < k; ++i)
        if (!a.test(w[i])) return false;
    return true;
}

std::string format_path(const PreorderModel& m, const UpDownPath& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.worlds.size(); ++i) {
        if (i) out += ',';
        out += m.name(p.worlds[i]);
    }
    return out + ")";
}

} // namespace polyreach
