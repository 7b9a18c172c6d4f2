#include "polyreach/bounded_sat.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polyreach {

namespace {

constexpr std::size_t kMaxWorlds = 7;
constexpr std::size_t kMaxIsoWorlds = 6;
constexpr std::size_t kMaxValuationBits = 36;

using Rows = std::vector<std::uint8_t>;

std::uint64_t encode(const Rows& rows) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) code |= std::uint64_t{rows[i]} << (8 * i);
    return code;
}

Rows decode(std::uint64_t code, std::size_t n) {
    Rows rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<std::uint8_t>(code >> (8 * i));
    return rows;
}

void close(Rows& rows) {
    const auto n = rows.size();
    for (std::size_t i = 0; i < n; ++i) rows[i] |= static_cast<std::uint8_t>(1U << i);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rows[i] >> k & 1U) rows[i] |= rows[k];
}

std::uint64_t canonical(const Rows& rows) {
    const auto n = rows.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    Rows relabeled(n);
    do {
        for (std::size_t i = 0; i < n; ++i) {
            std::uint8_t row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (rows[i] >> j & 1U) row |= static_cast<std::uint8_t>(1U << perm[j]);
            relabeled[perm[i]] = row;
        }
        best = std::min(best, encode(relabeled));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

PreorderModel frame_model(const Rows& rows) {
    const auto n = rows.size();
    std::vector<std::string> names;
    std::vector<WorldSet> rel(n, WorldSet(n));
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("w" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i] >> j & 1U) rel[i].set(j);
    }
    return PreorderModel::from_relation(std::move(names), std::move(rel), {});
}

Valuation valuation_for(std::uint64_t code, const std::vector<std::string>& atoms, std::size_t n) {
    Valuation val;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        WorldSet s(n);
        for (std::size_t w = 0; w < n; ++w)
            if (code >> (a * n + w) & 1U) s.set(w);
        val.emplace(atoms[a], std::move(s));
    }
    return val;
}

} // namespace

std::vector<Rows> enumerate_poset_frames(std::size_t n, bool isomorphism_reduction) {
    if (n == 0 || n > kMaxWorlds) throw std::invalid_argument("frame size out of range");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<std::uint64_t> seen;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Rows rows(n, 0);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1U) rows[pairs[e].first] |= static_cast<std::uint8_t>(1U << pairs[e].second);
        close(rows);
        seen.insert(encode(rows));
    }
    std::set<std::uint64_t> reduced;
    if (isomorphism_reduction && n <= kMaxIsoWorlds) {
        for (auto code : seen) reduced.insert(canonical(decode(code, n)));
    } else {
        reduced = std::move(seen);
    }
    std::vector<Rows> out;
    for (auto code : reduced) out.push_back(decode(code, n));
    return out;
}

SatResult bounded_sat(const Formula& f, const SatOptions& options) {
    if (options.max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
    if (options.max_worlds > kMaxWorlds)
        throw std::invalid_argument("max_worlds above " + std::to_string(kMaxWorlds) + " is not supported");
    const auto atom_set = atoms_of(f);
    const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

    SatResult result;
    for (std::size_t n = 1; n <= options.max_worlds; ++n) {
        if (atoms.size() * n > kMaxValuationBits)
            throw std::invalid_argument("valuation space too large for " + std::to_string(n) + " worlds");
        const auto frames = enumerate_poset_frames(n, options.isomorphism_reduction);
        std::vector<PreorderModel> models;
        models.reserve(frames.size());
        for (const auto& rows : frames) models.push_back(frame_model(rows));

        const std::uint64_t valuations = std::uint64_t{1} << (atoms.size() * n);
        const auto total = static_cast<long long>(frames.size() * valuations);
        auto satisfied_at = [&](long long index) -> std::size_t {
            const auto& frame = models[static_cast<std::size_t>(index) / valuations];
            auto val = valuation_for(static_cast<std::uint64_t>(index) % valuations, atoms, n);
            return evaluate(frame, val, f).first();
        };

        long long hit = total;
        if (options.execution == Execution::Serial) {
            for (long long i = 0; i < total; ++i) {
                if (satisfied_at(i) < n) {
                    hit = i;
                    break;
                }
            }
            result.models_checked += static_cast<std::uint64_t>(hit == total ? total : hit + 1);
        } else {
            // Every index is visited, so the minimum hit is the serial answer.
#pragma omp parallel for schedule(dynamic, 64) reduction(min : hit)
            for (long long i = 0; i < total; ++i) {
                if (i < hit && satisfied_at(i) < n) hit = std::min(hit, i);
            }
            result.models_checked += static_cast<std::uint64_t>(total);
        }
        result.searched_bound = n;
        if (hit == total) continue;

        const auto& frame = models[static_cast<std::size_t>(hit) / valuations];
        auto val = valuation_for(static_cast<std::uint64_t>(hit) % valuations, atoms, n);
        std::vector<WorldSet> rel = frame.up_sets();
        auto model = PreorderModel::from_relation(frame.names(), std::move(rel), val);
        const auto world = evaluate(model, f).first();
        // Independent recheck through the fixpoint route.
        if (holds_at(model, Formula::negation(f), world, {ReachMethod::Fixpoint, Execution::Serial}))
            throw std::logic_error("bounded_sat self-check failed");
        result.witness = SatWitness{std::move(model), world};
        return result;
    }
    return result;
}

} // namespace polyreach
