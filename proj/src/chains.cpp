#include "polyreach/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyreach {

std::vector<std::vector<WorldId>> enumerate_chains(const PreorderModel& m) {
    if (!m.is_poset()) throw ModelError("chains requested on a preorder that is not a poset");
    std::vector<std::vector<WorldId>> out;
    std::vector<WorldId> current;
    // Extending upward from the current maximum keeps every prefix a chain.
    auto extend = [&](auto&& self, WorldId top) -> void {
        out.push_back(current);
        (m.up(top)).for_each([&](std::size_t v) {
            if (v == top) return;
            current.push_back(v);
            self(self, v);
            current.pop_back();
        });
    };
    for (WorldId w = 0; w < m.size(); ++w) {
        current = {w};
        extend(extend, w);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        auto sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa < sb;
    });
    return out;
}

std::string set_label(const PreorderModel& m, const std::vector<WorldId>& worlds) {
    std::vector<std::string> names;
    for (auto w : worlds) names.push_back(m.name(w));
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += '+';
        out += n;
    }
    return out;
}

} // namespace polyreach
