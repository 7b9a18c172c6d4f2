#include "polyreach/pipeline.hpp"

#include "polyreach/evaluate.hpp"

namespace polyreach {

PipelineResult plr_pipeline(const PreorderModel& m, const FormulaSet& gamma) {
    auto sigma = adequate_closure(gamma);
    auto hat = hat_extension(sigma);
    auto cm = filtrate(m, hat);
    auto out = cut(cm.model);

    PipelineReport r;
    r.closure_size = sigma.size();
    r.hat_size = hat.size();
    r.classes = cm.theories.size();
    r.output_is_poset = out.is_poset();
    r.advisory = !m.is_poset();

    for (const auto& f : sigma.members) {
        auto src = evaluate(m, f);
        auto dst = evaluate(out, f);
        for (WorldId w = 0; w < m.size(); ++w) {
            ++r.checks;
            if (src.test(w) != dst.test(cm.class_map[w])) r.failures.push_back({f, w, src.test(w)});
        }
    }
    for (const auto& f : hat.members) {
        if (f.kind() != Kind::Reach) continue;
        auto a = evaluate(cm.model, f.left());
        auto b = evaluate(cm.model, f.right());
        evaluate(cm.model, f).for_each([&](std::size_t c) {
            ++r.witnesses_checked;
            auto path = witness_path(out, c, a, b);
            if (!path || !check_path(out, *path, a)) r.witness_failures.push_back({f, c});
        });
    }
    return {std::move(cm), std::move(out), std::move(r)};
}

} // namespace polyreach
