// SPDX-License-Identifier: Apache-2.0
//
// Dominance between alternatives and the ladder search: starting from the
// most important attribute level, keep the dominant alternatives among the
// current survivors and step down one level until a single plan remains.

#ifndef LADDER_LADDER_HPP
#define LADDER_LADDER_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "ladder/model.hpp"
#include "ladder/sift.hpp"
#include "ladder/value_order.hpp"

namespace ladder {

namespace detail {

inline PartialOrdering compare_on(const Alternative& s, const Alternative& t, AttributeId k, const DecisionTask& task) {
    return compare_values(s.values.at(k), t.values.at(k), task.attribute(k).polarity);
}

inline bool not_worse(PartialOrdering o) { return o == PartialOrdering::better || o == PartialOrdering::equal; }

}  // namespace detail

// Pairwise strict dominance of s over t on attrs.
inline bool dominates(const Alternative& s, const Alternative& t, const AttributeSet& attrs, const DecisionTask& task) {
    bool strict = false;
    for (auto k : attrs) {
        const auto o = detail::compare_on(s, t, k, task);
        if (!detail::not_worse(o)) return false;
        strict = strict || o == PartialOrdering::better;
    }
    return strict;
}

// True when s is the dominant plan of the candidate set on attrs.
inline bool is_dominant_plan(const Alternative& s, std::span<const Alternative* const> rivals, const AttributeSet& attrs,
                             const DecisionTask& task) {
    bool has_strict_attribute = false;
    for (auto k : attrs) {
        bool strict_over_all = true;
        for (const auto* t : rivals) {
            const auto o = detail::compare_on(s, *t, k, task);
            if (!detail::not_worse(o)) return false;
            strict_over_all = strict_over_all && o == PartialOrdering::better;
        }
        has_strict_attribute = has_strict_attribute || strict_over_all;
    }
    return has_strict_attribute;
}

inline std::vector<AlternativeId> dominant_set(std::span<const AlternativeId> candidates, const AttributeSet& attrs,
                                               DominanceMode mode, const DecisionTask& task) {
    std::vector<const Alternative*> alts;
    alts.reserve(candidates.size());
    for (const auto& id : candidates) alts.push_back(&task.alternative(id));

    std::vector<AlternativeId> kept;
    std::vector<const Alternative*> rivals;
    for (std::size_t i = 0; i < alts.size(); ++i) {
        rivals.clear();
        for (std::size_t j = 0; j < alts.size(); ++j)
            if (j != i) rivals.push_back(alts[j]);

        bool keep = false;
        if (mode == DominanceMode::global) {
            keep = is_dominant_plan(*alts[i], rivals, attrs, task);
        } else {
            keep = std::none_of(rivals.begin(), rivals.end(),
                                [&](const Alternative* t) { return dominates(*t, *alts[i], attrs, task); });
        }
        if (keep) kept.push_back(candidates[i]);
    }
    return kept;
}

// Accept or abstain when sifting leaves a single plan.
inline LadderOutcome single_plan_gate(const Alternative& s, const DecisionTask& task) {
    if (task.aspiration) {
        for (const auto& t : *task.aspiration)
            if (!satisfies_threshold(s.values.at(t.attribute), t)) return {Verdict::abstain, std::nullopt, {}};
    }
    return {Verdict::chosen, s.id, {}};
}

inline LadderOutcome lsp(const DecisionTask& task, std::span<const AlternativeId> feasible,
                         DominanceMode mode = DominanceMode::global) {
    if (feasible.empty()) return {Verdict::abstain, std::nullopt, {}};
    if (feasible.size() == 1) return single_plan_gate(task.alternative(feasible.front()), task);

    LadderOutcome out;
    std::vector<AlternativeId> survivors(feasible.begin(), feasible.end());
    for (std::size_t r = task.partition.level_count(); r >= 1; --r) {
        LevelRecord rec{r, task.partition.level(r), survivors, {}};
        survivors = dominant_set(survivors, rec.attribute_ids, mode, task);
        rec.survivors_after = survivors;
        out.trace.push_back(std::move(rec));

        if (survivors.size() == 1) {
            out.verdict = Verdict::chosen;
            out.chosen = survivors.front();
            return out;
        }
        if (survivors.empty()) {
            out.verdict = Verdict::repartition;
            return out;
        }
    }
    out.verdict = Verdict::no_unique_choice;
    return out;
}

struct Decision {
    SiftResult sift;
    LadderOutcome outcome;
};

inline Decision decide(const DecisionTask& task, DominanceMode mode = DominanceMode::global) {
    Decision d{psp(task), {}};
    d.outcome = lsp(task, d.sift.feasible, mode);
    return d;
}

}  // namespace ladder

#endif  // LADDER_LADDER_HPP
