// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementation of sifting and the ladder search,
// plus a seeded random task generator.
//
// This header deliberately depends on model.hpp only. Value comparison is
// re-derived here from scratch (every value is mapped to a benefit-oriented
// [lo, hi] box) so that engine and oracle share no comparison code.

#ifndef LADDER_ORACLE_HPP
#define LADDER_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ladder/model.hpp"

namespace ladder::oracle {

struct Verdict {
    ladder::Verdict verdict = ladder::Verdict::abstain;
    std::optional<AlternativeId> chosen;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

// Benefit-oriented view: larger is better on both ends. Categories carry a
// label and are only ever equal or unrelated.
struct Oriented {
    bool categorical = false;
    double lo = 0.0;
    double hi = 0.0;
    std::string label;
};

inline Oriented orient(const AttributeValue& v, Polarity polarity) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Oriented o;
    switch (v.index()) {
        case 0: o.lo = o.hi = std::get<0>(v).value; break;
        case 1: o.lo = std::get<1>(v).lo; o.hi = std::get<1>(v).hi; break;
        case 2: o.lo = std::get<2>(v).lo; o.hi = inf; break;
        case 3: o.lo = o.hi = std::get<3>(v).level; break;
        default: o.categorical = true; o.label = std::get<4>(v).label; return o;
    }
    if (polarity == Polarity::cost) {
        const double lo = -o.hi;
        o.hi = -o.lo;
        o.lo = lo;
    }
    return o;
}

// "not worse than"
inline bool weakly_better(const Oriented& a, const Oriented& b) {
    if (a.categorical || b.categorical) return a.categorical && b.categorical && a.label == b.label;
    return a.lo >= b.lo && a.hi >= b.hi;
}

inline bool strictly_better(const Oriented& a, const Oriented& b) { return weakly_better(a, b) && !weakly_better(b, a); }

inline Oriented at(const Alternative& s, AttributeId k, const DecisionTask& task) {
    Polarity pol = Polarity::none;
    for (const auto& a : task.attributes)
        if (a.id == k) pol = a.polarity;
    return orient(s.values.at(k), pol);
}

// Threshold check spelled out per value form: a plan passes when the most
// favourable point of its value meets the bound.
inline bool passes(const AttributeValue& v, const Predicate& p) {
    if (const auto* mx = std::get_if<MaxValue>(&p)) {
        if (const auto* c = std::get_if<Crisp>(&v)) return c->value <= mx->limit;
        if (const auto* i = std::get_if<Interval>(&v)) return i->lo <= mx->limit;
        return std::get<AtLeast>(v).lo <= mx->limit;
    }
    if (const auto* mn = std::get_if<MinValue>(&p)) {
        if (const auto* c = std::get_if<Crisp>(&v)) return c->value >= mn->limit;
        if (const auto* i = std::get_if<Interval>(&v)) return i->hi >= mn->limit;
        return true;  // unbounded above
    }
    if (const auto* l = std::get_if<MinLevel>(&p)) return std::get<Ordinal>(v).level >= l->level;
    if (const auto* l = std::get_if<MaxLevel>(&p)) return std::get<Ordinal>(v).level <= l->level;
    const auto& allowed = std::get<AllowedSet>(p).labels;
    return allowed.find(std::get<Category>(v).label) != allowed.end();
}

inline const Alternative& find(const DecisionTask& task, const AlternativeId& id) {
    for (const auto& a : task.alternatives)
        if (a.id == id) return a;
    throw std::out_of_range("oracle: unknown alternative " + id);
}

}  // namespace detail

// Dominant subset of candidates on attrs, by exhaustive pairwise comparison.
inline std::vector<AlternativeId> brute_force_dominant(const std::vector<AlternativeId>& candidates,
                                                       const AttributeSet& attrs, DominanceMode mode,
                                                       const DecisionTask& task) {
    using detail::at;
    std::vector<AlternativeId> out;
    for (const auto& sid : candidates) {
        const auto& s = detail::find(task, sid);
        bool keep = true;
        if (mode == DominanceMode::global) {
            // Some attribute strictly better than every other plan's value...
            bool some_strict = false;
            for (auto k : attrs) {
                bool all = true;
                for (const auto& tid : candidates)
                    if (tid != sid && !detail::strictly_better(at(s, k, task), at(detail::find(task, tid), k, task)))
                        all = false;
                if (all) some_strict = true;
            }
            // ...and no attribute worse than any other plan's value.
            bool none_worse = true;
            for (auto k : attrs)
                for (const auto& tid : candidates)
                    if (tid != sid && !detail::weakly_better(at(s, k, task), at(detail::find(task, tid), k, task)))
                        none_worse = false;
            keep = some_strict && none_worse;
        } else {
            for (const auto& tid : candidates) {
                if (tid == sid) continue;
                const auto& t = detail::find(task, tid);
                bool t_never_worse = true;
                bool t_once_better = false;
                for (auto k : attrs) {
                    if (!detail::weakly_better(at(t, k, task), at(s, k, task))) t_never_worse = false;
                    if (detail::strictly_better(at(t, k, task), at(s, k, task))) t_once_better = true;
                }
                if (t_never_worse && t_once_better) keep = false;
            }
        }
        if (keep) out.push_back(sid);
    }
    return out;
}

// Sifting as a fixed-point loop: sweep the set, drop a plan that fails a
// basic threshold, and repeat until a sweep removes nothing.
inline std::vector<AlternativeId> brute_force_sift(const DecisionTask& task) {
    std::vector<AlternativeId> set;
    for (const auto& a : task.alternatives) set.push_back(a.id);
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t j = 0; j < set.size() && !removed; ++j) {
            const auto& s = detail::find(task, set[j]);
            for (const auto& t : task.thresholds) {
                if (!detail::passes(s.values.at(t.attribute), t.predicate)) {
                    set.erase(set.begin() + static_cast<std::ptrdiff_t>(j));
                    removed = true;
                    break;
                }
            }
        }
    }
    return set;
}

// Full pipeline recomputed naively.
inline Verdict brute_force_lt(const DecisionTask& task, DominanceMode mode = DominanceMode::global) {
    const auto feasible = brute_force_sift(task);
    if (feasible.empty()) return {ladder::Verdict::abstain, std::nullopt};
    if (feasible.size() == 1) {
        const auto& s = detail::find(task, feasible.front());
        if (task.aspiration)
            for (const auto& t : *task.aspiration)
                if (!detail::passes(s.values.at(t.attribute), t.predicate)) return {ladder::Verdict::abstain, std::nullopt};
        return {ladder::Verdict::chosen, s.id};
    }

    std::vector<AlternativeId> dominant = feasible;
    std::size_t r = task.partition.levels.size();
    while (r > 0) {
        dominant = brute_force_dominant(dominant, task.partition.levels[r - 1], mode, task);
        if (dominant.size() == 1) return {ladder::Verdict::chosen, dominant.front()};
        if (dominant.empty()) return {ladder::Verdict::repartition, std::nullopt};
        r = r - 1;
    }
    return {ladder::Verdict::no_unique_choice, std::nullopt};
}

// ---- random tasks -------------------------------------------------------------

// Relative weights of the value forms drawn for each attribute/value.
struct KindMix {
    double crisp = 1.0;
    double interval = 1.0;
    double at_least = 1.0;
    double ordinal = 1.0;
    double categorical = 1.0;

    static KindMix all() { return {}; }
    static KindMix total_orders() { return {1.0, 0.0, 0.0, 1.0, 0.0}; }
};

struct TaskShape {
    int n_alternatives = 4;  // upper bound: duplicates that cannot be redrawn are dropped
    int n_attributes = 4;
    int n_levels = 2;  // clamped to the number of dominance attributes
    KindMix mix = KindMix::all();
    double aspiration_probability = 0.5;
};

inline constexpr int kMaxAlternatives = 8;
inline constexpr int kMaxAttributes = 6;
inline constexpr int kMaxLevels = 4;

namespace detail {

inline const std::array<std::string, 4> kColors = {"red", "blue", "white", "green"};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }
    std::size_t pick(const std::vector<double>& weights) {
        return std::discrete_distribution<std::size_t>(weights.begin(), weights.end())(rng_);
    }
    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), rng_);
    }

private:
    std::mt19937_64 rng_;
};

inline AttributeValue draw_value(Gen& g, const Attribute& attr, const KindMix& mix) {
    switch (attr.kind) {
        case AttributeKind::ordinal: return Ordinal{g.uniform(1, 5)};
        case AttributeKind::categorical: return Category{kColors[static_cast<std::size_t>(g.uniform(0, 3))]};
        case AttributeKind::numeric: break;
    }
    const double base = g.uniform(0, 9);
    switch (g.pick({mix.crisp, mix.interval, mix.at_least})) {
        case 0: return Crisp{base};
        case 1: return Interval{base, base + g.uniform(0, 4)};
        default: return AtLeast{base};
    }
}

inline Predicate draw_predicate(Gen& g, const Attribute& attr, bool tight) {
    const bool aligned = !g.chance(0.2);
    const bool upper = (attr.polarity == Polarity::cost) == aligned;
    switch (attr.kind) {
        case AttributeKind::numeric:
            if (upper) return MaxValue{static_cast<double>(tight ? g.uniform(2, 7) : g.uniform(3, 12))};
            return MinValue{static_cast<double>(tight ? g.uniform(2, 7) : g.uniform(-3, 6))};
        case AttributeKind::ordinal:
            if (upper) return MaxLevel{tight ? g.uniform(2, 4) : g.uniform(3, 5)};
            return MinLevel{tight ? g.uniform(2, 4) : g.uniform(1, 3)};
        case AttributeKind::categorical: {
            std::vector<std::string> labels(kColors.begin(), kColors.end());
            g.shuffle(labels);
            AllowedSet s;
            s.labels.insert(labels.begin(), labels.begin() + (tight ? 2 : 3));
            return s;
        }
    }
    return MaxValue{0.0};
}

inline bool same_plan(const Alternative& a, const Alternative& b, const DecisionTask& task) {
    for (const auto& attr : task.attributes) {
        const auto x = orient(a.values.at(attr.id), attr.polarity);
        const auto y = orient(b.values.at(attr.id), attr.polarity);
        if (!(weakly_better(x, y) && weakly_better(y, x))) return false;
    }
    return true;
}

}  // namespace detail

// Deterministic per (seed, shape). Generated tasks satisfy every model
// invariant; an alternative that keeps colliding with an earlier one after
// repeated redraws is left out.
inline DecisionTask random_task(std::uint64_t seed, const TaskShape& shape) {
    if (shape.n_alternatives < 0 || shape.n_alternatives > kMaxAlternatives || shape.n_attributes < 1 ||
        shape.n_attributes > kMaxAttributes || shape.n_levels < 1 || shape.n_levels > kMaxLevels)
        throw std::invalid_argument("random_task: dimensions out of range");

    detail::Gen g(seed);
    DecisionTask task;
    task.task_id = "random-" + std::to_string(seed);

    const auto& mix = shape.mix;
    const double numeric_weight = mix.crisp + mix.interval + mix.at_least;
    for (int i = 1; i <= shape.n_attributes; ++i) {
        Attribute a;
        a.id = AttributeId{i};
        a.name = "attr" + std::to_string(i);
        a.kind = static_cast<AttributeKind>(g.pick({numeric_weight, mix.ordinal, mix.categorical}));
        a.polarity = a.kind == AttributeKind::categorical ? Polarity::none
                     : g.chance(0.5)                      ? Polarity::cost
                                                          : Polarity::benefit;
        task.attributes.push_back(std::move(a));
    }

    // Dominance attributes: a random subset large enough to fill every level.
    std::vector<AttributeId> ids;
    for (const auto& a : task.attributes) ids.push_back(a.id);
    g.shuffle(ids);
    const int levels = std::min(shape.n_levels, shape.n_attributes);
    const int n_dom = g.uniform(levels, shape.n_attributes);
    task.partition.levels.resize(static_cast<std::size_t>(levels));
    for (int i = 0; i < n_dom; ++i) {
        const auto slot = i < levels ? i : g.uniform(0, levels - 1);
        task.partition.levels[static_cast<std::size_t>(slot)].insert(ids[static_cast<std::size_t>(i)]);
    }

    // Basic attributes: everything outside the partition plus a random share
    // of the dominance attributes.
    for (int i = 0; i < shape.n_attributes; ++i)
        if (i >= n_dom || g.chance(0.4)) task.basic_ids.insert(ids[static_cast<std::size_t>(i)]);
    for (auto id : task.basic_ids)
        task.thresholds.push_back({id, detail::draw_predicate(g, task.attribute(id), false)});

    if (g.chance(shape.aspiration_probability)) {
        std::vector<Threshold> asp;
        for (auto id : task.partition.levels.back())
            if (g.chance(0.6)) asp.push_back({id, detail::draw_predicate(g, task.attribute(id), true)});
        task.aspiration = std::move(asp);
    }

    for (int n = 1; n <= shape.n_alternatives; ++n) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            Alternative alt;
            alt.id = "a" + std::to_string(n);
            for (const auto& attr : task.attributes) alt.values.emplace(attr.id, detail::draw_value(g, attr, mix));
            const bool duplicate = std::any_of(task.alternatives.begin(), task.alternatives.end(),
                                               [&](const Alternative& b) { return detail::same_plan(alt, b, task); });
            if (!duplicate) {
                task.alternatives.push_back(std::move(alt));
                break;
            }
        }
    }
    return task;
}

struct SweepLimits {
    int max_alternatives = 6;
    int max_attributes = 5;
    int max_levels = 3;
    KindMix mix = KindMix::all();
};

// Draws the task dimensions from the seed, then the task itself.
inline DecisionTask sweep_task(std::uint64_t seed, const SweepLimits& limits) {
    detail::Gen g(seed ^ 0x9e3779b97f4a7c15ULL);
    TaskShape shape;
    shape.n_alternatives = g.uniform(1, limits.max_alternatives);
    shape.n_attributes = g.uniform(1, limits.max_attributes);
    shape.n_levels = g.uniform(1, std::min(limits.max_levels, shape.n_attributes));
    shape.mix = limits.mix;
    return random_task(seed, shape);
}

}  // namespace ladder::oracle

#endif  // LADDER_ORACLE_HPP
