// SPDX-License-Identifier: Apache-2.0

#ifndef LADDER_VALUE_ORDER_HPP
#define LADDER_VALUE_ORDER_HPP

#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ladder/model.hpp"

namespace ladder {

enum class PartialOrdering { better, worse, equal, incomparable };

inline const char* to_string(PartialOrdering o) {
    switch (o) {
        case PartialOrdering::better: return "Better";
        case PartialOrdering::worse: return "Worse";
        case PartialOrdering::equal: return "Equal";
        case PartialOrdering::incomparable: return "Incomparable";
    }
    return "?";
}

inline PartialOrdering reverse(PartialOrdering o) {
    if (o == PartialOrdering::better) return PartialOrdering::worse;
    if (o == PartialOrdering::worse) return PartialOrdering::better;
    return o;
}

inline constexpr std::array<std::string_view, 5> kOrdinalLabels = {
    "very_low", "low", "moderate", "high", "very_high"};

inline int ordinal_from_label(std::string_view label) {
    for (std::size_t i = 0; i < kOrdinalLabels.size(); ++i)
        if (kOrdinalLabels[i] == label) return static_cast<int>(i) + kMinLevel;
    throw Error(ErrorCategory::invalid_value, "unknown ordinal label '" + std::string(label) + "'");
}

inline std::string_view label_from_ordinal(int level) {
    if (level < kMinLevel || level > kMaxLevel)
        throw Error(ErrorCategory::invalid_value, "ordinal level out of range: " + std::to_string(level));
    return kOrdinalLabels[static_cast<std::size_t>(level - kMinLevel)];
}

namespace detail {

struct Bounds {
    double lo;
    double hi;
};

// Numeric-like values viewed as closed bounds; crisp values are degenerate.
inline Bounds bounds_of(const AttributeValue& v) {
    if (const auto* c = std::get_if<Crisp>(&v)) return {c->value, c->value};
    if (const auto* i = std::get_if<Interval>(&v)) return {i->lo, i->hi};
    if (const auto* a = std::get_if<AtLeast>(&v)) return {a->lo, std::numeric_limits<double>::infinity()};
    throw std::invalid_argument("bounds_of: value is not numeric");
}

// Componentwise bound order with larger = better.
inline PartialOrdering compare_bounds(Bounds a, Bounds b) {
    const bool ge = a.lo >= b.lo && a.hi >= b.hi;
    const bool le = a.lo <= b.lo && a.hi <= b.hi;
    if (ge && le) return PartialOrdering::equal;
    if (ge) return PartialOrdering::better;
    if (le) return PartialOrdering::worse;
    return PartialOrdering::incomparable;
}

[[noreturn]] inline void kind_error(const char* where, AttributeKind a, AttributeKind b) {
    throw std::invalid_argument(std::string(where) + ": kind mismatch (" + to_string(a) + " vs " +
                                to_string(b) + ")");
}

}  // namespace detail

// Compares a against b under the attribute's polarity. Numeric values are
// ordered componentwise on their bounds, so crossing intervals are
// incomparable. Categories are never strictly ordered.
inline PartialOrdering compare_values(const AttributeValue& a, const AttributeValue& b, Polarity polarity) {
    const auto ka = kind_of(a);
    const auto kb = kind_of(b);
    if (ka != kb) detail::kind_error("compare_values", ka, kb);

    PartialOrdering benefit_order{};
    switch (ka) {
        case AttributeKind::categorical:
            return std::get<Category>(a).label == std::get<Category>(b).label ? PartialOrdering::equal
                                                                             : PartialOrdering::incomparable;
        case AttributeKind::ordinal: {
            const int la = std::get<Ordinal>(a).level;
            const int lb = std::get<Ordinal>(b).level;
            benefit_order = la == lb ? PartialOrdering::equal
                            : la > lb ? PartialOrdering::better
                                      : PartialOrdering::worse;
            break;
        }
        case AttributeKind::numeric:
            benefit_order = detail::compare_bounds(detail::bounds_of(a), detail::bounds_of(b));
            break;
    }
    return polarity == Polarity::cost ? reverse(benefit_order) : benefit_order;
}

// Interval-valued alternatives are judged on their best case: a `max`
// threshold looks at the lower bound, a `min` threshold at the upper bound.
inline bool satisfies_threshold(const AttributeValue& v, const Predicate& p) {
    const auto kv = kind_of(v);
    const auto kp = kind_of(p);
    if (kv != kp) detail::kind_error("satisfies_threshold", kv, kp);

    return std::visit(
        [&](const auto& pred) -> bool {
            using T = std::decay_t<decltype(pred)>;
            if constexpr (std::is_same_v<T, MaxValue>) {
                return detail::bounds_of(v).lo <= pred.limit;
            } else if constexpr (std::is_same_v<T, MinValue>) {
                return detail::bounds_of(v).hi >= pred.limit;
            } else if constexpr (std::is_same_v<T, MinLevel>) {
                return std::get<Ordinal>(v).level >= pred.level;
            } else if constexpr (std::is_same_v<T, MaxLevel>) {
                return std::get<Ordinal>(v).level <= pred.level;
            } else {
                return pred.labels.contains(std::get<Category>(v).label);
            }
        },
        p);
}

inline bool satisfies_threshold(const AttributeValue& v, const Threshold& t) {
    return satisfies_threshold(v, t.predicate);
}

}  // namespace ladder

#endif  // LADDER_VALUE_ORDER_HPP
