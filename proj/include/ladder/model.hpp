// SPDX-License-Identifier: Apache-2.0
//
// Domain types shared by every part of the decision engine. The types are
// plain values: construction never throws, and validate_task() (validate.hpp)
// is the single place where their invariants are checked.

#ifndef LADDER_MODEL_HPP
#define LADDER_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ladder {

struct AttributeId {
    int value = 0;
    friend auto operator<=>(AttributeId, AttributeId) = default;
    friend std::ostream& operator<<(std::ostream& os, AttributeId id) { return os << id.value; }
};

using AlternativeId = std::string;
using AttributeSet = std::set<AttributeId>;

// ---- attribute values ------------------------------------------------------

struct Crisp {
    double value = 0.0;
    friend bool operator==(const Crisp&, const Crisp&) = default;
};

// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Open-ended value such as "3 years or more": [lo, +inf).
struct AtLeast {
    double lo = 0.0;
    friend bool operator==(const AtLeast&, const AtLeast&) = default;
};

// Five-level qualitative scale, 1 = very low ... 5 = very high.
struct Ordinal {
    int level = 1;
    friend bool operator==(const Ordinal&, const Ordinal&) = default;
};

struct Category {
    std::string label;
    friend bool operator==(const Category&, const Category&) = default;
};

using AttributeValue = std::variant<Crisp, Interval, AtLeast, Ordinal, Category>;

inline constexpr int kMinLevel = 1;
inline constexpr int kMaxLevel = 5;

// ---- attributes ------------------------------------------------------------

enum class AttributeKind { numeric, ordinal, categorical };

enum class Polarity {
    cost,     // smaller is better
    benefit,  // larger is better
    none,     // categorical, unordered
};

struct Attribute {
    AttributeId id;
    std::string name;
    AttributeKind kind = AttributeKind::numeric;
    Polarity polarity = Polarity::benefit;
    std::optional<std::string> unit;
    friend bool operator==(const Attribute&, const Attribute&) = default;
};

inline AttributeKind kind_of(const AttributeValue& v) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Ordinal>) return AttributeKind::ordinal;
            else if constexpr (std::is_same_v<T, Category>) return AttributeKind::categorical;
            else return AttributeKind::numeric;
        },
        v);
}

// ---- thresholds ------------------------------------------------------------

struct MaxValue {
    double limit = 0.0;
    friend bool operator==(const MaxValue&, const MaxValue&) = default;
};
struct MinValue {
    double limit = 0.0;
    friend bool operator==(const MinValue&, const MinValue&) = default;
};
struct MinLevel {
    int level = kMinLevel;
    friend bool operator==(const MinLevel&, const MinLevel&) = default;
};
struct MaxLevel {
    int level = kMaxLevel;
    friend bool operator==(const MaxLevel&, const MaxLevel&) = default;
};
struct AllowedSet {
    std::set<std::string> labels;
    friend bool operator==(const AllowedSet&, const AllowedSet&) = default;
};

using Predicate = std::variant<MaxValue, MinValue, MinLevel, MaxLevel, AllowedSet>;

inline AttributeKind kind_of(const Predicate& p) {
    switch (p.index()) {
        case 0:
        case 1: return AttributeKind::numeric;
        case 2:
        case 3: return AttributeKind::ordinal;
        default: return AttributeKind::categorical;
    }
}

struct Threshold {
    AttributeId attribute;
    Predicate predicate;
    friend bool operator==(const Threshold&, const Threshold&) = default;
};

// ---- partition, alternatives, task -----------------------------------------

// Importance levels of the dominance attributes. levels[0] is the least
// important level (index 1), levels.back() the most important (index L).
struct DominancePartition {
    std::vector<AttributeSet> levels;

    [[nodiscard]] std::size_t level_count() const { return levels.size(); }

    // 1-based, matching the level numbers printed in traces.
    [[nodiscard]] const AttributeSet& level(std::size_t r) const { return levels.at(r - 1); }

    [[nodiscard]] AttributeSet attributes() const {
        AttributeSet all;
        for (const auto& lvl : levels) all.insert(lvl.begin(), lvl.end());
        return all;
    }

    friend bool operator==(const DominancePartition&, const DominancePartition&) = default;
};

struct Alternative {
    AlternativeId id;
    std::map<AttributeId, AttributeValue> values;

    [[nodiscard]] const AttributeValue* value(AttributeId a) const {
        auto it = values.find(a);
        return it == values.end() ? nullptr : &it->second;
    }

    friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct DecisionTask {
    std::string task_id;
    std::vector<Attribute> attributes;
    AttributeSet basic_ids;
    std::vector<Threshold> thresholds;
    DominancePartition partition;
    std::optional<std::vector<Threshold>> aspiration;
    std::vector<Alternative> alternatives;

    [[nodiscard]] const Attribute* find_attribute(AttributeId id) const {
        auto it = std::find_if(attributes.begin(), attributes.end(),
                               [&](const Attribute& a) { return a.id == id; });
        return it == attributes.end() ? nullptr : &*it;
    }

    [[nodiscard]] const Attribute& attribute(AttributeId id) const {
        if (const auto* a = find_attribute(id)) return *a;
        throw std::out_of_range("unknown attribute id " + std::to_string(id.value));
    }

    [[nodiscard]] const Alternative* find_alternative(const AlternativeId& id) const {
        auto it = std::find_if(alternatives.begin(), alternatives.end(),
                               [&](const Alternative& a) { return a.id == id; });
        return it == alternatives.end() ? nullptr : &*it;
    }

    [[nodiscard]] const Alternative& alternative(const AlternativeId& id) const {
        if (const auto* a = find_alternative(id)) return *a;
        throw std::out_of_range("unknown alternative id " + id);
    }

    [[nodiscard]] std::vector<AlternativeId> alternative_ids() const {
        std::vector<AlternativeId> ids;
        ids.reserve(alternatives.size());
        for (const auto& a : alternatives) ids.push_back(a.id);
        return ids;
    }

    friend bool operator==(const DecisionTask&, const DecisionTask&) = default;
};

// ---- results ---------------------------------------------------------------

struct Elimination {
    AlternativeId alternative;
    AttributeId attribute;
    Threshold threshold;
    AttributeValue value;
    friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct SiftResult {
    std::vector<AlternativeId> feasible;
    // One record per failing (alternative, threshold) pair; an alternative
    // failing several thresholds appears several times.
    std::vector<Elimination> eliminations;

    [[nodiscard]] std::vector<AlternativeId> eliminated() const {
        std::vector<AlternativeId> ids;
        for (const auto& e : eliminations)
            if (std::find(ids.begin(), ids.end(), e.alternative) == ids.end())
                ids.push_back(e.alternative);
        return ids;
    }
};

struct LevelRecord {
    std::size_t r = 0;
    AttributeSet attribute_ids;
    std::vector<AlternativeId> survivors_before;
    std::vector<AlternativeId> survivors_after;
    friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

enum class Verdict { chosen, abstain, repartition, no_unique_choice };

struct LadderOutcome {
    Verdict verdict = Verdict::abstain;
    std::optional<AlternativeId> chosen;
    std::vector<LevelRecord> trace;
    friend bool operator==(const LadderOutcome&, const LadderOutcome&) = default;
};

enum class DominanceMode {
    // Keep the plan, if any, that beats every rival in the literal sense:
    // one attribute strictly better than all rivals, no attribute worse than
    // any rival. At most one plan survives.
    global,
    // Keep every plan that no rival strictly dominates. Never empty.
    undominated,
};

inline const char* to_string(DominanceMode m) { return m == DominanceMode::global ? "global" : "undominated"; }

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::chosen: return "Chosen";
        case Verdict::abstain: return "Abstain";
        case Verdict::repartition: return "Repartition";
        case Verdict::no_unique_choice: return "NoUniqueChoice";
    }
    return "?";
}

inline const char* to_string(AttributeKind k) {
    switch (k) {
        case AttributeKind::numeric: return "numeric";
        case AttributeKind::ordinal: return "ordinal";
        case AttributeKind::categorical: return "categorical";
    }
    return "?";
}

inline const char* to_string(Polarity p) {
    switch (p) {
        case Polarity::cost: return "cost";
        case Polarity::benefit: return "benefit";
        case Polarity::none: return "none";
    }
    return "?";
}

// ---- errors ----------------------------------------------------------------

enum class ErrorCategory {
    syntax,
    schema,
    unknown_reference,
    kind_mismatch,
    duplicate_id,
    duplicate_alternative,
    invalid_value,
    partition,
    coverage,
    missing_value,
    configuration,
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::syntax: return "syntax";
        case ErrorCategory::schema: return "schema";
        case ErrorCategory::unknown_reference: return "unknown-reference";
        case ErrorCategory::kind_mismatch: return "kind-mismatch";
        case ErrorCategory::duplicate_id: return "duplicate-id";
        case ErrorCategory::duplicate_alternative: return "duplicate-alternative";
        case ErrorCategory::invalid_value: return "invalid-value";
        case ErrorCategory::partition: return "partition";
        case ErrorCategory::coverage: return "coverage";
        case ErrorCategory::missing_value: return "missing-value";
        case ErrorCategory::configuration: return "configuration";
    }
    return "?";
}

struct Violation {
    ErrorCategory category;
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(std::string(to_string(category)) + ": " + message), category_(category) {}

    [[nodiscard]] ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

}  // namespace ladder

#endif  // LADDER_MODEL_HPP
