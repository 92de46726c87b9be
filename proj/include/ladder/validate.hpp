// SPDX-License-Identifier: Apache-2.0

#ifndef LADDER_VALIDATE_HPP
#define LADDER_VALIDATE_HPP

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ladder/model.hpp"
#include "ladder/value_order.hpp"

namespace ladder {

// Two alternatives are completely equal when every attribute value compares
// Equal. Both must carry kind-consistent values for every task attribute.
inline bool alternatives_equal(const Alternative& a, const Alternative& b, const DecisionTask& task) {
    for (const auto& attr : task.attributes) {
        const auto* va = a.value(attr.id);
        const auto* vb = b.value(attr.id);
        if (va == nullptr || vb == nullptr) return false;
        if (compare_values(*va, *vb, attr.polarity) != PartialOrdering::equal) return false;
    }
    return true;
}

namespace detail {

inline bool value_is_well_formed(const AttributeValue& v, std::string& why) {
    if (const auto* c = std::get_if<Crisp>(&v)) {
        if (!std::isfinite(c->value)) return why = "crisp value must be finite", false;
    } else if (const auto* i = std::get_if<Interval>(&v)) {
        if (!std::isfinite(i->lo) || !std::isfinite(i->hi)) return why = "interval bounds must be finite", false;
        if (i->lo > i->hi) return why = "interval requires lo <= hi", false;
    } else if (const auto* a = std::get_if<AtLeast>(&v)) {
        if (!std::isfinite(a->lo)) return why = "at_least requires a finite lower bound", false;
    } else if (const auto* o = std::get_if<Ordinal>(&v)) {
        if (o->level < kMinLevel || o->level > kMaxLevel) return why = "ordinal level must be in 1..5", false;
    }
    return true;
}

inline bool predicate_is_well_formed(const Predicate& p, std::string& why) {
    if (const auto* mx = std::get_if<MaxValue>(&p); mx && !std::isfinite(mx->limit))
        return why = "threshold limit must be finite", false;
    if (const auto* mn = std::get_if<MinValue>(&p); mn && !std::isfinite(mn->limit))
        return why = "threshold limit must be finite", false;
    if (const auto* l = std::get_if<MinLevel>(&p); l && (l->level < kMinLevel || l->level > kMaxLevel))
        return why = "threshold level must be in 1..5", false;
    if (const auto* l = std::get_if<MaxLevel>(&p); l && (l->level < kMinLevel || l->level > kMaxLevel))
        return why = "threshold level must be in 1..5", false;
    return true;
}

class ViolationLog {
public:
    template <class... Parts>
    void add(ErrorCategory c, const Parts&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        out_.push_back({c, os.str()});
    }
    std::vector<Violation> take() { return std::move(out_); }

private:
    std::vector<Violation> out_;
};

inline void check_thresholds(const DecisionTask& task, const std::vector<Threshold>& list, const char* what,
                             const AttributeSet& allowed, ViolationLog& log) {
    std::set<AttributeId> seen;
    for (const auto& t : list) {
        const auto* attr = task.find_attribute(t.attribute);
        if (attr == nullptr) {
            log.add(ErrorCategory::unknown_reference, what, " threshold references undeclared attribute ",
                    t.attribute);
            continue;
        }
        if (!seen.insert(t.attribute).second)
            log.add(ErrorCategory::coverage, "more than one ", what, " threshold for attribute ", t.attribute);
        if (!allowed.contains(t.attribute))
            log.add(ErrorCategory::coverage, what, " threshold on attribute ", t.attribute,
                    " which is outside its permitted attribute set");
        if (kind_of(t.predicate) != attr->kind)
            log.add(ErrorCategory::kind_mismatch, what, " threshold kind does not match ", to_string(attr->kind),
                    " attribute ", t.attribute);
        if (std::string why; !predicate_is_well_formed(t.predicate, why))
            log.add(ErrorCategory::invalid_value, what, " threshold on attribute ", t.attribute, ": ", why);
    }
}

}  // namespace detail

// Returns every violated invariant; an empty list means the task is usable.
inline std::vector<Violation> validate_task(const DecisionTask& task) {
    detail::ViolationLog log;

    // attributes
    std::set<AttributeId> declared;
    for (const auto& a : task.attributes) {
        if (a.id.value <= 0) log.add(ErrorCategory::invalid_value, "attribute id must be positive, got ", a.id);
        if (!declared.insert(a.id).second) log.add(ErrorCategory::duplicate_id, "duplicate attribute id ", a.id);
        const bool categorical = a.kind == AttributeKind::categorical;
        if (categorical != (a.polarity == Polarity::none))
            log.add(ErrorCategory::kind_mismatch, "attribute ", a.id, " is ", to_string(a.kind),
                    " but has polarity ", to_string(a.polarity));
    }

    // basic attributes and their thresholds
    for (auto id : task.basic_ids)
        if (!declared.contains(id)) log.add(ErrorCategory::unknown_reference, "basic id ", id, " is not declared");
    detail::check_thresholds(task, task.thresholds, "basic", task.basic_ids, log);
    for (auto id : task.basic_ids) {
        const bool covered = std::any_of(task.thresholds.begin(), task.thresholds.end(),
                                         [&](const Threshold& t) { return t.attribute == id; });
        if (!covered) log.add(ErrorCategory::coverage, "basic attribute ", id, " has no threshold");
    }

    // dominance partition
    std::map<AttributeId, std::size_t> owner;
    for (std::size_t j = 0; j < task.partition.levels.size(); ++j) {
        const auto& level = task.partition.levels[j];
        if (level.empty()) log.add(ErrorCategory::partition, "dominance level ", j + 1, " is empty");
        for (auto id : level) {
            if (!declared.contains(id))
                log.add(ErrorCategory::unknown_reference, "dominance level ", j + 1, " references undeclared attribute ",
                        id);
            auto [it, inserted] = owner.emplace(id, j + 1);
            if (!inserted)
                log.add(ErrorCategory::partition, "attribute ", id, " appears in dominance levels ", it->second, " and ",
                        j + 1);
        }
    }
    for (auto id : declared)
        if (!task.basic_ids.contains(id) && !owner.contains(id))
            log.add(ErrorCategory::coverage, "attribute ", id, " is neither basic nor in a dominance level");

    if (task.aspiration) {
        AttributeSet top;
        if (task.partition.level_count() > 0) top = task.partition.levels.back();
        detail::check_thresholds(task, *task.aspiration, "aspiration", top, log);
    }

    // alternatives
    std::set<AlternativeId> alt_ids;
    std::vector<bool> clean(task.alternatives.size(), true);
    for (std::size_t i = 0; i < task.alternatives.size(); ++i) {
        const auto& alt = task.alternatives[i];
        if (!alt_ids.insert(alt.id).second) log.add(ErrorCategory::duplicate_id, "duplicate alternative id '", alt.id, "'");
        for (const auto& [id, v] : alt.values) {
            const auto* attr = task.find_attribute(id);
            if (attr == nullptr) {
                log.add(ErrorCategory::unknown_reference, "alternative '", alt.id, "' has a value for undeclared attribute ",
                        id);
                clean[i] = false;
                continue;
            }
            if (kind_of(v) != attr->kind) {
                log.add(ErrorCategory::kind_mismatch, "alternative '", alt.id, "' value for attribute ", id,
                        " is not ", to_string(attr->kind));
                clean[i] = false;
            }
            if (std::string why; !detail::value_is_well_formed(v, why)) {
                log.add(ErrorCategory::invalid_value, "alternative '", alt.id, "' attribute ", id, ": ", why);
                clean[i] = false;
            }
        }
        for (const auto& attr : task.attributes) {
            if (!alt.values.contains(attr.id)) {
                log.add(ErrorCategory::missing_value, "alternative '", alt.id, "' has no value for attribute ", attr.id);
                clean[i] = false;
            }
        }
    }

    for (std::size_t i = 0; i < task.alternatives.size(); ++i) {
        if (!clean[i]) continue;
        for (std::size_t j = i + 1; j < task.alternatives.size(); ++j) {
            if (!clean[j]) continue;
            if (alternatives_equal(task.alternatives[i], task.alternatives[j], task))
                log.add(ErrorCategory::duplicate_alternative, "alternatives '", task.alternatives[i].id, "' and '",
                        task.alternatives[j].id, "' are completely equal on every attribute");
        }
    }

    return log.take();
}

}  // namespace ladder

#endif  // LADDER_VALIDATE_HPP
