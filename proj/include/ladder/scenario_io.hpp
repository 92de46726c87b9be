// SPDX-License-Identifier: Apache-2.0
//
// Scenario files (UTF-8 JSON) and outcome traces.
//
//   {
//     "task_id": "case1",
//     "attributes": [{"id": 1, "name": "time", "kind": "numeric", "polarity": "cost", "unit": "min"}, ...],
//     "basic": {"ids": [1, 2], "thresholds": {"1": {"max": 50}, "2": {"min_level": "high"}}},
//     "dominance": {"levels": [[1, 2], [3]]},          // least important first
//     "aspiration": {"3": {"min": 10}},                 // optional, top level only
//     "alternatives": [{"id": "m1", "values": {"1": 40, "2": {"ordinal": "moderate"}, ...}}, ...]
//   }
//
// Values: number | {"interval": [lo, hi]} | {"at_least": x} |
//         {"ordinal": "label" or level} | {"category": "label"}.
// Predicates: {"max": x} | {"min": x} | {"min_level": l} | {"max_level": l} |
//             {"allowed": ["a", "b"]}.

#ifndef LADDER_SCENARIO_IO_HPP
#define LADDER_SCENARIO_IO_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ladder/model.hpp"
#include "ladder/validate.hpp"
#include "ladder/value_order.hpp"

namespace ladder {

class ScenarioError : public Error {
public:
    ScenarioError(ErrorCategory category, const std::string& message, std::vector<Violation> violations = {},
                  std::optional<std::size_t> line = std::nullopt, std::optional<std::size_t> column = std::nullopt)
        : Error(category, message), violations_(std::move(violations)), line_(line), column_(column) {}

    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }
    [[nodiscard]] std::optional<std::size_t> line() const noexcept { return line_; }
    [[nodiscard]] std::optional<std::size_t> column() const noexcept { return column_; }

private:
    std::vector<Violation> violations_;
    std::optional<std::size_t> line_;
    std::optional<std::size_t> column_;
};

namespace io_detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] inline void schema_error(const std::string& msg) { throw ScenarioError(ErrorCategory::schema, msg); }

inline const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) schema_error(where + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(where + " is missing key '" + key + "'");
    return *it;
}

inline double number(const json& j, const std::string& where) {
    if (!j.is_number()) schema_error(where + " must be a number");
    return j.get<double>();
}

inline int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) schema_error(where + " must be an integer");
    return j.get<int>();
}

inline std::string string(const json& j, const std::string& where) {
    if (!j.is_string()) schema_error(where + " must be a string");
    return j.get<std::string>();
}

inline AttributeId id_key(const std::string& key, const std::string& where) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        schema_error(where + ": key '" + key + "' is not an attribute id");
    }
    if (used != key.size()) schema_error(where + ": key '" + key + "' is not an attribute id");
    return AttributeId{v};
}

inline int level_of(const json& j, const std::string& where) {
    if (j.is_string()) return ordinal_from_label(j.get<std::string>());
    return integer(j, where);
}

inline const std::pair<std::string, const json*> single_entry(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1) schema_error(where + " must be an object with exactly one key");
    return {j.begin().key(), &j.begin().value()};
}

inline AttributeValue parse_value(const json& j, const std::string& where) {
    if (j.is_number()) return Crisp{j.get<double>()};
    const auto [key, body] = single_entry(j, where);
    if (key == "interval") {
        if (!body->is_array() || body->size() != 2) schema_error(where + ": interval must be [lo, hi]");
        return Interval{number((*body)[0], where), number((*body)[1], where)};
    }
    if (key == "at_least") return AtLeast{number(*body, where)};
    if (key == "ordinal") return Ordinal{level_of(*body, where)};
    if (key == "category") return Category{string(*body, where)};
    schema_error(where + ": unknown value form '" + key + "'");
}

inline Predicate parse_predicate(const json& j, const std::string& where) {
    const auto [key, body] = single_entry(j, where);
    if (key == "max") return MaxValue{number(*body, where)};
    if (key == "min") return MinValue{number(*body, where)};
    if (key == "min_level") return MinLevel{level_of(*body, where)};
    if (key == "max_level") return MaxLevel{level_of(*body, where)};
    if (key == "allowed") {
        if (!body->is_array()) schema_error(where + ": allowed must be an array of labels");
        AllowedSet s;
        for (const auto& l : *body) s.labels.insert(string(l, where));
        return s;
    }
    schema_error(where + ": unknown predicate '" + key + "'");
}

inline std::vector<Threshold> parse_thresholds(const json& j, const std::string& where) {
    if (!j.is_object()) schema_error(where + " must be an object keyed by attribute id");
    std::vector<Threshold> out;
    for (const auto& [key, body] : j.items()) {
        const auto id = id_key(key, where);
        out.push_back({id, parse_predicate(body, where + "[" + key + "]")});
    }
    return out;
}

inline AttributeKind parse_kind(const std::string& s) {
    if (s == "numeric") return AttributeKind::numeric;
    if (s == "ordinal") return AttributeKind::ordinal;
    if (s == "categorical") return AttributeKind::categorical;
    schema_error("unknown attribute kind '" + s + "'");
}

inline Polarity parse_polarity(const std::string& s) {
    if (s == "cost") return Polarity::cost;
    if (s == "benefit") return Polarity::benefit;
    if (s == "none") return Polarity::none;
    schema_error("unknown polarity '" + s + "'");
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline DecisionTask build_task(const json& root) {
    if (!root.is_object()) schema_error("scenario must be a JSON object");
    DecisionTask task;
    task.task_id = string(require(root, "task_id", "scenario"), "task_id");

    const auto& attrs = require(root, "attributes", "scenario");
    if (!attrs.is_array()) schema_error("attributes must be an array");
    for (const auto& a : attrs) {
        Attribute attr;
        attr.id = AttributeId{integer(require(a, "id", "attribute"), "attribute id")};
        const std::string where = "attribute " + std::to_string(attr.id.value);
        attr.name = string(require(a, "name", where), where + " name");
        attr.kind = parse_kind(string(require(a, "kind", where), where + " kind"));
        if (auto it = a.find("polarity"); it != a.end())
            attr.polarity = parse_polarity(string(*it, where + " polarity"));
        else
            attr.polarity = attr.kind == AttributeKind::categorical ? Polarity::none : Polarity::benefit;
        if (auto it = a.find("unit"); it != a.end()) attr.unit = string(*it, where + " unit");
        task.attributes.push_back(std::move(attr));
    }

    const auto& basic = require(root, "basic", "scenario");
    const auto& ids = require(basic, "ids", "basic");
    if (!ids.is_array()) schema_error("basic.ids must be an array");
    for (const auto& id : ids) task.basic_ids.insert(AttributeId{integer(id, "basic id")});
    task.thresholds = parse_thresholds(require(basic, "thresholds", "basic"), "basic.thresholds");

    const auto& levels = require(require(root, "dominance", "scenario"), "levels", "dominance");
    if (!levels.is_array()) schema_error("dominance.levels must be an array");
    for (const auto& lvl : levels) {
        if (!lvl.is_array()) schema_error("each dominance level must be an array of attribute ids");
        AttributeSet set;
        for (const auto& id : lvl) {
            const AttributeId a{integer(id, "dominance id")};
            if (!set.insert(a).second)
                throw ScenarioError(ErrorCategory::partition,
                                    "attribute " + std::to_string(a.value) + " listed twice in one dominance level");
        }
        task.partition.levels.push_back(std::move(set));
    }

    if (auto it = root.find("aspiration"); it != root.end() && !it->is_null())
        task.aspiration = parse_thresholds(*it, "aspiration");

    const auto& alts = require(root, "alternatives", "scenario");
    if (!alts.is_array()) schema_error("alternatives must be an array");
    for (const auto& a : alts) {
        Alternative alt;
        alt.id = string(require(a, "id", "alternative"), "alternative id");
        const std::string where = "alternative '" + alt.id + "'";
        const auto& values = require(a, "values", where);
        if (!values.is_object()) schema_error(where + " values must be an object keyed by attribute id");
        for (const auto& [key, v] : values.items())
            alt.values.emplace(id_key(key, where), parse_value(v, where + " attribute " + key));
        task.alternatives.push_back(std::move(alt));
    }
    return task;
}

inline ordered_json value_json(const AttributeValue& v) {
    return std::visit(
        [](const auto& x) -> ordered_json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Crisp>) return x.value;
            else if constexpr (std::is_same_v<T, Interval>) return {{"interval", {x.lo, x.hi}}};
            else if constexpr (std::is_same_v<T, AtLeast>) return {{"at_least", x.lo}};
            else if constexpr (std::is_same_v<T, Ordinal>) return {{"ordinal", std::string(label_from_ordinal(x.level))}};
            else return {{"category", x.label}};
        },
        v);
}

inline ordered_json predicate_json(const Predicate& p) {
    return std::visit(
        [](const auto& x) -> ordered_json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MaxValue>) return {{"max", x.limit}};
            else if constexpr (std::is_same_v<T, MinValue>) return {{"min", x.limit}};
            else if constexpr (std::is_same_v<T, MinLevel>) return {{"min_level", std::string(label_from_ordinal(x.level))}};
            else if constexpr (std::is_same_v<T, MaxLevel>) return {{"max_level", std::string(label_from_ordinal(x.level))}};
            else return {{"allowed", x.labels}};
        },
        p);
}

inline ordered_json thresholds_json(const std::vector<Threshold>& list) {
    ordered_json out = ordered_json::object();
    for (const auto& t : list) out[std::to_string(t.attribute.value)] = predicate_json(t.predicate);
    return out;
}

inline ordered_json ids_json(const AttributeSet& ids) {
    ordered_json out = ordered_json::array();
    for (auto id : ids) out.push_back(id.value);
    return out;
}

}  // namespace io_detail

// Structural parse only: syntax and shape. Invariants are left to
// validate_task so that every violation can be reported.
inline DecisionTask parse_scenario_unchecked(std::string_view text) {
    io_detail::json root;
    try {
        root = io_detail::json::parse(text);
    } catch (const io_detail::json::parse_error& e) {
        const auto [line, column] = io_detail::line_column(text, e.byte);
        std::ostringstream msg;
        msg << "line " << line << ", column " << column << ": " << e.what();
        throw ScenarioError(ErrorCategory::syntax, msg.str(), {}, line, column);
    } catch (const io_detail::json::out_of_range& e) {
        throw ScenarioError(ErrorCategory::invalid_value, e.what());
    }
    try {
        return io_detail::build_task(root);
    } catch (const io_detail::json::exception& e) {
        throw ScenarioError(ErrorCategory::schema, e.what());
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {  // e.g. an unknown ordinal label
        throw ScenarioError(e.category(), e.what());
    }
}

// Parses and validates. The error category is that of the first violation;
// the full list travels with the exception.
inline DecisionTask parse_scenario(std::string_view text) {
    auto task = parse_scenario_unchecked(text);
    auto violations = validate_task(task);
    if (!violations.empty()) {
        const auto category = violations.front().category;
        const auto message = violations.front().message;
        throw ScenarioError(category, message, std::move(violations));
    }
    return task;
}

inline std::string serialize_scenario(const DecisionTask& task) {
    using io_detail::ordered_json;
    ordered_json root;
    root["task_id"] = task.task_id;
    root["attributes"] = ordered_json::array();
    for (const auto& a : task.attributes) {
        ordered_json j;
        j["id"] = a.id.value;
        j["name"] = a.name;
        j["kind"] = to_string(a.kind);
        j["polarity"] = to_string(a.polarity);
        if (a.unit) j["unit"] = *a.unit;
        root["attributes"].push_back(std::move(j));
    }
    root["basic"]["ids"] = io_detail::ids_json(task.basic_ids);
    root["basic"]["thresholds"] = io_detail::thresholds_json(task.thresholds);
    root["dominance"]["levels"] = ordered_json::array();
    for (const auto& lvl : task.partition.levels) root["dominance"]["levels"].push_back(io_detail::ids_json(lvl));
    if (task.aspiration) root["aspiration"] = io_detail::thresholds_json(*task.aspiration);
    root["alternatives"] = ordered_json::array();
    for (const auto& alt : task.alternatives) {
        ordered_json values = ordered_json::object();
        for (const auto& [id, v] : alt.values) values[std::to_string(id.value)] = io_detail::value_json(v);
        root["alternatives"].push_back({{"id", alt.id}, {"values", std::move(values)}});
    }
    return root.dump(2) + "\n";
}

// ---- human-readable fragments ----------------------------------------------

inline std::string format_number(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string format_value(const AttributeValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Crisp>) return format_number(x.value);
            else if constexpr (std::is_same_v<T, Interval>) return "[" + format_number(x.lo) + "," + format_number(x.hi) + "]";
            else if constexpr (std::is_same_v<T, AtLeast>) return ">=" + format_number(x.lo);
            else if constexpr (std::is_same_v<T, Ordinal>) return std::to_string(x.level);
            else return x.label;
        },
        v);
}

inline std::string format_predicate(const Predicate& p) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MaxValue>) return "<= " + format_number(x.limit);
            else if constexpr (std::is_same_v<T, MinValue>) return ">= " + format_number(x.limit);
            else if constexpr (std::is_same_v<T, MinLevel>) return ">= " + std::to_string(x.level);
            else if constexpr (std::is_same_v<T, MaxLevel>) return "<= " + std::to_string(x.level);
            else {
                std::string s = "in {";
                bool first = true;
                for (const auto& l : x.labels) {
                    s += (first ? "" : ",") + l;
                    first = false;
                }
                return s + "}";
            }
        },
        p);
}

namespace io_detail {

template <class Range, class Fn>
std::string joined(const Range& r, Fn&& fn) {
    std::string s;
    bool first = true;
    for (const auto& x : r) {
        if (!first) s += ",";
        s += fn(x);
        first = false;
    }
    return s;
}

}  // namespace io_detail

// Header line "<Verdict>: <id or ->", then one line per visited level:
//   level 2 | attrs {3,4} | before [m2,m3] | after [m3]
inline std::string serialize_outcome(const LadderOutcome& outcome) {
    std::string out = std::string(to_string(outcome.verdict)) + ": " + outcome.chosen.value_or("-") + "\n";
    auto id = [](const AlternativeId& s) { return s; };
    for (const auto& rec : outcome.trace) {
        out += "level " + std::to_string(rec.r) + " | attrs {" +
               io_detail::joined(rec.attribute_ids, [](AttributeId a) { return std::to_string(a.value); }) +
               "} | before [" + io_detail::joined(rec.survivors_before, id) + "] | after [" +
               io_detail::joined(rec.survivors_after, id) + "]\n";
    }
    return out;
}

inline nlohmann::ordered_json outcome_json(const LadderOutcome& outcome) {
    using io_detail::ordered_json;
    ordered_json j;
    j["verdict"] = to_string(outcome.verdict);
    j["chosen"] = outcome.chosen ? ordered_json(*outcome.chosen) : ordered_json(nullptr);
    j["trace"] = ordered_json::array();
    for (const auto& rec : outcome.trace) {
        ordered_json r;
        r["r"] = rec.r;
        r["attribute_ids"] = io_detail::ids_json(rec.attribute_ids);
        r["survivors_before"] = rec.survivors_before;
        r["survivors_after"] = rec.survivors_after;
        j["trace"].push_back(std::move(r));
    }
    return j;
}

inline nlohmann::ordered_json sift_json(const SiftResult& sift) {
    using io_detail::ordered_json;
    ordered_json j;
    j["feasible"] = sift.feasible;
    j["eliminations"] = ordered_json::array();
    for (const auto& e : sift.eliminations) {
        j["eliminations"].push_back({{"alternative", e.alternative},
                                     {"attribute", e.attribute.value},
                                     {"threshold", io_detail::predicate_json(e.threshold.predicate)},
                                     {"value", io_detail::value_json(e.value)}});
    }
    return j;
}

}  // namespace ladder

#endif  // LADDER_SCENARIO_IO_HPP
