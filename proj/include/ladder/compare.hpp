// SPDX-License-Identifier: Apache-2.0

#ifndef LADDER_COMPARE_HPP
#define LADDER_COMPARE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/baselines.hpp"
#include "ladder/ladder.hpp"
#include "ladder/model.hpp"

namespace ladder {

enum class Theory { lt, pt, it };

inline const char* to_string(Theory t) {
    switch (t) {
        case Theory::lt: return "lt";
        case Theory::pt: return "pt";
        case Theory::it: return "it";
    }
    return "?";
}

inline std::optional<Theory> theory_from_string(std::string_view s) {
    if (s == "lt") return Theory::lt;
    if (s == "pt") return Theory::pt;
    if (s == "it") return Theory::it;
    return std::nullopt;
}

struct CompareOptions {
    std::vector<Theory> theories{Theory::lt, Theory::pt, Theory::it};
    std::optional<AttributeId> pt_risk_attribute;
    std::optional<AttributeId> it_profit_attribute;
    std::size_t it_budget = 0;
    DominanceMode mode = DominanceMode::global;
};

struct TheoryRow {
    Theory theory;
    BaselineChoice choice;
    std::optional<Verdict> lt_verdict;  // set for the ladder row only
};

// Runs each requested theory on the task. Requesting the prospect-theory
// proxy without a risk attribute is a configuration error.
inline std::vector<TheoryRow> compare_theories(const DecisionTask& task, const CompareOptions& opt) {
    std::vector<TheoryRow> rows;
    for (auto t : opt.theories) {
        switch (t) {
            case Theory::lt: {
                const auto d = decide(task, opt.mode);
                auto choice = d.outcome.verdict == Verdict::chosen ? BaselineChoice::of(*d.outcome.chosen)
                                                                   : BaselineChoice::undecidable();
                rows.push_back({t, std::move(choice), d.outcome.verdict});
                break;
            }
            case Theory::pt:
                rows.push_back({t, pt_proxy_choose(task, opt.pt_risk_attribute), std::nullopt});
                break;
            case Theory::it:
                rows.push_back({t, it_choose(task, opt.it_profit_attribute, opt.it_budget), std::nullopt});
                break;
        }
    }
    return rows;
}

// The proxy has nothing to work with when the task designates no risk
// attribute; report that instead of failing.
inline BaselineChoice pt_or_inapplicable(const DecisionTask& task, std::optional<AttributeId> risk_attribute) {
    if (!risk_attribute) return BaselineChoice::inapplicable();
    return pt_proxy_choose(task, risk_attribute);
}

enum class Judgement { correct, wrong, undecidable, inapplicable };

inline const char* to_string(Judgement j) {
    switch (j) {
        case Judgement::correct: return "correct";
        case Judgement::wrong: return "wrong";
        case Judgement::undecidable: return "undecidable";
        case Judgement::inapplicable: return "inapplicable";
    }
    return "?";
}

inline Judgement judge(const BaselineChoice& c, const AlternativeId& observed) {
    switch (c.status) {
        case BaselineChoice::Status::chosen: return *c.chosen == observed ? Judgement::correct : Judgement::wrong;
        case BaselineChoice::Status::undecidable: return Judgement::undecidable;
        case BaselineChoice::Status::inapplicable: return Judgement::inapplicable;
    }
    return Judgement::undecidable;
}

inline std::string describe(const TheoryRow& row) {
    if (row.choice.status == BaselineChoice::Status::chosen) return *row.choice.chosen;
    if (row.lt_verdict) {
        switch (*row.lt_verdict) {
            case Verdict::abstain: return "abstain";
            case Verdict::repartition: return "repartition";
            case Verdict::no_unique_choice: return "no-unique-choice";
            case Verdict::chosen: break;
        }
    }
    return row.choice.status == BaselineChoice::Status::inapplicable ? "inapplicable" : "undecidable";
}

}  // namespace ladder

#endif  // LADDER_COMPARE_HPP
