// SPDX-License-Identifier: Apache-2.0
//
// Baseline choosers used for comparison with the ladder engine: a
// prospect-theory value/weighting library plus the risk-minimizing proxy
// applied to choice tasks, and an image-theory compatibility/profitability
// chooser.

#ifndef LADDER_BASELINES_HPP
#define LADDER_BASELINES_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ladder/model.hpp"
#include "ladder/value_order.hpp"

namespace ladder {

// ---- prospect theory numerics ----------------------------------------------

// Defaults are the median estimates commonly quoted for cumulative prospect
// theory (Tversky & Kahneman, 1992).
struct PtParams {
    double alpha = 0.88;   // gain curvature
    double beta = 0.88;    // loss curvature
    double lambda = 2.25;  // loss aversion
    double gamma = 0.61;   // gain probability weighting
    double delta = 0.69;   // loss probability weighting
};

// Throws on non-positive parameters; returns advisory warnings otherwise.
inline std::vector<std::string> check_params(const PtParams& p) {
    for (double v : {p.alpha, p.beta, p.lambda, p.gamma, p.delta})
        if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("PtParams: all parameters must be positive");
    std::vector<std::string> warnings;
    if (p.lambda < 1.0) warnings.emplace_back("lambda < 1: losses loom smaller than gains");
    return warnings;
}

inline double pt_value(double x, const PtParams& p) {
    if (x >= 0.0) return std::pow(x, p.alpha);
    return -p.lambda * std::pow(-x, p.beta);
}

inline double pt_weight(double prob, double gamma) {
    if (prob < 0.0 || prob > 1.0) throw std::invalid_argument("pt_weight: probability outside [0,1]");
    if (prob == 0.0) return 0.0;
    if (prob == 1.0) return 1.0;
    if (gamma == 1.0) return prob;
    const double num = std::pow(prob, gamma);
    return num / std::pow(num + std::pow(1.0 - prob, gamma), 1.0 / gamma);
}

struct Outcome {
    double payoff = 0.0;
    double probability = 0.0;
};

struct Lottery {
    std::vector<Outcome> outcomes;
};

class UnsupportedLottery : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kProbabilityTolerance = 1e-9;

// Separable two-outcome form: sum of w(p) * v(x), with gains weighted by
// gamma and losses by delta.
inline double cpt_evaluate(const Lottery& lottery, const PtParams& p) {
    double total_probability = 0.0;
    int nonzero = 0;
    for (const auto& o : lottery.outcomes) {
        if (o.probability < 0.0 || o.probability > 1.0)
            throw std::invalid_argument("cpt_evaluate: probability outside [0,1]");
        total_probability += o.probability;
        if (o.payoff != 0.0) ++nonzero;
    }
    if (std::abs(total_probability - 1.0) > kProbabilityTolerance)
        throw std::invalid_argument("cpt_evaluate: probabilities do not sum to 1");
    if (nonzero > 2) throw UnsupportedLottery("cpt_evaluate: more than two nonzero outcomes");

    double value = 0.0;
    for (const auto& o : lottery.outcomes) {
        if (o.payoff == 0.0) continue;
        const double w = pt_weight(o.probability, o.payoff > 0.0 ? p.gamma : p.delta);
        value += w * pt_value(o.payoff, p);
    }
    return value;
}

// ---- choice baselines ------------------------------------------------------

struct BaselineChoice {
    enum class Status { chosen, undecidable, inapplicable };
    Status status = Status::undecidable;
    std::optional<AlternativeId> chosen;

    static BaselineChoice of(AlternativeId id) { return {Status::chosen, std::move(id)}; }
    static BaselineChoice undecidable() { return {Status::undecidable, std::nullopt}; }
    static BaselineChoice inapplicable() { return {Status::inapplicable, std::nullopt}; }

    friend bool operator==(const BaselineChoice&, const BaselineChoice&) = default;
};

namespace detail {

// The candidate that compares Better than every other one on attribute k.
inline std::optional<AlternativeId> unique_best(const std::vector<const Alternative*>& pool, const Attribute& attr) {
    for (const auto* s : pool) {
        bool best = true;
        for (const auto* t : pool) {
            if (s == t) continue;
            if (compare_values(s->values.at(attr.id), t->values.at(attr.id), attr.polarity) != PartialOrdering::better) {
                best = false;
                break;
            }
        }
        if (best) return s->id;
    }
    return std::nullopt;
}

}  // namespace detail

// Prospect-theory proxy: under a gain frame the decision maker minimizes
// risk, so the choice is the alternative with the uniquely lowest value on
// the designated risk attribute. There is no sifting stage.
inline BaselineChoice pt_proxy_choose(const DecisionTask& task, std::optional<AttributeId> risk_attribute) {
    if (!risk_attribute) throw Error(ErrorCategory::configuration, "prospect-theory proxy needs a risk attribute");
    const auto* attr = task.find_attribute(*risk_attribute);
    if (attr == nullptr)
        throw Error(ErrorCategory::configuration, "risk attribute " + std::to_string(risk_attribute->value) +
                                                      " is not declared");
    if (attr->kind == AttributeKind::categorical || attr->polarity != Polarity::cost)
        throw Error(ErrorCategory::configuration, "risk attribute must be a numeric or ordinal cost attribute");

    std::vector<const Alternative*> pool;
    for (const auto& a : task.alternatives) pool.push_back(&a);
    if (auto id = detail::unique_best(pool, *attr)) return BaselineChoice::of(*id);
    return BaselineChoice::undecidable();
}

inline std::size_t threshold_violations(const Alternative& alt, const DecisionTask& task) {
    std::size_t n = 0;
    for (const auto& t : task.thresholds)
        if (!satisfies_threshold(alt.values.at(t.attribute), t)) ++n;
    return n;
}

// Alternatives surviving the image-theory compatibility test.
inline std::vector<AlternativeId> it_compatible(const DecisionTask& task, std::size_t rejection_budget = 0) {
    std::vector<AlternativeId> out;
    for (const auto& a : task.alternatives)
        if (threshold_violations(a, task) <= rejection_budget) out.push_back(a.id);
    return out;
}

// Image-theory chooser: compatibility screening by violation count, then a
// profitability test on one designated quantitative attribute. Without such
// an attribute, or when the survivors cannot be separated on it, the
// profitability test has nothing to decide on.
inline BaselineChoice it_choose(const DecisionTask& task, std::optional<AttributeId> profit_attribute,
                                std::size_t rejection_budget = 0) {
    const auto survivors = it_compatible(task, rejection_budget);
    if (survivors.size() == 1) return BaselineChoice::of(survivors.front());
    if (survivors.empty() || !profit_attribute) return BaselineChoice::undecidable();

    const auto* attr = task.find_attribute(*profit_attribute);
    if (attr == nullptr || attr->kind != AttributeKind::numeric) return BaselineChoice::undecidable();

    std::vector<const Alternative*> pool;
    for (const auto& id : survivors) pool.push_back(&task.alternative(id));
    if (auto id = detail::unique_best(pool, *attr)) return BaselineChoice::of(*id);
    return BaselineChoice::undecidable();
}

}  // namespace ladder

#endif  // LADDER_BASELINES_HPP
