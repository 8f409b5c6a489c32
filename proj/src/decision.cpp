#include "infoval/decision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_set>

namespace infoval {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) throw SchemaError("state space needs at least 2 states");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw SchemaError("duplicate state label: " + l);
    }
}

std::size_t StateSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw SchemaError("unknown state label: " + label);
}

std::size_t GridSpec::points() const {
    if (!(step > 0.0) || !(hi > lo)) throw SchemaError("grid requires step > 0 and hi > lo");
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
}

std::size_t GridSpec::nearest_index(double x) const {
    if (!std::isfinite(x)) throw SchemaError("non-finite grid value");
    double idx = std::floor((x - lo) / step + 0.5);
    if (idx < 0.0) return 0;
    std::size_t n = points();
    if (idx >= static_cast<double>(n)) return n - 1;
    return static_cast<std::size_t>(idx);
}

std::string GridSpec::label(std::size_t i) const {
    int decimals = 0;
    double s = step;
    while (s < 0.999999 && decimals < 9) {
        s *= 10.0;
        ++decimals;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value(i));
    return buf;
}

DecisionSpace DecisionSpace::from_labels(std::vector<std::string> labels) {
    if (labels.empty()) throw SchemaError("decision space needs at least 1 decision");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw SchemaError("duplicate decision label: " + l);
    }
    DecisionSpace d;
    d.labels_ = std::move(labels);
    return d;
}

DecisionSpace DecisionSpace::from_grid(const GridSpec& grid) {
    DecisionSpace d;
    d.grid_ = grid;
    std::size_t n = grid.points();
    d.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.labels_.push_back(grid.label(i));
    return d;
}

std::size_t DecisionSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw SchemaError("unknown decision label: " + label);
}

const GridSpec& DecisionSpace::grid() const {
    if (!grid_) throw SchemaError("decision space is not grid-backed");
    return *grid_;
}

double DecisionSpace::value(std::size_t i) const {
    if (i >= labels_.size()) throw DomainError("decision index out of range");
    return grid().value(i);
}

Belief::Belief(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) throw DomainError("belief needs at least 2 states");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("belief entries must be finite and >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw DomainError("belief entries must sum to 1");
}

Belief Belief::point_mass(std::size_t state, std::size_t n_states) {
    std::vector<double> p(n_states, 0.0);
    p.at(state) = 1.0;
    return Belief(std::move(p));
}

double v_shaped_payoff(double mu, double d, int omega) {
    if (!(mu > 0.0) || !(mu < 1.0)) throw DomainError("v-shaped kink mu must lie in (0,1)");
    if (mu > 0.5) return v_shaped_payoff(1.0 - mu, 1.0 - d, omega);
    double slope = 0.5 * (static_cast<double>(omega) - mu) / (1.0 - mu);
    return d <= mu ? 0.5 - slope : 0.5 + slope;
}

PayoffFunction::PayoffFunction(PayoffKind kind, std::vector<std::vector<double>> matrix)
    : kind_(kind), matrix_(std::move(matrix)) {
    if (matrix_.empty() || matrix_[0].size() < 2) throw SchemaError("payoff matrix must be |D| x |Omega| with |Omega| >= 2");
    m1_ = std::numeric_limits<double>::infinity();
    m2_ = -std::numeric_limits<double>::infinity();
    const std::size_t n_states = matrix_[0].size();
    for (const auto& row : matrix_) {
        if (row.size() != n_states) throw SchemaError("ragged payoff matrix");
        for (double v : row) {
            if (!std::isfinite(v)) throw SchemaError("payoff entries must be finite");
            m1_ = std::min(m1_, v);
            m2_ = std::max(m2_, v);
        }
    }
}

PayoffFunction PayoffFunction::from_matrix(std::vector<std::vector<double>> matrix) {
    return PayoffFunction(PayoffKind::Matrix, std::move(matrix));
}

PayoffFunction PayoffFunction::brier(const DecisionSpace& decisions) {
    const GridSpec& g = decisions.grid();
    std::vector<std::vector<double>> m(decisions.size(), std::vector<double>(2));
    for (std::size_t d = 0; d < decisions.size(); ++d) {
        double x = g.value(d);
        m[d][0] = 1.0 - x * x;
        m[d][1] = 1.0 - (x - 1.0) * (x - 1.0);
    }
    return PayoffFunction(PayoffKind::Brier, std::move(m));
}

PayoffFunction PayoffFunction::v_shaped(double mu, const DecisionSpace& decisions) {
    if (!(mu > 0.0) || !(mu < 1.0)) throw DomainError("v-shaped kink mu must lie in (0,1)");
    const GridSpec& g = decisions.grid();
    std::vector<std::vector<double>> m(decisions.size(), std::vector<double>(2));
    std::size_t low = npos, high = npos;
    for (std::size_t d = 0; d < decisions.size(); ++d) {
        double x = g.value(d);
        m[d][0] = v_shaped_payoff(mu, x, 0);
        m[d][1] = v_shaped_payoff(mu, x, 1);
        // Branch membership mirrors the payoff formula: after the mu > 1/2
        // symmetry, "low" means the branch containing decision x <= mu.
        bool low_branch = (mu > 0.5) ? (1.0 - x > 1.0 - mu) : (x <= mu);
        if (low_branch) {
            if (low == npos) low = d;
        } else if (high == npos) {
            high = d;
        }
    }
    PayoffFunction p(PayoffKind::VShaped, std::move(m));
    p.mu_ = mu;
    p.low_rep_ = low;
    p.high_rep_ = high;
    return p;
}

double expected_payoff(const PayoffFunction& payoff, std::size_t decision, const Belief& belief) {
    if (decision >= payoff.num_decisions()) throw DomainError("decision index out of range");
    if (belief.size() != payoff.num_states()) throw DomainError("belief/payoff state mismatch");
    double acc = 0.0;
    for (std::size_t w = 0; w < belief.size(); ++w) acc += belief[w] * payoff.at(decision, w);
    return acc;
}

std::size_t rational_decision(const PayoffFunction& payoff, const Belief& belief) {
    if (belief.size() != payoff.num_states()) throw DomainError("belief/payoff state mismatch");
    if (payoff.kind() == PayoffKind::VShaped) {
        // All decisions within a branch score identically, so comparing the
        // two branch representatives reproduces the lowest-index argmax.
        std::size_t lo = payoff.low_branch_rep(), hi = payoff.high_branch_rep();
        if (lo == PayoffFunction::npos) return hi;
        if (hi == PayoffFunction::npos) return lo;
        double e_lo = expected_payoff(payoff, lo, belief);
        double e_hi = expected_payoff(payoff, hi, belief);
        if (e_lo == e_hi) return std::min(lo, hi);
        return e_lo > e_hi ? lo : hi;
    }
    std::size_t best = 0;
    double best_val = expected_payoff(payoff, 0, belief);
    for (std::size_t d = 1; d < payoff.num_decisions(); ++d) {
        double v = expected_payoff(payoff, d, belief);
        if (v > best_val) {
            best_val = v;
            best = d;
        }
    }
    return best;
}

double no_info_payoff(const PayoffFunction& payoff, const Belief& prior) {
    return expected_payoff(payoff, rational_decision(payoff, prior), prior);
}

}  // namespace infoval
