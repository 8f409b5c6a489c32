#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infoval/common.hpp"

namespace infoval {

/// Finite state space. Labels are unique and indexable 0..size()-1.
class StateSpace {
public:
    StateSpace() = default;
    explicit StateSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Returns the index of a label, or throws SchemaError.
    std::size_t index_of(const std::string& label) const;
    bool binary() const { return labels_.size() == 2; }

private:
    std::vector<std::string> labels_;
};

/// Ascending numeric grid lo, lo+step, ..., hi (inclusive within half a step).
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.01;

    std::size_t points() const;
    double value(std::size_t i) const { return lo + static_cast<double>(i) * step; }
    /// Nearest grid index, clamped to the grid.
    std::size_t nearest_index(double x) const;
    std::string label(std::size_t i) const;
};

/// Finite decision space: explicit labels, or a numeric grid (labels are the
/// grid points in ascending order).
class DecisionSpace {
public:
    static DecisionSpace from_labels(std::vector<std::string> labels);
    static DecisionSpace from_grid(const GridSpec& grid);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;
    bool grid_backed() const { return grid_.has_value(); }
    const GridSpec& grid() const;
    /// Numeric value of decision i (grid-backed spaces only).
    double value(std::size_t i) const;

private:
    std::vector<std::string> labels_;
    std::optional<GridSpec> grid_;
};

/// Probability vector over a state space. Entries >= 0, sum to 1 within 1e-9.
class Belief {
public:
    explicit Belief(std::vector<double> probs);
    static Belief point_mass(std::size_t state, std::size_t n_states);

    double operator[](std::size_t i) const { return probs_[i]; }
    std::size_t size() const { return probs_.size(); }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

/// Piecewise-linear scoring rule with kink mu in (0,1). For mu in (0,1/2] the
/// payoff depends on d only through the indicator d <= mu; for mu in (1/2,1)
/// it is defined symmetrically as S_mu(d,w) = S_{1-mu}(1-d,w).
double v_shaped_payoff(double mu, double d, int omega);

enum class PayoffKind { Matrix, Brier, VShaped };

/// A |D| x |Omega| payoff table with cached bounds (M1, M2) = (min, max entry).
class PayoffFunction {
public:
    static PayoffFunction from_matrix(std::vector<std::vector<double>> matrix);
    /// Quadratic score 1 - (d - w)^2 over a numeric grid in [0,1], binary states.
    static PayoffFunction brier(const DecisionSpace& decisions);
    static PayoffFunction v_shaped(double mu, const DecisionSpace& decisions);

    double at(std::size_t d, std::size_t omega) const { return matrix_[d][omega]; }
    std::size_t num_decisions() const { return matrix_.size(); }
    std::size_t num_states() const { return matrix_.empty() ? 0 : matrix_[0].size(); }
    double min_payoff() const { return m1_; }  // M1
    double max_payoff() const { return m2_; }  // M2
    PayoffKind kind() const { return kind_; }
    double mu() const { return mu_; }

    /// For v-shaped payoffs: lowest decision index in each branch (d <= mu /
    /// d > mu), or npos when the grid leaves a branch empty. Enables O(1)
    /// rational decisions during mu sweeps; identical results to the full scan.
    std::size_t low_branch_rep() const { return low_rep_; }
    std::size_t high_branch_rep() const { return high_rep_; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    PayoffFunction(PayoffKind kind, std::vector<std::vector<double>> matrix);

    PayoffKind kind_;
    std::vector<std::vector<double>> matrix_;
    double m1_ = 0.0, m2_ = 0.0;
    double mu_ = 0.0;
    std::size_t low_rep_ = npos, high_rep_ = npos;
};

/// Sum_w b[w] * S[d][w].
double expected_payoff(const PayoffFunction& payoff, std::size_t decision, const Belief& belief);

/// argmax_d expected payoff; ties broken by lowest decision index.
std::size_t rational_decision(const PayoffFunction& payoff, const Belief& belief);

/// max_d expected payoff under the prior: the best fixed action with no signal.
double no_info_payoff(const PayoffFunction& payoff, const Belief& prior);

}  // namespace infoval
