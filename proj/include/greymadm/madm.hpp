#pragma once

#include <string>
#include <vector>

#include "greymadm/grey_graph.hpp"
#include "greymadm/grey_number.hpp"
#include "greymadm/matrix.hpp"

namespace greymadm {

enum class AttributeKind { benefit, cost };

std::string to_string(AttributeKind kind);
AttributeKind parse_attribute_kind(const std::string& text);

struct Attribute {
    std::string name;
    AttributeKind kind = AttributeKind::benefit;
    GreyNumber weight;

    bool operator==(const Attribute&) const = default;
};

/// Alternatives x attributes interval matrix plus attribute weights and the
/// grey influence matrix between attributes.
class DecisionProblem {
public:
    /// Validates dimensions, non-negative weight kernels, and an influence
    /// matrix symmetric in both components with (1, 0) on the diagonal.
    DecisionProblem(std::vector<std::string> alternatives, std::vector<Attribute> attributes,
                    Matrix<GreyInterval> matrix, Matrix<GreyNumber> influence);

    /// Same, with crisp identity influence.
    DecisionProblem(std::vector<std::string> alternatives, std::vector<Attribute> attributes,
                    Matrix<GreyInterval> matrix);

    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
    const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
    const Matrix<GreyInterval>& matrix() const noexcept { return matrix_; }
    const Matrix<GreyNumber>& influence() const noexcept { return influence_; }

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    std::vector<GreyNumber> weights() const;

    bool operator==(const DecisionProblem&) const = default;

private:
    std::vector<std::string> alternatives_;
    std::vector<Attribute> attributes_;
    Matrix<GreyInterval> matrix_;
    Matrix<GreyNumber> influence_;
};

Matrix<GreyNumber> identity_influence(std::size_t m);

struct AttributeRange {
    double min = 0.0;    // min over alternatives of lower bounds
    double max = 0.0;    // max over alternatives of upper bounds
    double range = 0.0;  // max - min

    bool operator==(const AttributeRange&) const = default;
};

struct NormalizedMatrix {
    Matrix<GreyInterval> intervals;
    Matrix<GreyNumber> entries;
    std::vector<AttributeRange> ranges;
    std::vector<std::string> warnings;

    bool operator==(const NormalizedMatrix&) const = default;
};

/// Rescales every column onto [0, 1] (benefit: (z - min)/range, cost:
/// (max - z)/range with bounds swapped) and converts to kernel/greyness.
/// A zero-range column becomes (0.5, 0) everywhere and adds a warning.
NormalizedMatrix normalize(const DecisionProblem& problem);

/// Grey matrix product r~(i,j) = sum_p xi(p,j) * r(i,p).
///
/// Greyness is the max of coefficient and entry greyness over the terms
/// whose coefficient is not the crisp zero.
Matrix<GreyNumber> propagate_influence(const Matrix<GreyNumber>& entries, const Matrix<GreyNumber>& influence);

/// Per row: kernel sum_j w_j * r~(i,j), greyness max_j (g_wj v g_r~ij).
std::vector<GreyNumber> aggregate(const Matrix<GreyNumber>& propagated, const std::vector<GreyNumber>& weights);

struct RankedAlternative {
    GreyNumber aggregate;
    RelativeScore score;
    std::size_t rank = 0;  // 1-based

    bool operator==(const RankedAlternative&) const = default;
};

struct RankingResult {
    std::vector<RankedAlternative> alternatives;  // input order
    std::vector<std::size_t> order;               // best first, input indices

    bool operator==(const RankingResult&) const = default;
};

/// Descending relative kernel, then descending precision, then ascending
/// input index.
RankingResult rank(const std::vector<GreyNumber>& aggregates);

struct SolveOptions {
    bool clamp = false;  // clamp propagated values into [0,1]
};

struct Solution {
    NormalizedMatrix normalized;
    Matrix<GreyNumber> propagated;
    std::vector<GreyNumber> aggregates;
    RankingResult ranking;
    std::vector<std::string> warnings;

    bool operator==(const Solution&) const = default;
};

Solution solve(const DecisionProblem& problem, const SolveOptions& options = {});

/// Re-checks the pipeline postconditions on a finished solution: normalized
/// intervals inside [0, 1], greyness never decreasing through propagation and
/// aggregation, and a ranking consistent with the scores. Throws
/// InvariantError naming the first failure.
void check_solution(const DecisionProblem& problem, const Solution& solution);

/// Tolerance used when checking that weight kernels sum to one.
inline constexpr double weight_sum_tolerance = 1e-9;

/// Returns a warning message when the weight kernels do not sum to one.
std::vector<std::string> check_weight_sum(const std::vector<GreyNumber>& weights);

/// Converts weight intervals to grey numbers; each must lie within [0, 1].
std::vector<GreyNumber> weights_from_intervals(const std::vector<GreyInterval>& raw);

GreyGraph attribute_graph(const DecisionProblem& problem, bool strict = false);

}  // namespace greymadm
