#include "greymadm/madm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace greymadm {

std::string to_string(AttributeKind kind) { return kind == AttributeKind::benefit ? "benefit" : "cost"; }

AttributeKind parse_attribute_kind(const std::string& text) {
    if (text == "benefit") {
        return AttributeKind::benefit;
    }
    if (text == "cost") {
        return AttributeKind::cost;
    }
    throw InputError(fmt::format("unknown attribute kind '{}' (expected benefit or cost)", text));
}

Matrix<GreyNumber> identity_influence(std::size_t m) {
    Matrix<GreyNumber> out(m, m, GreyNumber::crisp(0.0));
    for (std::size_t j = 0; j < m; ++j) {
        out(j, j) = GreyNumber::crisp(1.0);
    }
    return out;
}

DecisionProblem::DecisionProblem(std::vector<std::string> alternatives, std::vector<Attribute> attributes,
                                 Matrix<GreyInterval> matrix)
    : DecisionProblem(std::move(alternatives), attributes, std::move(matrix), identity_influence(attributes.size())) {}

DecisionProblem::DecisionProblem(std::vector<std::string> alternatives, std::vector<Attribute> attributes,
                                 Matrix<GreyInterval> matrix, Matrix<GreyNumber> influence)
    : alternatives_(std::move(alternatives)),
      attributes_(std::move(attributes)),
      matrix_(std::move(matrix)),
      influence_(std::move(influence)) {
    const std::size_t n = alternatives_.size();
    const std::size_t m = attributes_.size();
    if (n == 0 || m == 0) {
        throw InputError("decision matrix is empty: need at least one alternative and one attribute");
    }
    if (matrix_.rows() != n || matrix_.cols() != m) {
        throw InputError(fmt::format("decision matrix is {}x{} but there are {} alternatives and {} attributes",
                                     matrix_.rows(), matrix_.cols(), n, m));
    }
    for (const auto& a : attributes_) {
        if (a.weight.kernel() < 0.0) {
            throw InputError(fmt::format("attribute '{}' has negative weight kernel {}", a.name, a.weight.kernel()));
        }
    }
    if (influence_.rows() != m || influence_.cols() != m) {
        throw InputError(fmt::format("influence matrix must be {0}x{0}, got {1}x{2}", m, influence_.rows(),
                                     influence_.cols()));
    }
    for (std::size_t p = 0; p < m; ++p) {
        if (influence_(p, p) != GreyNumber::crisp(1.0)) {
            throw InputError(fmt::format("influence diagonal ({0},{0}) must be (1, 0), got {1}", p + 1,
                                         to_string(influence_(p, p))));
        }
        for (std::size_t q = p + 1; q < m; ++q) {
            if (influence_(p, q) != influence_(q, p)) {
                throw InputError(fmt::format("influence matrix is asymmetric at ({},{})", p + 1, q + 1));
            }
        }
    }
}

std::vector<GreyNumber> DecisionProblem::weights() const {
    std::vector<GreyNumber> out;
    out.reserve(attributes_.size());
    for (const auto& a : attributes_) {
        out.push_back(a.weight);
    }
    return out;
}

NormalizedMatrix normalize(const DecisionProblem& problem) {
    const auto& z = problem.matrix();
    const std::size_t n = z.rows();
    const std::size_t m = z.cols();
    if (n == 0 || m == 0) {
        throw InputError("cannot normalize an empty decision matrix");
    }

    NormalizedMatrix out{Matrix<GreyInterval>(n, m), Matrix<GreyNumber>(n, m), {}, {}};
    out.ranges.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        AttributeRange range{z(0, j).lower(), z(0, j).upper(), 0.0};
        for (std::size_t i = 1; i < n; ++i) {
            range.min = std::min(range.min, z(i, j).lower());
            range.max = std::max(range.max, z(i, j).upper());
        }
        range.range = range.max - range.min;
        out.ranges.push_back(range);

        const Attribute& attr = problem.attributes()[j];
        if (range.range == 0.0) {
            out.warnings.push_back(fmt::format(
                "attribute '{}' has zero range (all values equal {}); normalized to (0.5, 0)", attr.name, range.min));
            for (std::size_t i = 0; i < n; ++i) {
                out.intervals(i, j) = GreyInterval(0.5, 0.5);
                out.entries(i, j) = GreyNumber::crisp(0.5);
            }
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const GreyInterval& v = z(i, j);
            GreyInterval r = attr.kind == AttributeKind::benefit
                                 ? GreyInterval((v.lower() - range.min) / range.range,
                                                (v.upper() - range.min) / range.range)
                                 : GreyInterval((range.max - v.upper()) / range.range,
                                                (range.max - v.lower()) / range.range);
            out.intervals(i, j) = r;
            out.entries(i, j) = from_interval(r);
        }
    }
    return out;
}

Matrix<GreyNumber> propagate_influence(const Matrix<GreyNumber>& entries, const Matrix<GreyNumber>& influence) {
    const std::size_t n = entries.rows();
    const std::size_t m = entries.cols();
    if (influence.rows() != m || influence.cols() != m) {
        throw InputError(fmt::format("influence matrix is {}x{} but the decision matrix has {} attributes",
                                     influence.rows(), influence.cols(), m));
    }
    const GreyNumber crisp_zero = GreyNumber::crisp(0.0);
    Matrix<GreyNumber> out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double kernel = 0.0;
            double greyness = 0.0;
            for (std::size_t p = 0; p < m; ++p) {
                const GreyNumber& xi = influence(p, j);
                const GreyNumber& r = entries(i, p);
                kernel += xi.kernel() * r.kernel();
                if (xi != crisp_zero) {
                    greyness = std::max({greyness, xi.greyness(), r.greyness()});
                }
            }
            out(i, j) = GreyNumber(kernel, greyness);
        }
    }
    return out;
}

std::vector<GreyNumber> aggregate(const Matrix<GreyNumber>& propagated, const std::vector<GreyNumber>& weights) {
    const std::size_t m = propagated.cols();
    if (weights.size() != m) {
        throw InputError(fmt::format("{} weights given for {} attributes", weights.size(), m));
    }
    std::vector<GreyNumber> out;
    out.reserve(propagated.rows());
    for (std::size_t i = 0; i < propagated.rows(); ++i) {
        double kernel = 0.0;
        double greyness = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            kernel += weights[j].kernel() * propagated(i, j).kernel();
            greyness = std::max({greyness, weights[j].greyness(), propagated(i, j).greyness()});
        }
        out.emplace_back(kernel, greyness);
    }
    return out;
}

RankingResult rank(const std::vector<GreyNumber>& aggregates) {
    if (aggregates.empty()) {
        throw InputError("cannot rank an empty list of alternatives");
    }
    RankingResult out;
    out.alternatives.reserve(aggregates.size());
    for (const auto& x : aggregates) {
        out.alternatives.push_back({x, relative_score(x), 0});
    }
    out.order.resize(aggregates.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::ranges::stable_sort(out.order, [&](std::size_t a, std::size_t b) {
        const RelativeScore& sa = out.alternatives[a].score;
        const RelativeScore& sb = out.alternatives[b].score;
        if (sa.delta != sb.delta) {
            return sa.delta > sb.delta;
        }
        return sa.gamma > sb.gamma;
    });
    for (std::size_t pos = 0; pos < out.order.size(); ++pos) {
        out.alternatives[out.order[pos]].rank = pos + 1;
    }
    return out;
}

std::vector<std::string> check_weight_sum(const std::vector<GreyNumber>& weights) {
    double sum = 0.0;
    for (const auto& w : weights) {
        sum += w.kernel();
    }
    if (std::abs(sum - 1.0) > weight_sum_tolerance) {
        return {fmt::format("weight kernels sum to {} rather than 1", sum)};
    }
    return {};
}

Solution solve(const DecisionProblem& problem, const SolveOptions& options) {
    Solution out;
    out.warnings = check_weight_sum(problem.weights());
    out.normalized = normalize(problem);
    out.warnings.insert(out.warnings.end(), out.normalized.warnings.begin(), out.normalized.warnings.end());

    out.propagated = propagate_influence(out.normalized.entries, problem.influence());
    if (options.clamp) {
        std::size_t clamped = 0;
        for (std::size_t i = 0; i < out.propagated.rows(); ++i) {
            for (std::size_t j = 0; j < out.propagated.cols(); ++j) {
                const GreyNumber& v = out.propagated(i, j);
                GreyNumber c(std::clamp(v.kernel(), 0.0, 1.0), std::min(v.greyness(), 1.0));
                if (c != v) {
                    out.propagated(i, j) = c;
                    ++clamped;
                }
            }
        }
        if (clamped > 0) {
            out.warnings.push_back(fmt::format("clamping applied to {} propagated entries", clamped));
        }
    }

    out.aggregates = aggregate(out.propagated, problem.weights());
    out.ranking = rank(out.aggregates);
    return out;
}

std::vector<GreyNumber> weights_from_intervals(const std::vector<GreyInterval>& raw) {
    std::vector<GreyNumber> out;
    out.reserve(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        const GreyInterval& iv = raw[j];
        if (iv.lower() < 0.0 || iv.upper() > 1.0) {
            throw InputError(fmt::format("weight {} interval {} lies outside [0, 1]", j + 1, to_string(iv)));
        }
        out.push_back(from_interval(iv));
    }
    return out;
}

GreyGraph attribute_graph(const DecisionProblem& problem, bool strict) {
    std::vector<std::string> names;
    for (const auto& a : problem.attributes()) {
        names.push_back(a.name);
    }
    GreyGraph g = attribute_graph(problem.weights(), problem.influence(), names);
    if (strict) {
        return GreyGraph(g.vertices(), g.edges(), true);
    }
    return g;
}

}  // namespace greymadm

namespace greymadm {

void check_solution(const DecisionProblem& problem, const Solution& s) {
    const std::size_t n = problem.alternative_count();
    const std::size_t m = problem.attribute_count();
    const auto& norm = s.normalized;
    if (norm.entries.rows() != n || norm.entries.cols() != m || s.propagated.rows() != n ||
        s.propagated.cols() != m || s.aggregates.size() != n || s.ranking.order.size() != n) {
        throw InvariantError("solution dimensions do not match the problem");
    }
    const auto& xi = problem.influence();
    const GreyNumber crisp_zero = GreyNumber::crisp(0.0);
    const auto weights = problem.weights();
    for (std::size_t i = 0; i < n; ++i) {
        double row_greyness = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const GreyInterval& r = norm.intervals(i, j);
            if (r.lower() < 0.0 || r.upper() > 1.0) {
                throw InvariantError(fmt::format("normalized entry ({},{}) = {} leaves [0, 1]", i + 1, j + 1,
                                                 to_string(r)));
            }
            for (std::size_t p = 0; p < m; ++p) {
                if (xi(p, j) != crisp_zero && s.propagated(i, j).greyness() < norm.entries(i, p).greyness() &&
                    s.propagated(i, j).greyness() < 1.0) {
                    throw InvariantError(fmt::format("propagated greyness at ({},{}) decreased", i + 1, j + 1));
                }
            }
            row_greyness = std::max({row_greyness, weights[j].greyness(), s.propagated(i, j).greyness()});
        }
        if (s.aggregates[i].greyness() < row_greyness) {
            throw InvariantError(fmt::format("aggregate greyness of alternative {} decreased", i + 1));
        }
    }
    for (std::size_t pos = 1; pos < n; ++pos) {
        const RelativeScore& prev = s.ranking.alternatives[s.ranking.order[pos - 1]].score;
        const RelativeScore& cur = s.ranking.alternatives[s.ranking.order[pos]].score;
        if (prev.delta < cur.delta || (prev.delta == cur.delta && prev.gamma < cur.gamma)) {
            throw InvariantError(fmt::format("ranking out of order at position {}", pos + 1));
        }
    }
}

}  // namespace greymadm
