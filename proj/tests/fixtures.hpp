#pragma once

// Shared fixtures: the worked decision example, the two example graphs, and
// seeded random generators for the property tests.

#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "greymadm/grey_graph.hpp"
#include "greymadm/madm.hpp"

namespace fixtures {

using namespace greymadm;

inline std::string data_path(const std::string& name) { return std::string(GREYMADM_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
    std::ifstream in(data_path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Matrix<GreyNumber> grey_matrix(const std::vector<std::vector<double>>& kernel,
                                      const std::vector<std::vector<double>>& greyness) {
    Matrix<GreyNumber> out(kernel.size(), kernel.front().size());
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        for (std::size_t j = 0; j < kernel[i].size(); ++j) {
            out(i, j) = GreyNumber(kernel[i][j], greyness[i][j]);
        }
    }
    return out;
}

inline Matrix<GreyNumber> example_influence() {
    return grey_matrix({{1, 0.3, 0.1}, {0.3, 1, 0.15}, {0.1, 0.15, 1}},
                       {{0, 0.2, 0.2}, {0.2, 0, 0.2}, {0.2, 0.2, 0}});
}

// Service-system selection: cost, performance, service quality.
inline DecisionProblem example_problem() {
    const std::vector<std::vector<std::pair<double, double>>> z = {
        {{90, 110}, {70, 85}, {60, 75}},
        {{80, 95}, {65, 80}, {70, 85}},
        {{85, 100}, {80, 90}, {55, 70}},
    };
    Matrix<GreyInterval> matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            matrix(i, j) = GreyInterval(z[i][j].first, z[i][j].second);
        }
    }
    const auto w = weights_from_intervals({{0.40, 0.50}, {0.30, 0.40}, {0.15, 0.25}});
    std::vector<Attribute> attrs = {
        {"A1", AttributeKind::cost, w[0]},
        {"A2", AttributeKind::benefit, w[1]},
        {"A3", AttributeKind::benefit, w[2]},
    };
    return DecisionProblem({"X1", "X2", "X3"}, attrs, matrix, example_influence());
}

// Five-vertex complete grey graph with hand-picked edge values.
inline GreyGraph example_graph_5() {
    VertexMap v = {{"x1", {0.7, 0.2}}, {"x2", {0.6, 0.1}}, {"x3", {0.9, 0.3}}, {"x4", {0.8, 0.5}}, {"x5", {0.5, 0.4}}};
    EdgeMap e = {
        {{"x1", "x2"}, {0.5, 0.3}}, {{"x1", "x3"}, {0.6, 0.4}}, {{"x1", "x4"}, {0.5, 0.6}}, {{"x1", "x5"}, {0.4, 0.8}},
        {{"x2", "x3"}, {0.4, 0.4}}, {{"x2", "x4"}, {0.2, 0.7}}, {{"x2", "x5"}, {0.1, 0.5}}, {{"x3", "x4"}, {0.3, 0.6}},
        {{"x3", "x5"}, {0.4, 0.5}}, {{"x4", "x5"}, {0.1, 0.8}},
    };
    return GreyGraph(v, e);
}

inline VertexMap example_strong_vertices() {
    return {{"x1", {0.5, 0.6}}, {"x2", {0.3, 0.5}}, {"x3", {0.7, 0.2}}, {"x4", {0.4, 0.7}}};
}

// ---------------------------------------------------------------------------
// Random generators

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline GreyInterval random_unit_interval(Rng& rng) {
    double a = uniform(rng, 0.0, 1.0);
    double b = uniform(rng, 0.0, 1.0);
    return a <= b ? GreyInterval(a, b) : GreyInterval(b, a);
}

inline GreyNumber random_grey(Rng& rng) { return GreyNumber(uniform(rng, -2.0, 2.0), uniform(rng, 0.0, 1.0)); }

inline GreyNumber random_unit_grey(Rng& rng) { return GreyNumber(uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0)); }

// Valid random graph: each present edge is drawn below its endpoint bounds.
inline GreyGraph random_valid_graph(Rng& rng, const std::string& prefix, std::size_t max_vertices = 4,
                                    double edge_probability = 0.6) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    VertexMap vertices;
    for (std::size_t i = 0; i < n; ++i) {
        vertices.emplace(prefix + std::to_string(i), random_unit_grey(rng));
    }
    EdgeMap edges;
    std::bernoulli_distribution coin(edge_probability);
    for (auto p = vertices.begin(); p != vertices.end(); ++p) {
        for (auto q = std::next(p); q != vertices.end(); ++q) {
            if (!coin(rng)) {
                continue;
            }
            const double kmax = std::min(p->second.kernel(), q->second.kernel());
            const double gmin = std::max(p->second.greyness(), q->second.greyness());
            edges.emplace(EdgeKey(p->first, q->first), GreyNumber(uniform(rng, 0.0, kmax), uniform(rng, gmin, 1.0)));
        }
    }
    return GreyGraph(vertices, edges, true);
}

inline DecisionProblem random_problem(Rng& rng, bool identity_influence_matrix = false) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<std::string> alts;
    for (std::size_t i = 0; i < n; ++i) {
        alts.push_back("X" + std::to_string(i + 1));
    }
    std::vector<Attribute> attrs;
    for (std::size_t j = 0; j < m; ++j) {
        attrs.push_back({"A" + std::to_string(j + 1),
                         std::bernoulli_distribution(0.5)(rng) ? AttributeKind::benefit : AttributeKind::cost,
                         from_interval(random_unit_interval(rng))});
    }
    Matrix<GreyInterval> z(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double lo = uniform(rng, 0.0, 100.0);
            z(i, j) = GreyInterval(lo, lo + uniform(rng, 0.0, 30.0));
        }
    }
    Matrix<GreyNumber> xi = identity_influence(m);
    if (!identity_influence_matrix) {
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                xi(p, q) = xi(q, p) = GreyNumber(uniform(rng, 0.0, 0.5), uniform(rng, 0.0, 0.5));
            }
        }
    }
    return DecisionProblem(alts, attrs, z, xi);
}

// Distance in units of the last place at the interval's magnitude.
inline double ulp_distance(double a, double b, double scale) {
    const double s = std::abs(scale);
    const double ulp = std::nextafter(s, std::numeric_limits<double>::infinity()) - s;
    return std::abs(a - b) / ulp;
}

}  // namespace fixtures
