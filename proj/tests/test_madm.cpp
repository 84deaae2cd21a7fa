#include "doctest.h"

#include "fixtures.hpp"
#include "greymadm/madm.hpp"

using namespace greymadm;
using doctest::Approx;

namespace {

constexpr double table_tol = 1e-3;

void check_matrix(const Matrix<GreyNumber>& m, const std::vector<std::vector<double>>& kernel,
                  const std::vector<std::vector<double>>& greyness) {
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        for (std::size_t j = 0; j < kernel[i].size(); ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(std::abs(m(i, j).kernel() - kernel[i][j]) <= table_tol);
            CHECK(std::abs(m(i, j).greyness() - greyness[i][j]) <= table_tol);
        }
    }
}

}  // namespace

TEST_CASE("normalize the worked example") {
    const DecisionProblem problem = fixtures::example_problem();
    const NormalizedMatrix norm = normalize(problem);

    CHECK(norm.ranges[0] == AttributeRange{80, 110, 30});
    CHECK(norm.ranges[1] == AttributeRange{65, 90, 25});
    CHECK(norm.ranges[2] == AttributeRange{55, 85, 30});

    const std::vector<std::vector<std::pair<double, double>>> r = {
        {{0.0000, 0.6667}, {0.2000, 0.8000}, {0.1667, 0.6667}},
        {{0.5000, 1.0000}, {0.0000, 0.6000}, {0.5000, 1.0000}},
        {{0.3333, 0.8333}, {0.6000, 1.0000}, {0.0000, 0.5000}},
    };
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(norm.intervals(i, j).lower() - r[i][j].first) <= table_tol);
            CHECK(std::abs(norm.intervals(i, j).upper() - r[i][j].second) <= table_tol);
        }
    }
    check_matrix(norm.entries, {{0.3333, 0.5000, 0.4167}, {0.7500, 0.3000, 0.7500}, {0.5833, 0.8000, 0.2500}},
                 {{0.6667, 0.6000, 0.5000}, {0.5000, 0.6000, 0.5000}, {0.5000, 0.4000, 0.5000}});
    CHECK(norm.entries(1, 2) == GreyNumber(0.75, 0.5));
    CHECK(norm.warnings.empty());
}

TEST_CASE("zero-range attribute normalizes to the neutral midpoint") {
    Matrix<GreyInterval> z(2, 2);
    z(0, 0) = {5, 5};
    z(1, 0) = {5, 5};
    z(0, 1) = {1, 2};
    z(1, 1) = {2, 4};
    const DecisionProblem p({"a", "b"}, {{"flat", AttributeKind::cost, {0.5, 0}}, {"v", AttributeKind::benefit, {0.5, 0}}},
                            z);
    const NormalizedMatrix norm = normalize(p);
    CHECK(norm.entries(0, 0) == GreyNumber(0.5, 0.0));
    CHECK(norm.entries(1, 0) == GreyNumber(0.5, 0.0));
    REQUIRE(norm.warnings.size() == 1);
    CHECK(norm.warnings[0].find("flat") != std::string::npos);
    CHECK(norm.entries(1, 1).kernel() == Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(norm.entries(1, 1).greyness() == Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("problem validation") {
    Matrix<GreyInterval> z(1, 2, GreyInterval(1, 2));
    const std::vector<Attribute> attrs = {{"a", AttributeKind::benefit, {0.5, 0}}, {"b", AttributeKind::cost, {0.5, 0}}};
    CHECK_THROWS_AS(DecisionProblem({}, attrs, Matrix<GreyInterval>(0, 2)), InputError);
    CHECK_THROWS_AS(DecisionProblem({"x", "y"}, attrs, z), InputError);
    Matrix<GreyNumber> xi = identity_influence(2);
    xi(0, 1) = GreyNumber(0.2, 0.1);
    CHECK_THROWS_AS(DecisionProblem({"x"}, attrs, z, xi), InputError);
    xi(1, 0) = GreyNumber(0.2, 0.1);
    CHECK_NOTHROW(DecisionProblem({"x"}, attrs, z, xi));
    xi(0, 0) = GreyNumber(1.0, 0.1);
    CHECK_THROWS_AS(DecisionProblem({"x"}, attrs, z, xi), InputError);
    CHECK_THROWS_AS(DecisionProblem({"x"}, attrs, z, identity_influence(3)), InputError);
    CHECK_THROWS_AS(DecisionProblem({"x"}, {{"a", AttributeKind::benefit, {-0.1, 0}}}, Matrix<GreyInterval>(1, 1)),
                    InputError);
}

TEST_CASE("influence propagation on the worked example") {
    const DecisionProblem problem = fixtures::example_problem();
    const Matrix<GreyNumber> prop = propagate_influence(normalize(problem).entries, problem.influence());
    check_matrix(prop, {{0.5250, 0.6625, 0.5250}, {0.9150, 0.6375, 0.8700}, {0.8483, 1.0125, 0.4283}},
                 {{0.6667, 0.6667, 0.6667}, {0.6000, 0.6000, 0.6000}, {0.5000, 0.5000, 0.5000}});
    // 0.3 x 0.5833 + 1 x 0.8 + 0.15 x 0.25
    CHECK(prop(2, 1).kernel() == Approx(1.0125).epsilon(1e-12));

    const Matrix<GreyNumber> same = propagate_influence(normalize(problem).entries, identity_influence(3));
    CHECK(same == normalize(problem).entries);

    CHECK_THROWS_AS(propagate_influence(normalize(problem).entries, identity_influence(2)), InputError);
}

TEST_CASE("crisp-zero coefficients do not contribute greyness") {
    Matrix<GreyNumber> r(1, 2);
    r(0, 0) = GreyNumber(0.5, 0.9);
    r(0, 1) = GreyNumber(0.4, 0.1);
    Matrix<GreyNumber> xi = identity_influence(2);
    CHECK(propagate_influence(r, xi)(0, 1) == GreyNumber(0.4, 0.1));
    // A grey zero still counts.
    xi(0, 1) = xi(1, 0) = GreyNumber(0.0, 0.05);
    CHECK(propagate_influence(r, xi)(0, 1) == GreyNumber(0.4, 0.9));
}

TEST_CASE("aggregation") {
    const DecisionProblem problem = fixtures::example_problem();
    const Matrix<GreyNumber> prop = propagate_influence(normalize(problem).entries, problem.influence());
    const auto x = aggregate(prop, problem.weights());
    REQUIRE(x.size() == 3);
    CHECK(std::abs(x[0].kernel() - 0.5731) <= table_tol);
    CHECK(std::abs(x[0].greyness() - 0.6667) <= table_tol);
    CHECK(std::abs(x[1].kernel() - 0.8089) <= table_tol);
    CHECK(std::abs(x[1].greyness() - 0.6000) <= table_tol);
    CHECK(std::abs(x[2].kernel() - 0.8218) <= table_tol);
    CHECK(std::abs(x[2].greyness() - 0.5000) <= table_tol);

    Matrix<GreyNumber> single(2, 1);
    single(0, 0) = GreyNumber(0.3, 0.2);
    single(1, 0) = GreyNumber(0.9, 0.4);
    const auto y = aggregate(single, {GreyNumber::crisp(1.0)});
    CHECK(y[0] == single(0, 0));
    CHECK(y[1] == single(1, 0));

    CHECK_THROWS_AS(aggregate(prop, {GreyNumber::crisp(1.0)}), InputError);
}

TEST_CASE("ranking") {
    const RankingResult r = rank({{0.5731, 0.6667}, {0.8089, 0.6}, {0.8218, 0.5}});
    CHECK(r.order == std::vector<std::size_t>{2, 1, 0});
    CHECK(r.alternatives[2].rank == 1);
    CHECK(r.alternatives[0].rank == 3);

    const RankingResult ties = rank({{0.4, 0.1}, {0.4, 0.1}, {0.4, 0.1}});
    CHECK(ties.order == std::vector<std::size_t>{0, 1, 2});

    // Equal delta (0.5), the less grey alternative goes first.
    const RankingResult dg = rank({{0.6, 0.2}, {0.5, 0.0}});
    CHECK(dg.order == std::vector<std::size_t>{1, 0});

    CHECK_THROWS_AS(rank({}), InputError);
}

TEST_CASE("solve reproduces the relative-kernel score table") {
    const DecisionProblem problem = fixtures::example_problem();
    const Solution s = solve(problem);
    const double delta[] = {0.3439, 0.5056, 0.5479};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(s.ranking.alternatives[i].score.delta - delta[i]) <= table_tol);
    }
    CHECK(s.ranking.order == std::vector<std::size_t>{2, 1, 0});
    CHECK(s.warnings.empty());
    CHECK_NOTHROW(check_solution(problem, s));
}

TEST_CASE("solve with identity influence matches hand-computed weighted sums") {
    const DecisionProblem ex = fixtures::example_problem();
    const DecisionProblem p(ex.alternatives(), ex.attributes(), ex.matrix());
    const Solution s = solve(p);
    // 0.45*(1/3) + 0.35*0.5 + 0.2*(5/12), 0.45*0.75 + 0.35*0.3 + 0.2*0.75, 0.45*(7/12) + 0.35*0.8 + 0.2*0.25
    const double kernel[] = {0.4083333333333333, 0.5925, 0.5925};
    const double greyness[] = {2.0 / 3.0, 0.6, 0.5};
    const double delta[] = {0.245, 0.3703125, 0.395};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(s.aggregates[i].kernel() == Approx(kernel[i]).epsilon(1e-12));
        CHECK(s.aggregates[i].greyness() == Approx(greyness[i]).epsilon(1e-12));
        CHECK(s.ranking.alternatives[i].score.delta == Approx(delta[i]).epsilon(1e-12));
    }
    CHECK(s.ranking.order == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("solve edge cases") {
    const DecisionProblem one({"only"}, {{"a", AttributeKind::benefit, {1.0, 0.0}}}, Matrix<GreyInterval>(1, 1, {3, 7}));
    const Solution s = solve(one);
    CHECK(s.ranking.order == std::vector<std::size_t>{0});
    CHECK(s.ranking.alternatives[0].rank == 1);

    const DecisionProblem drift({"x", "y"}, {{"a", AttributeKind::benefit, {0.7, 0.0}}},
                                Matrix<GreyInterval>(2, 1, {5, 5}));
    const Solution d = solve(drift);
    // Weight drift plus the zero-range column.
    CHECK(d.warnings.size() == 2);
}

TEST_CASE("clamp option bounds propagated values") {
    const DecisionProblem problem = fixtures::example_problem();
    const Solution s = solve(problem, {.clamp = true});
    CHECK(s.propagated(2, 1).kernel() == 1.0);
    REQUIRE(s.warnings.size() == 1);
    CHECK(s.warnings[0].find("clamping") != std::string::npos);
    CHECK(solve(problem).propagated(2, 1).kernel() > 1.0);
}

TEST_CASE("weights from intervals") {
    const auto w = weights_from_intervals({{0.40, 0.50}, {0.30, 0.40}, {0.15, 0.25}});
    CHECK(w[0].kernel() == Approx(0.45));
    CHECK(w[1].kernel() == Approx(0.35));
    CHECK(w[2].kernel() == Approx(0.20));
    for (const auto& x : w) {
        CHECK(x.greyness() == Approx(0.10));
    }
    CHECK(weights_from_intervals({{0.3, 0.3}})[0] == GreyNumber(0.3, 0.0));
    CHECK(weights_from_intervals({{0.25, 0.75}})[0].kernel() == 0.5);
    CHECK_THROWS_AS(weights_from_intervals({{0.5, 1.2}}), InputError);
    CHECK_THROWS_AS(weights_from_intervals({{-0.1, 0.2}}), InputError);
    CHECK(check_weight_sum(w).empty());
    CHECK(check_weight_sum({GreyNumber(0.5, 0.0)}).size() == 1);
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: normalization lands in the unit interval") {
    fixtures::Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const DecisionProblem p = fixtures::random_problem(rng);
        const NormalizedMatrix norm = normalize(p);
        for (std::size_t j = 0; j < p.attribute_count(); ++j) {
            double best_upper = 0.0;
            for (std::size_t i = 0; i < p.alternative_count(); ++i) {
                const GreyInterval& r = norm.intervals(i, j);
                CHECK(r.lower() >= 0.0);
                CHECK(r.upper() <= 1.0);
                best_upper = std::max(best_upper, r.upper());
            }
            if (norm.ranges[j].range > 0.0) {
                CHECK(best_upper == 1.0);
            }
        }
    }
}

TEST_CASE("property: greyness never decreases through the pipeline") {
    fixtures::Rng rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        const DecisionProblem p = fixtures::random_problem(rng);
        const Solution s = solve(p);
        for (std::size_t i = 0; i < p.alternative_count(); ++i) {
            for (std::size_t j = 0; j < p.attribute_count(); ++j) {
                for (std::size_t q = 0; q < p.attribute_count(); ++q) {
                    if (p.influence()(q, j) != GreyNumber::crisp(0.0)) {
                        CHECK(s.propagated(i, j).greyness() >= s.normalized.entries(i, q).greyness());
                    }
                }
                CHECK(s.aggregates[i].greyness() >= s.propagated(i, j).greyness());
                CHECK(s.aggregates[i].greyness() >= p.attributes()[j].weight.greyness());
            }
        }
        CHECK_NOTHROW(check_solution(p, s));
    }
}

TEST_CASE("property: identity influence reduces to classical weighted aggregation") {
    fixtures::Rng rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        const DecisionProblem p = fixtures::random_problem(rng, true);
        const Solution s = solve(p);
        const Matrix<GreyNumber>& r = s.normalized.entries;
        for (std::size_t i = 0; i < p.alternative_count(); ++i) {
            double kernel = 0.0;
            double greyness = 0.0;
            for (std::size_t j = 0; j < p.attribute_count(); ++j) {
                kernel += p.attributes()[j].weight.kernel() * r(i, j).kernel();
                greyness = std::max({greyness, p.attributes()[j].weight.greyness(), r(i, j).greyness()});
            }
            CHECK(s.aggregates[i].kernel() == kernel);
            CHECK(s.aggregates[i].greyness() == greyness);
        }
    }
}

TEST_CASE("property: scaling normalized kernels keeps the ranking") {
    fixtures::Rng rng(34);
    for (int trial = 0; trial < 1000; ++trial) {
        const DecisionProblem p = fixtures::random_problem(rng);
        const NormalizedMatrix norm = normalize(p);
        const double c = fixtures::uniform(rng, 0.1, 10.0);
        Matrix<GreyNumber> scaled = norm.entries;
        for (std::size_t i = 0; i < scaled.rows(); ++i) {
            for (std::size_t j = 0; j < scaled.cols(); ++j) {
                scaled(i, j) = scalar_mul(c, scaled(i, j));
            }
        }
        const auto base = rank(aggregate(propagate_influence(norm.entries, p.influence()), p.weights()));
        const auto after = rank(aggregate(propagate_influence(scaled, p.influence()), p.weights()));
        CHECK(base.order == after.order);
    }
}

TEST_CASE("property: solve is deterministic") {
    fixtures::Rng rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        const DecisionProblem p = fixtures::random_problem(rng);
        CHECK(solve(p) == solve(p));
    }
}
