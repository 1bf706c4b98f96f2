#include <doctest.h>

#include <prelie/catalog.hpp>
#include <prelie/degeneration.hpp>

#include "oracles.hpp"

using namespace prelie;

namespace {

Witness witness2(std::initializer_list<RatFunc> entries, bool inverse_given = true) {
    REQUIRE(entries.size() == 4);
    Matrix<RatFunc> m(2, 2, RatFunc(0));
    auto it = entries.begin();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = *it++;
    return Witness{m, inverse_given};
}

const RatFunc t = RatFunc::variable();

}  // namespace

TEST_CASE("base change over rational functions, spelled out") {
    // A3 in the moving basis f1 = e1 + t^2 e2, f2 = t e2
    const auto a3 = catalog::load("A3");
    const Witness w = witness2({RatFunc(1), RatFunc(0), t * t, t});
    const Algebra<RatFunc> moved = act(a3, w);

    const UniPoly tt = UniPoly::variable();
    CHECK(moved.at(0, 0, 0) == RatFunc(1));
    CHECK(moved.at(0, 0, 1) == RatFunc(tt * tt * tt - tt));  // t^3 - t
    CHECK(moved.at(0, 1, 0) == RatFunc(0));
    CHECK(moved.at(0, 1, 1) == t * t);
    CHECK(moved.at(1, 0, 1) == t * t);
    CHECK(moved.at(1, 1, 1) == t);
    CHECK(moved.at(1, 1, 0) == RatFunc(0));

    const auto lim = limit(moved);
    REQUIRE(lim.has_value());
    CHECK(lim->same_constants(catalog::load("A2")));
}

TEST_CASE("identity and scaling witnesses") {
    const auto b4 = catalog::load("B4");
    const Witness id = witness2({RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)});
    const auto unchanged = limit(act(b4, id));
    REQUIRE(unchanged.has_value());
    CHECK(unchanged->same_constants(b4));

    // t * identity rescales every structure constant by t
    const Algebra<RatFunc> scaled = act(b4, scaling_witness(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK(scaled.at(i, j, k) == t * RatFunc(b4.at(i, j, k)));
    const auto lim = limit(scaled);
    REQUIRE(lim.has_value());
    CHECK(lim->same_constants(Algebra<Rational>(2)));
}

TEST_CASE("limits can diverge") {
    const auto a3 = catalog::load("A3");
    // f1 = t e1, f2 = e2 sends e1*e1 = e1 to (1/t) f1
    const Witness w = witness2({t, RatFunc(0), RatFunc(0), RatFunc(1)});
    const Algebra<RatFunc> moved = act(a3, w);
    CHECK(moved.at(0, 0, 0) == t);
    CHECK(!limit(act(catalog::load("A2"), witness2({t.inverse(), RatFunc(0), RatFunc(0), RatFunc(1)}))).has_value());
}

TEST_CASE("verify_witness on named examples") {
    CHECK(verify_witness(catalog::load("B4"), catalog::load("B1", Rational(-2)),
                         witness2({t, RatFunc(0), t, RatFunc(1)})));
    CHECK(!verify_witness(catalog::load("A2"), catalog::load("A3"),
                          witness2({RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)})));
    CHECK_THROWS_AS(verify_witness(catalog::load("P2"), catalog::load("A2"),
                                   witness2({t, RatFunc(0), RatFunc(0), RatFunc(1)})),
                    DimensionMismatch);
    const Witness singular = witness2({t, t, t, t});
    CHECK_THROWS_AS(act(catalog::load("A2"), singular), SingularMatrix);
}

TEST_CASE("inverse_given = false inverts the stored matrix") {
    const auto a3 = catalog::load("A3");
    const Witness direct = witness2({RatFunc(1), RatFunc(0), t * t, t});
    const Matrix<RatFunc> inv = inverse(direct.mat, RatFunc(1), RatFunc(0));
    const Witness stored_inverse{inv, false};
    CHECK(verify_witness(a3, catalog::load("A2"), direct));
    CHECK(verify_witness(a3, catalog::load("A2"), stored_inverse));
}

TEST_CASE("criteria battery on spec pairs") {
    const CriteriaConfig config;

    SUBCASE("B4 to A4: trace invariant 9/5 vs 2") {
        const Verdict v = criteria_battery(catalog::load("B4"), catalog::load("A4"), config);
        REQUIRE(v.state == Verdict::State::RuledOut);
        bool found = false;
        for (const auto& r : v.reasons)
            if (r.criterion == Criterion::TraceInvariant && r.i == 1 && r.j == 1 && r.lhs == Rational(9, 5) &&
                r.rhs == 2)
                found = true;
        CHECK(found);
    }

    SUBCASE("B5 to B1(-1): trace invariant 1 vs 2") {
        const Verdict v = criteria_battery(catalog::load("B5"), catalog::load("B1", Rational(-1)), config);
        REQUIRE(v.state == Verdict::State::RuledOut);
        bool found = false;
        for (const auto& r : v.reasons)
            if (r.criterion == Criterion::TraceInvariant && r.lhs == 1 && r.rhs == 2) found = true;
        CHECK(found);
    }

    SUBCASE("A3 to A2 is verified with the catalog witness") {
        const Witness w = witness2({RatFunc(1), RatFunc(0), t * t, t});
        const Verdict v = criteria_battery(catalog::load("A3"), catalog::load("A2"), config, w);
        CHECK(v.state == Verdict::State::Verified);
    }

    SUBCASE("B4 to B1(-1/2) is ruled out only by identity transfer") {
        const Verdict v = criteria_battery(catalog::load("B4"), catalog::load("B1", Rational(-1, 2)), config);
        REQUIRE(v.state == Verdict::State::RuledOut);
        REQUIRE(v.reasons.size() == 1);
        CHECK(v.reasons[0].criterion == Criterion::IdentityTransfer);
        CHECK(v.reasons[0].i == 1);
        CHECK(v.reasons[0].j == 1);
    }

    SUBCASE("undetermined without a witness") {
        // B1(5) -> A5 is a true degeneration; without a witness the battery
        // must stay silent rather than claim impossibility
        const Verdict v = criteria_battery(catalog::load("B1", Rational(5)), catalog::load("A5"), config);
        CHECK(v.state == Verdict::State::Undetermined);
    }

    SUBCASE("commutativity criterion") {
        const Verdict v = criteria_battery(catalog::load("A3"), catalog::load("B3"), config);
        REQUIRE(v.state == Verdict::State::RuledOut);
        bool found = false;
        for (const auto& r : v.reasons)
            if (r.criterion == Criterion::Commutativity) found = true;
        CHECK(found);
    }

    SUBCASE("annihilator semicontinuity fires for B1(0) to B2(1)") {
        const Verdict v = criteria_battery(catalog::load("B1", Rational(0)), catalog::load("B2", Rational(1)), config);
        REQUIRE(v.state == Verdict::State::RuledOut);
        bool found = false;
        for (const auto& r : v.reasons)
            if (r.criterion == Criterion::LeftAnnihilator) found = true;
        CHECK(found);
    }
}

TEST_CASE("hasse graph for dimension 1") {
    const auto nodes = catalog::dim1_nodes();
    std::vector<LabeledAlgebra> algebras;
    for (const auto& n : nodes) algebras.push_back({n.label, n.algebra});
    const HasseGraph g = build_hasse(algebras, catalog::witnesses_for(nodes));
    REQUIRE(g.nodes.size() == 2);
    REQUIRE(g.covering_edges.size() == 1);
    CHECK(g.nodes[g.covering_edges[0].first].label == "P2");
    CHECK(g.nodes[g.covering_edges[0].second].label == "P1");
}

TEST_CASE("build_hasse rejects a broken witness") {
    const auto nodes = catalog::dim1_nodes();
    std::vector<LabeledAlgebra> algebras;
    for (const auto& n : nodes) algebras.push_back({n.label, n.algebra});
    Matrix<RatFunc> m(1, 1, RatFunc(1));
    std::vector<LabeledWitness> witnesses = {{"P1", "P2", Witness{m, true}}};
    CHECK_THROWS_AS(build_hasse(algebras, witnesses), std::invalid_argument);
}

TEST_CASE("verdict consistency check raises InconsistentInput") {
    std::vector<HasseNode> nodes = {{"u", 2}, {"v", 1}};
    Verdict ruled_out;
    ruled_out.state = Verdict::State::RuledOut;
    ruled_out.reasons.push_back({Criterion::OrbitDim, "synthetic"});
    std::vector<std::vector<const Verdict*>> table(2, std::vector<const Verdict*>(2, nullptr));
    table[0][1] = &ruled_out;
    std::set<std::pair<int, int>> verified = {{0, 1}};
    CHECK_THROWS_AS(check_verdict_consistency(verified, table, nodes), InconsistentInput);
}

TEST_CASE("dot output is deterministic") {
    const auto nodes = catalog::dim2_nodes();
    std::vector<LabeledAlgebra> algebras;
    for (const auto& n : nodes) algebras.push_back({n.label, n.algebra});
    const auto witnesses = catalog::witnesses_for(nodes);
    const std::string first = to_dot(build_hasse(algebras, witnesses));
    const std::string second = to_dot(build_hasse(algebras, witnesses));
    CHECK(first == second);
    CHECK(first.find("\"A3\" -> \"A2\";") != std::string::npos);
}
