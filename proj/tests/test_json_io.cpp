#include <catch2/catch_amalgamated.hpp>

#include "tableaux/json_io.hpp"
#include "tableaux/symfunc.hpp"

using namespace tableaux;

TEST_CASE("partition and word encodings") {
    Partition p({3, 1});
    CHECK(to_json(p) == json::parse("[3,1]"));
    CHECK(partition_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), input_error);
    CHECK_THROWS_AS(partition_from_json(json::parse("\"x\"")), input_error);

    Word w = word_from_signed({5, 3, -4, -2});
    CHECK(to_json(w) == json::parse("[5,3,-4,-2]"));
    CHECK(word_from_json(to_json(w)) == w);
    CHECK_THROWS_AS(word_from_json(json::parse("[0]")), input_error);
}

TEST_CASE("tableau encoding") {
    Tableau t = Tableau::from_signed_rows({{1, 2, 4}, {-2, -2, 6}, {3, -4}, {5}});
    json j = to_json(t);
    CHECK(j.at("shape") == json::parse("[3,3,2,1]"));
    CHECK(j.at("rows")[1] == json::parse("[-2,-2,6]"));
    CHECK(tableau_from_json(j) == t);

    CHECK_THROWS_AS(tableau_from_json(json::parse("{\"rows\":[[1],[1,2]]}")), input_error);
    CHECK_THROWS_AS(tableau_from_json(json::parse("{\"shape\":[2],\"rows\":[[1]]}")),
                    input_error);
}

TEST_CASE("array, step, OT and SSOT encodings") {
    TwoLineArray a{{1, 2}, word_from_signed({-1, 2})};
    CHECK(array_from_json(to_json(a)) == a);
    CHECK_THROWS_AS(array_from_json(json::parse("{\"top\":[1],\"bottom\":[1,2]}")),
                    input_error);

    StepRecord rec{StepKind::deleted, {3, 2}};
    json jr = to_json(rec);
    CHECK(jr == json::parse("{\"kind\":\"deleted\",\"cell\":[3,2]}"));
    CHECK(step_record_from_json(jr) == rec);
    CHECK_THROWS_AS(step_record_from_json(json::parse("{\"kind\":\"x\",\"cell\":[1,1]}")),
                    input_error);

    OscillatingTableau ot({Partition{}, Partition({1}), Partition({1, 1})});
    CHECK(ot_from_json(to_json(ot)) == ot);
    CHECK_THROWS_AS(ot_from_json(json::parse("{\"shapes\":[[1]]}")), input_error);

    Ssot s = Ssot::from_grid(Partition({2, 1}), {{{1}, {1, 4, 4, 5, 5}, {1, 3}}, {{2, 3, 4}}});
    json js = to_json(s);
    CHECK(js.at("final_shape") == json::parse("[2,1]"));
    CHECK(ssot_from_json(js) == s);
    CHECK_THROWS_AS(ssot_from_json(json::parse("{\"final_shape\":[1],\"grid\":[[[1,1,1]]]}")),
                    input_error);
}

TEST_CASE("encodings round-trip over organically produced values") {
    for (int n = 0; n <= 3; ++n)
        for (const TwoLineArray& w : enumerate_arrays(2, 4, n)) {
            CHECK(array_from_json(to_json(w)) == w);
            auto [p, q] = rsk_c(w);
            CHECK(tableau_from_json(to_json(p)) == p);
            CHECK(ssot_from_json(to_json(q)) == q);
            auto ot = rs_c(w.bottom).second;
            CHECK(ot_from_json(to_json(ot)) == ot);
            CHECK(word_from_json(to_json(w.bottom)) == w.bottom);
        }
}

TEST_CASE("polynomial encoding") {
    LaurentPolynomial p;
    p.add_term(Monomial::x(1, -2).times_y(2, 1), 3);
    p.add_term(Monomial{}, -1);
    json j = to_json(p);
    REQUIRE(j.size() == 2);
    // Canonical order: the constant term (y-degree 0) first.
    CHECK(j[0] == json::parse("{\"coeff\":-1,\"x\":{},\"y\":{}}"));
    CHECK(j[1] == json::parse("{\"coeff\":3,\"x\":{\"1\":-2},\"y\":{\"2\":1}}"));
}
