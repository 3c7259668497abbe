#include <catch2/catch_amalgamated.hpp>

#include "coxtile/json_io.hpp"

using namespace coxtile;

TEST_CASE("complex json round trip") {
    auto K = cycle_complex(5);
    auto j = complex_to_json(K);
    REQUIRE(j.at("vertices").size() == 5);
    REQUIRE(j.at("facets").size() == 5);
    auto K2 = complex_from_json(j);
    CHECK(K2.vertex_labels() == K.vertex_labels());
    CHECK(K2.facets() == K.facets());

    CHECK_THROWS_AS(complex_from_json(json{{"vertices", {"a"}}}), std::invalid_argument);
    CHECK_THROWS_AS(load_complex("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("complex json parsing from text") {
    auto j = json::parse(R"({"vertices": ["a","b","c"], "facets": [["a","b"],["b","c"]]})");
    auto K = complex_from_json(j);
    CHECK(K.vertex_count() == 3);
    CHECK(K.facets().size() == 2);
    CHECK(K.dim() == 1);
}

TEST_CASE("homology to json") {
    HomologyProfile p;
    p.groups = {{1, {}}, {0, {2}}};
    auto j = homology_to_json(p);
    CHECK(j.at("0").at("rank") == 1);
    CHECK(j.at("1").at("torsion") == std::vector<long long>{2});
}

TEST_CASE("free product word json round trip") {
    FreeProductWord w{{{"F1", 1, -2}, {"F3", 0, 4}}};
    auto j = free_product_word_to_json(w);
    auto w2 = free_product_word_from_json(j);
    CHECK(w2 == fp_normal_form(w));
    // parsing normalizes
    auto junreduced = json::parse(R"([["F1",[1,0]],["F1",[-1,0]]])");
    CHECK(free_product_word_from_json(junreduced).identity());
}

TEST_CASE("ball csv") {
    auto G = NerveGraph::from_complex(cycle_complex(5));
    auto ball = enumerate_ball(G, 1);
    auto csv = ball_to_csv(G, ball);
    CHECK(csv.rfind("index,length,normal_form\n1,0,\n2,1,v0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("adjacency dot and json") {
    auto ch = build_chamber(cycle_complex(5));
    auto tc = build_truncation(ch, 3);
    auto dot = adjacency_to_dot(tc);
    CHECK(dot.rfind("graph tiles {", 0) == 0);
    CHECK(dot.find("t1 [label=\"1: e (+)\"]") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '-') >= 2);

    auto j = adjacency_to_json(tc);
    REQUIRE(j.at("nodes").size() == 3);
    CHECK(j.at("nodes").at(0).at("length") == 0);
    CHECK(j.at("edges").size() == tc.adjacency.size());
    for (const auto& e : j.at("edges")) {
        int from = e.at("from").get<int>();
        CHECK(from >= 1);
        CHECK(from <= 3);
    }
}

TEST_CASE("chains json shape") {
    auto C = chain_complex(cycle_complex(4));
    auto j = chains_to_json(C);
    CHECK(j.at("dims") == std::vector<long long>{4, 4});
    REQUIRE(j.at("boundary").size() == C.boundary.size());
    CHECK(j.at("boundary").at(1).at("rows") == 4);
    CHECK(j.at("boundary").at(1).at("cols") == 4);
}
