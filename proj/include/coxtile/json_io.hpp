#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coxtile/coxeter.hpp"
#include "coxtile/davis.hpp"
#include "coxtile/free_product.hpp"
#include "coxtile/homology.hpp"
#include "coxtile/simplicial_complex.hpp"

namespace coxtile {

using json = nlohmann::ordered_json;

// {"vertices": ["a", ...], "facets": [["a","b"], ...]}
inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON needs \"vertices\" and \"facets\"");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    auto facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
    return SimplicialComplex::from_labels(std::move(vertices), facets);
}

inline json complex_to_json(const SimplicialComplex& K) {
    json j;
    j["vertices"] = K.vertex_labels();
    json facets = json::array();
    for (const auto& f : K.facets()) {
        json lf = json::array();
        for (int v : f) lf.push_back(K.vertex_labels()[v]);
        facets.push_back(lf);
    }
    j["facets"] = facets;
    return j;
}

inline SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return complex_from_json(j);
}

// {degree: {"rank": r, "torsion": [...]}}
inline json homology_to_json(const HomologyProfile& p) {
    json j = json::object();
    for (std::size_t k = 0; k < p.groups.size(); ++k) {
        json g;
        g["rank"] = p.groups[k].rank;
        g["torsion"] = p.groups[k].torsion;
        j[std::to_string(k)] = g;
    }
    return j;
}

inline json free_product_word_to_json(const FreeProductWord& w) {
    json j = json::array();
    for (const auto& s : w.syllables) j.push_back({s.factor, {s.a, s.b}});
    return j;
}

inline FreeProductWord free_product_word_from_json(const json& j) {
    FreeProductWord w;
    for (const auto& e : j) {
        Syllable s;
        s.factor = e.at(0).get<std::string>();
        s.a = e.at(1).at(0).get<long long>();
        s.b = e.at(1).at(1).get<long long>();
        w.syllables.push_back(std::move(s));
    }
    return fp_normal_form(w);
}

// ordered CSV: index,length,normal form
inline std::string ball_to_csv(const NerveGraph& G, const std::vector<ReducedWord>& ball) {
    std::ostringstream out;
    out << "index,length,normal_form\n";
    for (std::size_t i = 0; i < ball.size(); ++i)
        out << i + 1 << "," << ball[i].length() << "," << word_to_string(G, ball[i]) << "\n";
    return out.str();
}

// tile adjacency graph: nodes carry index, normal form, length, sign;
// edges carry the mirror label
inline std::string adjacency_to_dot(const TileComplex& tc) {
    std::ostringstream out;
    out << "graph tiles {\n";
    for (std::size_t i = 0; i < tc.tiles.size(); ++i) {
        std::string nf = word_to_string(tc.nerve, tc.tiles[i]);
        out << "  t" << i + 1 << " [label=\"" << i + 1 << ": " << (nf.empty() ? "e" : nf)
            << " (" << (tc.tile_sign[i] > 0 ? "+" : "-") << ")\"];\n";
    }
    for (const auto& e : tc.adjacency)
        out << "  t" << e.from + 1 << " -- t" << e.to + 1 << " [label=\""
            << tc.nerve.labels()[e.mirror] << "\"];\n";
    out << "}\n";
    return out.str();
}

inline json adjacency_to_json(const TileComplex& tc) {
    json j;
    json nodes = json::array();
    for (std::size_t i = 0; i < tc.tiles.size(); ++i) {
        json n;
        n["index"] = i + 1;
        n["normal_form"] = word_to_string(tc.nerve, tc.tiles[i]);
        n["length"] = tc.tiles[i].length();
        n["sign"] = tc.tile_sign[i];
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : tc.adjacency) {
        json ed;
        ed["from"] = e.from + 1;
        ed["to"] = e.to + 1;
        ed["mirror"] = tc.nerve.labels()[e.mirror];
        edges.push_back(ed);
    }
    j["edges"] = edges;
    return j;
}

// cell complex dump: dimensions plus dense boundary matrices
inline json chains_to_json(const ChainComplex& C) {
    json j;
    j["dims"] = C.dims;
    json bds = json::array();
    for (const auto& bd : C.boundary) {
        json m;
        m["rows"] = bd.rows;
        m["cols"] = bd.cols;
        json rows = json::array();
        for (int i = 0; i < bd.rows; ++i) {
            json row = json::array();
            for (int c = 0; c < bd.cols; ++c) row.push_back(bd.at(i, c));
            rows.push_back(row);
        }
        m["entries"] = rows;
        bds.push_back(m);
    }
    j["boundary"] = bds;
    return j;
}

}  // namespace coxtile
