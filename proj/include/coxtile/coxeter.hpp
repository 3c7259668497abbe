#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxtile/simplicial_complex.hpp"

namespace coxtile {

// 1-skeleton of the nerve: one involutive generator per vertex, an edge
// for each commuting pair. Capped at 64 generators so adjacency and
// parity vectors fit a machine word.
class NerveGraph {
public:
    NerveGraph() = default;

    static NerveGraph from_complex(const SimplicialComplex& K) {
        if (K.vertex_count() > 64)
            throw std::invalid_argument("NerveGraph: more than 64 generators unsupported");
        NerveGraph g;
        g.labels_ = K.vertex_labels();
        g.adj_.assign(g.labels_.size(), 0);
        for (const auto& e : K.simplices(1)) {
            g.adj_[e[0]] |= 1ull << e[1];
            g.adj_[e[1]] |= 1ull << e[0];
        }
        return g;
    }

    static NerveGraph from_edges(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& edges) {
        if (labels.size() > 64)
            throw std::invalid_argument("NerveGraph: more than 64 generators unsupported");
        NerveGraph g;
        g.labels_ = std::move(labels);
        g.adj_.assign(g.labels_.size(), 0);
        const int n = static_cast<int>(g.labels_.size());
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw std::invalid_argument("NerveGraph: bad edge");
            g.adj_[u] |= 1ull << v;
            g.adj_[v] |= 1ull << u;
        }
        return g;
    }

    int generator_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool adjacent(int u, int v) const { return u != v && (adj_[u] >> v) & 1; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }

    bool operator==(const NerveGraph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> adj_;
};

// Element of W in canonical normal form: the lexicographically least
// reduced word in its commutation class.
struct ReducedWord {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool is_identity() const { return letters.empty(); }
    bool operator==(const ReducedWord& o) const { return letters == o.letters; }
    bool operator!=(const ReducedWord& o) const { return letters != o.letters; }
    bool operator<(const ReducedWord& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

namespace detail {

// Delete cancelable pairs (same letter, everything between commutes
// with it) until none remain. Any two reduced expressions of a RACG
// element differ only by commutations, so this reaches a geodesic.
inline void cancel_to_reduced(const NerveGraph& G, std::vector<int>& w) {
    bool again = true;
    while (again) {
        again = false;
        const int n = static_cast<int>(w.size());
        for (int i = 0; i < n && !again; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (w[j] == w[i]) {
                    w.erase(w.begin() + j);
                    w.erase(w.begin() + i);
                    again = true;
                    break;
                }
                if (!G.adjacent(w[i], w[j])) break;
            }
        }
    }
}

// Lexicographically least word in the commutation class of a reduced
// word: greedily emit the smallest letter that can commute to the front.
inline std::vector<int> lex_least(const NerveGraph& G, std::vector<int> w) {
    std::vector<int> out;
    out.reserve(w.size());
    while (!w.empty()) {
        int best_pos = 0;
        for (std::size_t p = 0; p < w.size(); ++p) {
            bool movable = true;
            for (std::size_t q = 0; q < p; ++q)
                if (!G.adjacent(w[q], w[p])) { movable = false; break; }
            if (movable && w[p] < w[best_pos]) best_pos = static_cast<int>(p);
        }
        out.push_back(w[best_pos]);
        w.erase(w.begin() + best_pos);
    }
    return out;
}

}  // namespace detail

inline ReducedWord reduce(const NerveGraph& G, std::vector<int> letters) {
    for (int v : letters)
        if (v < 0 || v >= G.generator_count())
            throw std::invalid_argument("reduce: unknown generator");
    detail::cancel_to_reduced(G, letters);
    return ReducedWord{detail::lex_least(G, std::move(letters))};
}

inline ReducedWord multiply(const NerveGraph& G, const ReducedWord& a, const ReducedWord& b) {
    std::vector<int> w = a.letters;
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    return reduce(G, std::move(w));
}

inline int length(const ReducedWord& w) { return w.length(); }

// In(w) = { v : l(wv) < l(w) }, as a generator bitmask.
inline std::uint64_t descent_set(const NerveGraph& G, const ReducedWord& w) {
    std::uint64_t mask = 0;
    for (int v = 0; v < G.generator_count(); ++v) {
        ReducedWord wv = multiply(G, w, ReducedWord{{v}});
        if (wv.length() < w.length()) mask |= 1ull << v;
    }
    return mask;
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1) out.push_back(v);
    return out;
}

// All elements of length <= radius in chamber order: sorted by
// (length, lex normal form), identity first.
inline std::vector<ReducedWord> enumerate_ball(const NerveGraph& G, int radius,
                                               long long max_elements = 200000) {
    if (radius < 0) throw std::invalid_argument("enumerate_ball: negative radius");
    std::vector<ReducedWord> out;
    std::set<std::vector<int>> layer;
    layer.insert(std::vector<int>{});
    long long total = 0;
    for (int r = 0; r <= radius; ++r) {
        total += static_cast<long long>(layer.size());
        if (total > max_elements)
            throw GuardExceeded("enumerate_ball: element guard exceeded");
        for (const auto& w : layer) out.push_back(ReducedWord{w});
        if (r == radius) break;
        std::set<std::vector<int>> next;
        for (const auto& w : layer) {
            for (int v = 0; v < G.generator_count(); ++v) {
                ReducedWord u = multiply(G, ReducedWord{w}, ReducedWord{{v}});
                if (u.length() == r + 1) next.insert(std::move(u.letters));
            }
        }
        layer = std::move(next);
    }
    return out;
}

// Sphere sizes |{ w : l(w) = r }| for r = 0..radius.
inline std::vector<long long> growth_series(const NerveGraph& G, int radius,
                                            long long max_elements = 200000) {
    auto ball = enumerate_ball(G, radius, max_elements);
    std::vector<long long> spheres(static_cast<std::size_t>(radius) + 1, 0);
    for (const auto& w : ball) spheres[w.length()]++;
    return spheres;
}

// --- hyperbolicity -----------------------------------------------------

// Empty square in the nerve graph, if any: a 4-cycle without diagonals.
// Its opposite generator pairs span two commuting infinite dihedral
// directions, hence a Z x Z subgroup.
inline std::optional<std::array<int, 4>> z2_witness(const NerveGraph& G) {
    const int n = G.generator_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const std::array<std::array<int, 4>, 3> cycles = {{
                        {a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
                    for (const auto& cy : cycles) {
                        if (G.adjacent(cy[0], cy[1]) && G.adjacent(cy[1], cy[2]) &&
                            G.adjacent(cy[2], cy[3]) && G.adjacent(cy[3], cy[0]) &&
                            !G.adjacent(cy[0], cy[2]) && !G.adjacent(cy[1], cy[3]))
                            return cy;
                    }
                }
    return std::nullopt;
}

// Flagness of the nerve is assumed checked separately; with it, no
// empty square makes W(T) word hyperbolic.
inline bool is_hyperbolic(const NerveGraph& G) { return !z2_witness(G).has_value(); }
inline bool contains_Z2(const NerveGraph& G) { return z2_witness(G).has_value(); }

// --- abelianization / commutator subgroup ------------------------------

// Parity of each generator's letter count; the relations preserve it.
inline std::uint64_t abelianization_vector(const NerveGraph& G, const ReducedWord& w) {
    std::uint64_t p = 0;
    for (int v : w.letters) {
        (void)G;
        p ^= 1ull << v;
    }
    return p;
}

inline bool in_commutator_subgroup(const NerveGraph& G, const ReducedWord& w) {
    return abelianization_vector(G, w) == 0;
}

// [W : W0] = 2^|V|.
inline unsigned long long commutator_subgroup_index(const NerveGraph& G) {
    if (G.generator_count() >= 64)
        throw std::overflow_error("commutator_subgroup_index: index overflows");
    return 1ull << G.generator_count();
}

// --- torsion scan ------------------------------------------------------

// Nontrivial involutions in the R-ball, optionally restricted to the
// commutator subgroup W0. An empty result certifies torsion-freeness of
// W0 out to that radius only; it is a certificate, not a proof.
struct TorsionScanReport {
    int radius = 0;
    bool commutator_only = true;
    long long scanned = 0;
    std::vector<ReducedWord> violations;
};

inline TorsionScanReport torsion_scan(const NerveGraph& G, int radius, bool commutator_only = true,
                                      long long max_elements = 200000) {
    if (radius < 1) throw std::invalid_argument("torsion_scan: radius must be >= 1");
    TorsionScanReport rep;
    rep.radius = radius;
    rep.commutator_only = commutator_only;
    for (const auto& w : enumerate_ball(G, radius, max_elements)) {
        if (w.is_identity()) continue;
        if (commutator_only && !in_commutator_subgroup(G, w)) continue;
        rep.scanned++;
        if (multiply(G, w, w).is_identity()) rep.violations.push_back(w);
    }
    return rep;
}

// --- serialization helpers ---------------------------------------------

inline std::string word_to_string(const NerveGraph& G, const ReducedWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += " ";
        s += G.labels()[w.letters[i]];
    }
    return s;
}

inline ReducedWord word_from_string(const NerveGraph& G, const std::string& s) {
    std::vector<int> letters;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        auto it = std::find(G.labels().begin(), G.labels().end(), tok);
        if (it == G.labels().end())
            throw std::invalid_argument("word_from_string: unknown generator " + tok);
        letters.push_back(static_cast<int>(it - G.labels().begin()));
        tok.clear();
    };
    for (char c : s) {
        if (c == ' ') flush();
        else tok += c;
    }
    flush();
    return reduce(G, std::move(letters));
}

}  // namespace coxtile
