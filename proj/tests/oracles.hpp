// Test-only oracles, independent of the library implementation paths
// they check.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "coxtile/coxeter.hpp"
#include "coxtile/simplicial_complex.hpp"

namespace oracle {

using coxtile::NerveGraph;
using coxtile::Simplex;
using coxtile::SimplicialComplex;

// Flagness by brute force: every pairwise-connected vertex subset must
// span a simplex. Enumerates all 2^n subsets.
inline bool is_flag_bruteforce(const SimplicialComplex& K) {
    const int n = K.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!K.adjacent(s[i], s[j])) { clique = false; break; }
        if (clique && !K.has_simplex(s)) return false;
    }
    return true;
}

// Empty squares by exhaustive scan over ordered 4-tuples, canonicalized
// the same way as the library output (cycle a-b-c-d, a minimal, b < d).
inline std::set<std::array<int, 4>> empty_squares_bruteforce(const SimplicialComplex& K) {
    std::set<std::array<int, 4>> out;
    const int n = K.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    std::set<int> distinct = {a, b, c, d};
                    if (distinct.size() != 4) continue;
                    if (!(K.adjacent(a, b) && K.adjacent(b, c) && K.adjacent(c, d) &&
                          K.adjacent(d, a)))
                        continue;
                    if (K.adjacent(a, c) || K.adjacent(b, d)) continue;
                    std::array<int, 4> cyc = {a, b, c, d};
                    int mi = 0;
                    for (int i = 1; i < 4; ++i)
                        if (cyc[i] < cyc[mi]) mi = i;
                    std::array<int, 4> rot;
                    for (int i = 0; i < 4; ++i) rot[i] = cyc[(mi + i) % 4];
                    if (rot[1] > rot[3]) std::swap(rot[1], rot[3]);
                    out.insert(rot);
                }
    return out;
}

// Number of simplices of sd(K) per dimension equals the number of
// length-(k+1) chains in the face poset of K.
inline std::vector<long long> sd_f_vector_by_chains(const SimplicialComplex& K) {
    std::vector<Simplex> faces;
    for (int k = 0; k <= K.dim(); ++k)
        for (const auto& s : K.simplices(k)) faces.push_back(s);
    const int m = static_cast<int>(faces.size());
    // chains[i] = count of chains of length i+1 ending at face index
    std::vector<std::vector<long long>> ending(static_cast<std::size_t>(K.dim()) + 1,
                                               std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) ending[0][i] = 1;
    for (std::size_t len = 1; len < ending.size(); ++len)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (faces[j].size() < faces[i].size() &&
                    std::includes(faces[i].begin(), faces[i].end(), faces[j].begin(),
                                  faces[j].end()))
                    ending[len][i] += ending[len - 1][j];
    std::vector<long long> fvec;
    for (const auto& lvl : ending) {
        long long total = 0;
        for (long long c : lvl) total += c;
        fvec.push_back(total);
    }
    while (!fvec.empty() && fvec.back() == 0) fvec.pop_back();
    return fvec;
}

// --- alternative Coxeter normal form ------------------------------------
// Canonical form built the other way around: cancellation scans right to
// left and the representative is the lexicographically greatest word in
// the commutation class. Two words are equal in W iff these agree.

inline std::vector<int> alt_canonical(const NerveGraph& G, std::vector<int> w) {
    bool again = true;
    while (again) {
        again = false;
        const int n = static_cast<int>(w.size());
        for (int j = n - 1; j >= 0 && !again; --j) {
            for (int i = j - 1; i >= 0; --i) {
                if (w[i] == w[j]) {
                    w.erase(w.begin() + j);
                    w.erase(w.begin() + i);
                    again = true;
                    break;
                }
                if (!G.adjacent(w[i], w[j])) break;
            }
        }
    }
    std::vector<int> out;
    while (!w.empty()) {
        int best = 0;
        for (std::size_t p = 0; p < w.size(); ++p) {
            bool movable = true;
            for (std::size_t q = 0; q < p; ++q)
                if (!G.adjacent(w[q], w[p])) { movable = false; break; }
            if (movable && w[p] > w[best]) best = static_cast<int>(p);
        }
        out.push_back(w[best]);
        w.erase(w.begin() + best);
    }
    return out;
}

// Ball sizes per radius via a reduction-table BFS over alt_canonical
// representatives.
inline std::vector<long long> ball_spheres_by_table(const NerveGraph& G, int radius,
                                                    long long guard = 2000000) {
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> words;
    std::vector<long long> spheres;
    std::vector<int> frontier;
    id[{}] = 0;
    words.push_back({});
    frontier.push_back(0);
    spheres.push_back(1);
    for (int r = 1; r <= radius; ++r) {
        std::vector<int> next;
        for (int w : frontier) {
            for (int v = 0; v < G.generator_count(); ++v) {
                std::vector<int> cand = words[w];
                cand.push_back(v);
                cand = alt_canonical(G, cand);
                if (static_cast<int>(cand.size()) != r) continue;
                auto [it, fresh] = id.emplace(cand, static_cast<int>(words.size()));
                if (fresh) {
                    words.push_back(cand);
                    next.push_back(it->second);
                    if (static_cast<long long>(words.size()) > guard)
                        throw std::runtime_error("oracle ball guard exceeded");
                }
            }
        }
        spheres.push_back(static_cast<long long>(next.size()));
        frontier = std::move(next);
    }
    return spheres;
}

// --- random generators --------------------------------------------------

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<int> nf(1, 2 * n);
    std::uniform_int_distribution<int> fs(1, std::min(4, n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Simplex> facets;
    const int m = nf(rng);
    for (int i = 0; i < m; ++i) {
        std::set<int> f;
        const int sz = fs(rng);
        while (static_cast<int>(f.size()) < sz) f.insert(pick(rng));
        facets.emplace_back(f.begin(), f.end());
    }
    for (int v = 0; v < n; ++v) {
        bool used = false;
        for (const auto& f : facets)
            if (std::binary_search(f.begin(), f.end(), v)) { used = true; break; }
        if (!used) facets.push_back({v});
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
}

// Random nerve graph on up to max_vertices generators.
inline NerveGraph random_nerve(std::mt19937_64& rng, int max_vertices, double edge_p = 0.5) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    const int n = nv(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    std::bernoulli_distribution keep(edge_p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) edges.push_back({u, v});
    return NerveGraph::from_edges(std::move(labels), edges);
}

inline std::vector<int> random_word(std::mt19937_64& rng, const NerveGraph& G, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, G.generator_count() - 1);
    std::vector<int> w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(pick(rng));
    return w;
}

}  // namespace oracle
