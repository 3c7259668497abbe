#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxtile/common.hpp"

namespace coxtile {

// A simplex is a sorted list of vertex indices into the owning complex.
using Simplex = std::vector<int>;

namespace detail {

inline Simplex sorted_unique(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool is_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Finite abstract simplicial complex. Facets are the maximal simplices;
// the full simplex poset is materialized on first use. Vertex order is
// preserved from input so all derived orderings are deterministic.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Validates and normalizes: facets indexed against the declared
    // vertex list, deduplicated, non-maximal faces absorbed.
    static SimplicialComplex from_labels(std::vector<std::string> vertices,
                                         const std::vector<std::vector<std::string>>& facets) {
        if (vertices.empty()) throw std::invalid_argument("empty complex: no vertices");
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (!index.emplace(vertices[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate vertex label: " + vertices[i]);
        }
        std::vector<Simplex> fs;
        for (const auto& f : facets) {
            Simplex s;
            for (const auto& lab : f) {
                auto it = index.find(lab);
                if (it == index.end())
                    throw std::invalid_argument("facet references undeclared vertex: " + lab);
                s.push_back(it->second);
            }
            fs.push_back(detail::sorted_unique(std::move(s)));
        }
        return from_indexed(std::move(vertices), std::move(fs));
    }

    static SimplicialComplex from_indexed(std::vector<std::string> vertices,
                                          std::vector<Simplex> facets) {
        if (vertices.empty()) throw std::invalid_argument("empty complex: no vertices");
        const int n = static_cast<int>(vertices.size());
        for (auto& f : facets) {
            if (f.empty()) throw std::invalid_argument("empty facet");
            f = detail::sorted_unique(std::move(f));
            for (int v : f)
                if (v < 0 || v >= n) throw std::invalid_argument("facet vertex index out of range");
        }
        // Absorb non-maximal faces, drop duplicates.
        std::vector<Simplex> maximal;
        std::sort(facets.begin(), facets.end(),
                  [](const Simplex& a, const Simplex& b) {
                      if (a.size() != b.size()) return a.size() > b.size();
                      return a < b;
                  });
        for (const auto& f : facets) {
            bool contained = false;
            for (const auto& m : maximal)
                if (detail::is_subset(f, m)) { contained = true; break; }
            if (!contained) maximal.push_back(f);
        }
        std::sort(maximal.begin(), maximal.end(), dim_lex_less);
        SimplicialComplex K;
        K.vertices_ = std::move(vertices);
        K.facets_ = std::move(maximal);
        // Every declared vertex must appear in some facet.
        std::vector<char> seen(n, 0);
        for (const auto& f : K.facets_)
            for (int v : f) seen[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw std::invalid_argument("vertex not in any facet: " + K.vertices_[v]);
        return K;
    }

    const std::vector<std::string>& vertex_labels() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    int dim() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    // All simplices of dimension k, sorted lexicographically.
    const std::vector<Simplex>& simplices(int k) const {
        build_poset();
        static const std::vector<Simplex> none;
        if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
        return by_dim_[k];
    }

    bool has_simplex(const Simplex& s) const {
        build_poset();
        return all_.count(s) > 0;
    }

    // Index of s within simplices(dim s), or -1.
    int simplex_index(const Simplex& s) const {
        if (s.empty()) return -1;
        const auto& list = simplices(static_cast<int>(s.size()) - 1);
        auto it = std::lower_bound(list.begin(), list.end(), s);
        if (it == list.end() || *it != s) return -1;
        return static_cast<int>(it - list.begin());
    }

    bool adjacent(int u, int v) const {
        build_skeleton();
        return u != v && adj_[static_cast<std::size_t>(u) * vertices_.size() + v];
    }

    long long simplex_count() const {
        build_poset();
        long long c = 0;
        for (const auto& lvl : by_dim_) c += static_cast<long long>(lvl.size());
        return c;
    }

    static bool dim_lex_less(const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Simplex> facets_;
    mutable std::vector<std::vector<Simplex>> by_dim_;
    mutable std::set<Simplex> all_;
    mutable std::vector<char> adj_;

    void build_poset() const {
        if (!by_dim_.empty() || facets_.empty()) return;
        for (const auto& f : facets_) {
            const int m = static_cast<int>(f.size());
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                Simplex s;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) s.push_back(f[i]);
                all_.insert(std::move(s));
            }
        }
        by_dim_.assign(static_cast<std::size_t>(dim()) + 1, {});
        for (const auto& s : all_) by_dim_[s.size() - 1].push_back(s);
        // std::set iteration is lex within fixed size already, but re-sort
        // since sizes interleave in the set order.
        for (auto& lvl : by_dim_) std::sort(lvl.begin(), lvl.end());
    }

    void build_skeleton() const {
        if (!adj_.empty()) return;
        const std::size_t n = vertices_.size();
        adj_.assign(n * n, 0);
        for (const auto& e : simplices(1)) {
            adj_[static_cast<std::size_t>(e[0]) * n + e[1]] = 1;
            adj_[static_cast<std::size_t>(e[1]) * n + e[0]] = 1;
        }
    }
};

// Downward-closed subset of a parent complex's simplices.
class Subcomplex {
public:
    Subcomplex() = default;

    static Subcomplex closure(const SimplicialComplex& parent, const std::vector<Simplex>& gens) {
        Subcomplex sub;
        sub.parent_ = &parent;
        std::set<Simplex> acc;
        for (const auto& g : gens) {
            if (!parent.has_simplex(g))
                throw std::invalid_argument("subcomplex generator not a simplex of parent");
            const int m = static_cast<int>(g.size());
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                Simplex s;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) s.push_back(g[i]);
                acc.insert(std::move(s));
            }
        }
        sub.init_from_set(acc);
        return sub;
    }

    const SimplicialComplex& parent() const { return *parent_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }

    const std::vector<Simplex>& simplices(int k) const {
        static const std::vector<Simplex> none;
        if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
        return by_dim_[k];
    }

    bool contains(const Simplex& s) const { return all_.count(s) > 0; }

    long long simplex_count() const {
        long long c = 0;
        for (const auto& lvl : by_dim_) c += static_cast<long long>(lvl.size());
        return c;
    }

    Subcomplex unite(const Subcomplex& other) const {
        if (parent_ != other.parent_) throw std::invalid_argument("subcomplex union: parent mismatch");
        std::set<Simplex> acc = all_;
        acc.insert(other.all_.begin(), other.all_.end());
        Subcomplex sub;
        sub.parent_ = parent_;
        sub.init_from_set(acc);
        return sub;
    }

    // Simplices of this subcomplex that are faces of some parent simplex
    // outside it. The result is closed under faces.
    Subcomplex frontier() const {
        std::set<Simplex> acc;
        for (int k = parent_->dim(); k >= 0; --k) {
            for (const auto& t : parent_->simplices(k)) {
                if (contains(t)) continue;
                const int m = static_cast<int>(t.size());
                for (unsigned mask = 1; mask < (1u << m); ++mask) {
                    Simplex s;
                    for (int i = 0; i < m; ++i)
                        if (mask & (1u << i)) s.push_back(t[i]);
                    if (contains(s)) acc.insert(std::move(s));
                }
            }
        }
        Subcomplex sub;
        sub.parent_ = parent_;
        sub.init_from_set(acc);
        return sub;
    }

    // Standalone complex on the vertices this subcomplex touches.
    SimplicialComplex as_complex() const {
        if (empty()) throw std::invalid_argument("empty subcomplex has no standalone complex");
        std::vector<int> verts;
        for (const auto& v : by_dim_[0]) verts.push_back(v[0]);
        std::vector<int> rename(parent_->vertex_count(), -1);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            rename[verts[i]] = static_cast<int>(i);
            labels.push_back(parent_->vertex_labels()[verts[i]]);
        }
        // Maximal simplices of the subcomplex.
        std::vector<Simplex> maximal;
        for (int k = dim(); k >= 0; --k) {
            for (const auto& s : by_dim_[k]) {
                bool covered = false;
                for (const auto& m : maximal)
                    if (detail::is_subset(s, m)) { covered = true; break; }
                if (!covered) maximal.push_back(s);
            }
        }
        for (auto& m : maximal)
            for (auto& v : m) v = rename[v];
        return SimplicialComplex::from_indexed(std::move(labels), std::move(maximal));
    }

private:
    const SimplicialComplex* parent_ = nullptr;
    std::vector<std::vector<Simplex>> by_dim_;
    std::set<Simplex> all_;

    void init_from_set(const std::set<Simplex>& acc) {
        all_ = acc;
        by_dim_.clear();
        std::size_t maxd = 0;
        for (const auto& s : all_) maxd = std::max(maxd, s.size());
        by_dim_.assign(maxd, {});
        for (const auto& s : all_) by_dim_[s.size() - 1].push_back(s);
        for (auto& lvl : by_dim_) std::sort(lvl.begin(), lvl.end());
    }
};

// --- flag / square predicates ------------------------------------------

// All cliques of the 1-skeleton, including the empty set, in
// (size, lex) order.
inline std::vector<Simplex> cliques(const SimplicialComplex& K) {
    std::vector<Simplex> out;
    out.push_back({});
    std::vector<Simplex> frontier;
    for (int v = 0; v < K.vertex_count(); ++v) frontier.push_back({v});
    while (!frontier.empty()) {
        out.insert(out.end(), frontier.begin(), frontier.end());
        std::vector<Simplex> next;
        for (const auto& c : frontier) {
            for (int v = c.back() + 1; v < K.vertex_count(); ++v) {
                bool ok = true;
                for (int u : c)
                    if (!K.adjacent(u, v)) { ok = false; break; }
                if (ok) {
                    Simplex c2 = c;
                    c2.push_back(v);
                    next.push_back(std::move(c2));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline bool is_flag(const SimplicialComplex& K) {
    for (const auto& c : cliques(K))
        if (!c.empty() && !K.has_simplex(c)) return false;
    return true;
}

// An empty square as a 4-cycle in vertex order a-b-c-d-a with a minimal
// and b < d; neither diagonal {a,c}, {b,d} is an edge.
struct EmptySquare {
    std::array<int, 4> cycle;
    bool operator==(const EmptySquare& o) const { return cycle == o.cycle; }
    bool operator<(const EmptySquare& o) const { return cycle < o.cycle; }
};

inline std::vector<EmptySquare> empty_squares(const SimplicialComplex& K) {
    std::vector<EmptySquare> out;
    const int n = K.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    // three pairings of {a,b,c,d} into opposite (diagonal) pairs
                    const std::array<std::array<int, 4>, 3> cycles = {{
                        {a, b, c, d},  // diagonals ac, bd
                        {a, b, d, c},  // diagonals ad, bc
                        {a, c, b, d},  // diagonals ab, cd
                    }};
                    for (const auto& cy : cycles) {
                        if (K.adjacent(cy[0], cy[1]) && K.adjacent(cy[1], cy[2]) &&
                            K.adjacent(cy[2], cy[3]) && K.adjacent(cy[3], cy[0]) &&
                            !K.adjacent(cy[0], cy[2]) && !K.adjacent(cy[1], cy[3])) {
                            EmptySquare sq{cy};
                            if (sq.cycle[1] > sq.cycle[3]) std::swap(sq.cycle[1], sq.cycle[3]);
                            out.push_back(sq);
                        }
                    }
                }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_flag_no_square(const SimplicialComplex& K) {
    return is_flag(K) && empty_squares(K).empty();
}

// --- link --------------------------------------------------------------

inline SimplicialComplex link(const SimplicialComplex& K, int v) {
    if (v < 0 || v >= K.vertex_count()) throw std::invalid_argument("link: unknown vertex");
    std::vector<Simplex> gens;
    for (int k = 0; k <= K.dim(); ++k) {
        for (const auto& s : K.simplices(k)) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), v), v);
            if (K.has_simplex(t)) gens.push_back(s);
        }
    }
    if (gens.empty()) throw std::invalid_argument("link: vertex has empty link");
    return Subcomplex::closure(K, gens).as_complex();
}

// --- subdivision -------------------------------------------------------

struct BarycentricSubdivision {
    SimplicialComplex complex;
    // sd vertex index -> the parent simplex it is the barycenter of
    std::vector<Simplex> vertex_to_simplex;
};

inline BarycentricSubdivision barycentric_subdivision_with_map(const SimplicialComplex& K) {
    BarycentricSubdivision out;
    std::map<Simplex, int> id;
    std::vector<std::string> labels;
    for (int k = 0; k <= K.dim(); ++k) {
        for (const auto& s : K.simplices(k)) {
            std::string lab;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) lab += "|";
                lab += K.vertex_labels()[s[i]];
            }
            id[s] = static_cast<int>(labels.size());
            labels.push_back(lab);
            out.vertex_to_simplex.push_back(s);
        }
    }
    // Facets of sd(K) are the full flags of the facets of K.
    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        Simplex perm = f;
        std::sort(perm.begin(), perm.end());
        do {
            Simplex flag, cur;
            for (int v : perm) {
                cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
                flag.push_back(id.at(cur));
            }
            facets.push_back(detail::sorted_unique(std::move(flag)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
    return out;
}

inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
    return barycentric_subdivision_with_map(K).complex;
}

// Stellar subdivision of the edge {a,b}: a new vertex m replaces the
// edge midpoint; every facet containing the edge splits in two.
inline SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& K, int a, int b) {
    Simplex e = {std::min(a, b), std::max(a, b)};
    if (!K.has_simplex(e)) throw std::invalid_argument("stellar_subdivide_edge: not an edge");
    std::vector<std::string> labels = K.vertex_labels();
    std::string lab = labels[e[0]] + "+" + labels[e[1]];
    while (std::find(labels.begin(), labels.end(), lab) != labels.end()) lab += "'";
    const int m = static_cast<int>(labels.size());
    labels.push_back(lab);
    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        if (detail::is_subset(e, f)) {
            for (int drop : e) {
                Simplex g;
                for (int v : f)
                    if (v != drop) g.push_back(v);
                g.push_back(m);
                facets.push_back(detail::sorted_unique(std::move(g)));
            }
        } else {
            facets.push_back(f);
        }
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
}

// Bistellar flip of the edge {a,b}: requires the edge's star to be
// exactly two triangles a-b-x and a-b-y with x, y non-adjacent; the
// diagonal ab of the quadrilateral a-x-b-y is exchanged for xy. The
// result triangulates the same polyhedron.
inline std::optional<SimplicialComplex> flip_edge(const SimplicialComplex& K, int a, int b) {
    Simplex e = {std::min(a, b), std::max(a, b)};
    if (!K.has_simplex(e)) return std::nullopt;
    std::vector<int> apex;
    for (const auto& f : K.facets()) {
        if (!detail::is_subset(e, f)) continue;
        if (f.size() != 3) return std::nullopt;  // edge star is not a surface patch
        for (int w : f)
            if (w != e[0] && w != e[1]) apex.push_back(w);
    }
    if (apex.size() != 2 || K.adjacent(apex[0], apex[1])) return std::nullopt;
    std::vector<Simplex> facets;
    for (const auto& f : K.facets())
        if (!(f.size() == 3 && detail::is_subset(e, f))) facets.push_back(f);
    facets.push_back(detail::sorted_unique({e[0], apex[0], apex[1]}));
    facets.push_back(detail::sorted_unique({e[1], apex[0], apex[1]}));
    std::vector<std::string> labels = K.vertex_labels();
    return SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
}

// Iterated local moves aiming for the flag-no-square condition: a
// barycentric subdivision whenever flagness fails, otherwise the edge
// flip or stellar edge subdivision that leaves the fewest empty
// squares, over edges of the current squares. Flips are essential on
// closed surfaces: subdividing an edge there always recreates a square
// through the two apexes of its star, so subdivision alone cannot
// terminate. The checker is the contract; termination is a heuristic.
inline SimplicialComplex make_flag_no_square(const SimplicialComplex& K, int max_rounds = 32) {
    if (K.dim() > 3) throw std::invalid_argument("make_flag_no_square: dim > 3 unsupported");
    SimplicialComplex cur = K;
    for (int round = 0; round <= max_rounds; ++round) {
        if (!is_flag(cur)) {
            cur = barycentric_subdivision(cur);
            continue;
        }
        auto squares = empty_squares(cur);
        if (squares.empty()) return cur;
        std::set<Simplex> edges;
        for (const auto& sq : squares) {
            const auto& c = sq.cycle;
            for (int i = 0; i < 4; ++i) {
                int u = c[i], v = c[(i + 1) % 4];
                edges.insert({std::min(u, v), std::max(u, v)});
            }
        }
        std::optional<SimplicialComplex> best;
        std::size_t best_count = 0;
        bool best_is_flip = false;
        auto consider = [&](std::optional<SimplicialComplex> trial, bool is_flip) {
            if (!trial || !is_flag(*trial)) return;
            std::size_t n = empty_squares(*trial).size();
            // fewest squares wins; flips (which do not grow the complex)
            // win ties against subdivisions
            if (!best || n < best_count || (n == best_count && is_flip && !best_is_flip)) {
                best = std::move(trial);
                best_count = n;
                best_is_flip = is_flip;
            }
        };
        for (const auto& e : edges) {
            consider(flip_edge(cur, e[0], e[1]), true);
            consider(stellar_subdivide_edge(cur, e[0], e[1]), false);
        }
        if (!best) throw GuardExceeded("make_flag_no_square: no flagness-preserving move");
        cur = std::move(*best);
    }
    throw GuardExceeded("make_flag_no_square: round budget exhausted");
}

// --- small helpers -----------------------------------------------------

inline long long euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0;
    for (int k = 0; k <= K.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(K.simplices(k).size());
    return chi;
}

inline long long euler_characteristic(const Subcomplex& S) {
    long long chi = 0;
    for (int k = 0; k <= S.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(S.simplices(k).size());
    return chi;
}

// n-cycle on labels v0..v{n-1}; the workhorse test nerve.
inline SimplicialComplex cycle_complex(int n, const std::string& prefix = "v") {
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (int i = 0; i < n; ++i) {
        labels.push_back(prefix + std::to_string(i));
        facets.push_back({i, (i + 1) % n});
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
}

inline SimplicialComplex simplex_boundary(int n) {
    // boundary of the n-simplex on n+1 vertices
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<Simplex> facets;
    for (int drop = 0; drop <= n; ++drop) {
        Simplex f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(i);
        facets.push_back(f);
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
}

}  // namespace coxtile
