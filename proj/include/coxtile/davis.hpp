#pragma once

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "coxtile/coxeter.hpp"
#include "coxtile/homology.hpp"
#include "coxtile/simplicial_complex.hpp"

namespace coxtile {

// The chamber: a cone over the barycentric subdivision of the input
// complex T, with one mirror per vertex of T. The mirror X_v is the
// closed dual cell of v in sd(T): all chains whose members contain v.
struct ConeChamber {
    SimplicialComplex base;  // T
    SimplicialComplex sd;    // sd(T)
    SimplicialComplex cone;  // cone over sd(T); apex is the last vertex
    int apex = -1;

    // cells[d] = d-simplices of the cone, lex sorted
    std::vector<std::vector<Simplex>> cells;
    // mirror_mask[d][i] = generators v of T with cells[d][i] inside X_v
    std::vector<std::vector<std::uint64_t>> mirror_mask;
    std::vector<Subcomplex> mirrors;  // per base vertex, subcomplex of sd

    int dim() const { return static_cast<int>(cells.size()) - 1; }

    long long cell_count() const {
        long long c = 0;
        for (const auto& lvl : cells) c += static_cast<long long>(lvl.size());
        return c;
    }

    int cell_index(const Simplex& s) const {
        const auto& lvl = cells[s.size() - 1];
        auto it = std::lower_bound(lvl.begin(), lvl.end(), s);
        return static_cast<int>(it - lvl.begin());
    }
};

inline ConeChamber build_chamber(const SimplicialComplex& T) {
    if (T.vertex_count() > 64)
        throw std::invalid_argument("build_chamber: more than 64 base vertices unsupported");
    ConeChamber ch;
    ch.base = T;
    auto sdm = barycentric_subdivision_with_map(T);
    ch.sd = std::move(sdm.complex);
    const auto& v2s = sdm.vertex_to_simplex;

    // cone over sd: one extra apex vertex joined to every sd facet
    std::vector<std::string> labels = ch.sd.vertex_labels();
    std::string apex_lab = "cone";
    while (std::find(labels.begin(), labels.end(), apex_lab) != labels.end()) apex_lab += "'";
    ch.apex = static_cast<int>(labels.size());
    labels.push_back(apex_lab);
    std::vector<Simplex> facets;
    for (const auto& f : ch.sd.facets()) {
        Simplex g = f;
        g.push_back(ch.apex);
        facets.push_back(g);
    }
    ch.cone = SimplicialComplex::from_indexed(std::move(labels), std::move(facets));

    ch.cells.assign(static_cast<std::size_t>(ch.cone.dim()) + 1, {});
    ch.mirror_mask.assign(ch.cells.size(), {});
    for (int d = 0; d <= ch.cone.dim(); ++d) {
        ch.cells[d] = ch.cone.simplices(d);
        for (const auto& s : ch.cells[d]) {
            std::uint64_t mask = 0;
            if (!std::binary_search(s.begin(), s.end(), ch.apex)) {
                // chain of base simplices; its minimal member is the
                // intersection, which carries the mirror set
                const Simplex* min_s = &v2s[s[0]];
                for (int sv : s)
                    if (v2s[sv].size() < min_s->size()) min_s = &v2s[sv];
                for (int v : *min_s) mask |= 1ull << v;
            }
            ch.mirror_mask[d].push_back(mask);
        }
    }

    // mirrors as subcomplexes of sd
    for (int v = 0; v < T.vertex_count(); ++v) {
        std::vector<Simplex> gens;
        for (int d = 0; d <= ch.sd.dim(); ++d)
            for (const auto& s : ch.sd.simplices(d)) {
                bool inside = true;
                for (int sv : s)
                    if (!std::binary_search(v2s[sv].begin(), v2s[sv].end(), v)) {
                        inside = false;
                        break;
                    }
                if (inside) gens.push_back(s);
            }
        if (gens.empty())
            throw std::logic_error("build_chamber: empty mirror");  // cannot happen for valid T
        ch.mirrors.push_back(Subcomplex::closure(ch.sd, gens));
    }
    return ch;
}

// --- attach regions and disk certificates ------------------------------

// The region along which the next chamber attaches: the union of the
// mirrors indexed by the descent set of its group element.
struct AttachRegion {
    ReducedWord word;
    std::uint64_t descent_mask = 0;
    Subcomplex region;  // subcomplex of chamber.sd
};

inline AttachRegion attach_region(const ConeChamber& ch, const NerveGraph& G,
                                  const ReducedWord& w) {
    if (w.is_identity()) throw std::invalid_argument("attach_region: identity word");
    AttachRegion ar;
    ar.word = w;
    ar.descent_mask = descent_set(G, w);
    bool first = true;
    for (int v : mask_to_vertices(ar.descent_mask)) {
        if (first) {
            ar.region = ch.mirrors[v];
            first = false;
        } else {
            ar.region = ar.region.unite(ch.mirrors[v]);
        }
    }
    return ar;
}

enum class CertificateStatus { Verified, Inconclusive, Failed };

struct DiskCertificate {
    CertificateStatus status = CertificateStatus::Failed;
    int dim = -1;
    long long chi = 0;
    HomologyProfile profile;
    HomologyProfile frontier_profile;
    std::string reason;
};

// Homology certificate that a region is a codimension-zero disk in the
// chamber boundary: connected, trivial reduced homology, chi = 1, and a
// frontier with the homology of a sphere one dimension down. In
// dimension >= 3 these checks do not imply ball-ness, so a clean pass
// is reported as inconclusive there.
inline DiskCertificate disk_certificate(const Subcomplex& region) {
    DiskCertificate cert;
    if (region.empty()) {
        cert.reason = "empty region";
        return cert;
    }
    cert.dim = region.dim();
    cert.chi = euler_characteristic(region);
    cert.profile = homology(region);
    if (cert.chi != 1) {
        cert.reason = "chi != 1";
        return cert;
    }
    if (!cert.profile.trivial_reduced()) {
        cert.reason = "nontrivial reduced homology";
        return cert;
    }
    Subcomplex fr = region.frontier();
    if (cert.dim == 0) {
        // single point; empty frontier is the (-1)-sphere
        if (!fr.empty()) {
            cert.reason = "0-dimensional region with nonempty frontier";
            return cert;
        }
    } else {
        if (fr.empty()) {
            cert.reason = "empty frontier";
            return cert;
        }
        cert.frontier_profile = homology(fr);
        if (cert.frontier_profile != HomologyProfile::sphere(cert.dim - 1)) {
            cert.reason = "frontier is not a sphere";
            return cert;
        }
    }
    cert.status = cert.dim >= 3 ? CertificateStatus::Inconclusive : CertificateStatus::Verified;
    return cert;
}

// --- truncations P_n ---------------------------------------------------

struct TruncationGuards {
    int max_tiles = 512;
    long long max_cells = 200000;
    long long max_ball_elements = 200000;
};

// Explicit cell model of P_n: n chambers glued by the reflection
// relation (g,x) ~ (h,x) iff h^{-1} g lies in the spherical subgroup of
// the mirrors through x.
struct TileComplex {
    ConeChamber chamber;
    NerveGraph nerve;
    std::vector<ReducedWord> tiles;  // chamber order g_1 = e, g_2, ...
    std::vector<int> tile_sign;      // (-1)^length

    struct AdjEdge {
        int from = 0, to = 0;  // tile indices, length increases from -> to
        int mirror = 0;        // generator label index
    };
    std::vector<AdjEdge> adjacency;

    // cell classes per dimension: (representative tile, chamber cell index)
    std::vector<std::vector<std::pair<int, int>>> cell_ids;
    ChainComplex chains;

    long long cell_count() const {
        long long c = 0;
        for (const auto& lvl : cell_ids) c += static_cast<long long>(lvl.size());
        return c;
    }
    long long euler() const { return chains.euler(); }
    bool adjacency_connected() const {
        if (tiles.empty()) return false;
        std::vector<int> comp(tiles.size(), -1);
        std::vector<int> stack = {0};
        comp[0] = 0;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (const auto& e : adjacency) {
                int o = e.from == t ? e.to : (e.to == t ? e.from : -1);
                if (o >= 0 && comp[o] < 0) {
                    comp[o] = 0;
                    stack.push_back(o);
                }
            }
        }
        for (int c : comp)
            if (c < 0) return false;
        return true;
    }
};

inline TileComplex build_truncation(const ConeChamber& ch, int n,
                                    const TruncationGuards& guards = {}) {
    if (n < 1) throw std::invalid_argument("build_truncation: need at least one tile");
    if (n > guards.max_tiles) throw GuardExceeded("build_truncation: tile guard exceeded");
    TileComplex tc;
    tc.chamber = ch;
    tc.nerve = NerveGraph::from_complex(ch.base);

    // enumerate just enough of the ball to cover n tiles
    std::vector<ReducedWord> ball = enumerate_ball(tc.nerve, 0, guards.max_ball_elements);
    for (int r = 1; static_cast<long long>(ball.size()) < n; ++r) {
        auto next = enumerate_ball(tc.nerve, r, guards.max_ball_elements);
        if (next.size() == ball.size())
            throw std::invalid_argument("build_truncation: group has fewer than n elements");
        ball = std::move(next);
    }
    ball.resize(n);
    tc.tiles = std::move(ball);
    std::map<std::vector<int>, int> tile_index;
    for (int i = 0; i < n; ++i) {
        tile_index[tc.tiles[i].letters] = i;
        tc.tile_sign.push_back(tc.tiles[i].length() % 2 == 0 ? 1 : -1);
    }

    // adjacency graph
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < tc.nerve.generator_count(); ++v) {
            ReducedWord u = multiply(tc.nerve, tc.tiles[i], ReducedWord{{v}});
            if (u.length() != tc.tiles[i].length() + 1) continue;
            auto it = tile_index.find(u.letters);
            if (it != tile_index.end()) tc.adjacency.push_back({i, it->second, v});
        }

    // representative tile of the class of (tile i, cell with mirror set S):
    // minimal tile index in g_i W_S
    std::map<std::pair<std::uint64_t, int>, int> rep_cache;
    auto rep_tile = [&](std::uint64_t mask, int i) {
        auto key = std::make_pair(mask, i);
        auto it = rep_cache.find(key);
        if (it != rep_cache.end()) return it->second;
        int best = i;
        auto gens = mask_to_vertices(mask);
        const int m = static_cast<int>(gens.size());
        for (unsigned sub = 1; sub < (1u << m); ++sub) {
            ReducedWord u = tc.tiles[i];
            for (int b = 0; b < m; ++b)
                if (sub & (1u << b)) u = multiply(tc.nerve, u, ReducedWord{{gens[b]}});
            auto jt = tile_index.find(u.letters);
            if (jt != tile_index.end()) best = std::min(best, jt->second);
        }
        rep_cache.emplace(key, best);
        return best;
    };

    // cell classes
    const int top = ch.dim();
    tc.cell_ids.assign(static_cast<std::size_t>(top) + 1, {});
    std::vector<std::map<std::pair<int, int>, int>> id_of(static_cast<std::size_t>(top) + 1);
    long long total_cells = 0;
    for (int d = 0; d <= top; ++d) {
        for (int i = 0; i < n; ++i)
            for (std::size_t c = 0; c < ch.cells[d].size(); ++c) {
                int rep = rep_tile(ch.mirror_mask[d][c], i);
                auto key = std::make_pair(rep, static_cast<int>(c));
                if (id_of[d].emplace(key, static_cast<int>(tc.cell_ids[d].size())).second) {
                    tc.cell_ids[d].push_back(key);
                    if (++total_cells > guards.max_cells)
                        throw GuardExceeded("build_truncation: cell guard exceeded");
                }
            }
    }

    // boundary matrices on cell classes
    tc.chains.dims.clear();
    for (int d = 0; d <= top; ++d) tc.chains.dims.push_back(static_cast<int>(tc.cell_ids[d].size()));
    for (int d = 0; d <= top; ++d) {
        IntMat bd(d == 0 ? 0 : tc.chains.dims[d - 1], tc.chains.dims[d]);
        if (d > 0) {
            for (std::size_t col = 0; col < tc.cell_ids[d].size(); ++col) {
                auto [tile, c] = tc.cell_ids[d][col];
                const Simplex& s = ch.cells[d][c];
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) f.push_back(s[i]);
                    int fc = ch.cell_index(f);
                    int frep = rep_tile(ch.mirror_mask[d - 1][fc], tile);
                    int row = id_of[d - 1].at({frep, fc});
                    bd.at(row, static_cast<int>(col)) += (drop % 2 == 0 ? 1 : -1);
                }
            }
        }
        tc.chains.boundary.push_back(std::move(bd));
    }
    return tc;
}

inline TileComplex build_truncation(const SimplicialComplex& T, int n,
                                    const TruncationGuards& guards = {}) {
    return build_truncation(build_chamber(T), n, guards);
}

// --- Euler characteristics ---------------------------------------------

// Sum over chamber cells of (-1)^dim / |stabilizer|; the stabilizer of
// a cell is (Z/2)^k over its mirror set.
inline Rational orbifold_euler(const ConeChamber& ch) {
    Rational chi(0);
    for (int d = 0; d <= ch.dim(); ++d)
        for (std::size_t c = 0; c < ch.cells[d].size(); ++c) {
            long long stab = 1ll << std::popcount(ch.mirror_mask[d][c]);
            chi = chi + Rational(d % 2 == 0 ? 1 : -1, stab);
        }
    return chi;
}

inline long long quotient_euler(const ConeChamber& ch) {
    if (ch.base.vertex_count() >= 63)
        throw std::overflow_error("quotient_euler: index overflows");
    Rational chi = orbifold_euler(ch) * Rational(1ll << ch.base.vertex_count());
    if (!chi.is_integer())
        throw std::logic_error("quotient_euler: non-integral quotient characteristic");
    return chi.num;
}

// --- the quotient Q = D(X) / W0 ----------------------------------------

struct QuotientGuards {
    long long max_cells = 500000;
};

// One chamber per coset of the commutator subgroup; cosets are parity
// vectors. The class of (p, c) is represented by p with the bits of
// the cell's mirror set cleared.
struct QuotientComplex {
    ConeChamber chamber;
    unsigned long long index = 0;  // 2^|V|
    std::vector<std::vector<std::pair<std::uint64_t, int>>> cell_ids;  // (parity rep, cell)
    ChainComplex chains;
    HomologyProfile profile;

    long long cell_count() const {
        long long c = 0;
        for (const auto& lvl : cell_ids) c += static_cast<long long>(lvl.size());
        return c;
    }
    long long euler() const { return chains.euler(); }
};

inline QuotientComplex build_quotient_complex(const SimplicialComplex& T,
                                              const QuotientGuards& guards = {}) {
    ConeChamber ch = build_chamber(T);
    const int nv = ch.base.vertex_count();
    if (nv > 20) throw GuardExceeded("build_quotient_complex: 2^|V| too large");
    QuotientComplex qc;
    qc.index = 1ull << nv;
    const int top = ch.dim();

    long long predicted = 0;
    for (int d = 0; d <= top; ++d)
        for (std::size_t c = 0; c < ch.cells[d].size(); ++c)
            predicted += 1ll << (nv - std::popcount(ch.mirror_mask[d][c]));
    if (predicted > guards.max_cells)
        throw GuardExceeded("build_quotient_complex: cell guard exceeded");

    qc.cell_ids.assign(static_cast<std::size_t>(top) + 1, {});
    std::vector<std::map<std::pair<std::uint64_t, int>, int>> id_of(
        static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        for (std::size_t c = 0; c < ch.cells[d].size(); ++c) {
            std::uint64_t mask = ch.mirror_mask[d][c];
            for (std::uint64_t p = 0; p < qc.index; ++p) {
                if (p & mask) continue;  // not the class representative
                auto key = std::make_pair(p, static_cast<int>(c));
                id_of[d].emplace(key, static_cast<int>(qc.cell_ids[d].size()));
                qc.cell_ids[d].push_back(key);
            }
        }
    }

    qc.chains.dims.clear();
    for (int d = 0; d <= top; ++d)
        qc.chains.dims.push_back(static_cast<int>(qc.cell_ids[d].size()));
    for (int d = 0; d <= top; ++d) {
        IntMat bd(d == 0 ? 0 : qc.chains.dims[d - 1], qc.chains.dims[d]);
        if (d > 0) {
            for (std::size_t col = 0; col < qc.cell_ids[d].size(); ++col) {
                auto [p, c] = qc.cell_ids[d][col];
                const Simplex& s = ch.cells[d][c];
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) f.push_back(s[i]);
                    int fc = ch.cell_index(f);
                    std::uint64_t fp = p & ~ch.mirror_mask[d - 1][fc];
                    int row = id_of[d - 1].at({fp, fc});
                    bd.at(row, static_cast<int>(col)) += (drop % 2 == 0 ? 1 : -1);
                }
            }
        }
        qc.chains.boundary.push_back(std::move(bd));
    }

    if (qc.euler() != quotient_euler(ch))
        throw std::logic_error("build_quotient_complex: Euler characteristic mismatch");
    qc.profile = homology(qc.chains);
    qc.chamber = std::move(ch);
    return qc;
}

// --- H1 injectivity along the filtration -------------------------------

namespace detail {

// Is H1(A;Q) -> H1(B;Q) injective for a chain map that includes A's
// basis into B's via inc1/inc2 (index maps on 1- and 2-cells)?
inline bool h1_injective(const ChainComplex& A, const ChainComplex& B,
                         const std::vector<int>& inc1) {
    if (A.dims.size() < 2) return true;  // no 1-chains, nothing to check
    const IntMat& d1A = A.boundary[1];
    IntMat kerA = kernel_basis(d1A);  // Z1(A) basis, A coordinates
    // push into B's C1
    IntMat kerA_B(B.dims[1], kerA.cols);
    for (int j = 0; j < kerA.cols; ++j)
        for (int i = 0; i < kerA.rows; ++i)
            if (kerA.at(i, j) != 0) kerA_B.at(inc1[i], j) = kerA.at(i, j);
    const int zA = kerA.cols;
    const int rk_b1A = A.dims.size() >= 3 ? matrix_rank(A.boundary[2]) : 0;
    const int rk_b1B = B.dims.size() >= 3 ? matrix_rank(B.boundary[2]) : 0;
    // rank of [Z1(A) | B1(B)]
    int cols2 = B.dims.size() >= 3 ? B.boundary[2].cols : 0;
    IntMat joint(B.dims[1], zA + cols2);
    for (int j = 0; j < zA; ++j)
        for (int i = 0; i < B.dims[1]; ++i) joint.at(i, j) = kerA_B.at(i, j);
    for (int j = 0; j < cols2; ++j)
        for (int i = 0; i < B.dims[1]; ++i) joint.at(i, zA + j) = B.boundary[2].at(i, j);
    int rk_joint = matrix_rank(joint);
    // dim( Z1(A) intersect B1(B) ) inside C1(B)
    int dim_meet = zA + rk_b1B - rk_joint;
    return dim_meet == rk_b1A;
}

}  // namespace detail

// True iff for each prefix, H1(P_{k-1};Q) -> H1(P_k;Q) is injective.
inline bool h1_injectivity_check(const SimplicialComplex& T, int n,
                                 const TruncationGuards& guards = {}) {
    ConeChamber ch = build_chamber(T);
    TileComplex prev = build_truncation(ch, 1, guards);
    for (int k = 2; k <= n; ++k) {
        TileComplex cur = build_truncation(ch, k, guards);
        // cell class ids are stable across prefixes: map by (rep, cell)
        std::map<std::pair<int, int>, int> cur_id;
        for (std::size_t i = 0; i < cur.cell_ids[1].size(); ++i)
            cur_id[cur.cell_ids[1][i]] = static_cast<int>(i);
        std::vector<int> inc1;
        for (const auto& key : prev.cell_ids[1]) inc1.push_back(cur_id.at(key));
        if (!detail::h1_injective(prev.chains, cur.chains, inc1)) return false;
        prev = std::move(cur);
    }
    return true;
}

}  // namespace coxtile
