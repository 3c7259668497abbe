#pragma once

#include <cassert>
#include <cstdlib>
#include <string>
#include <vector>

#include "coxtile/simplicial_complex.hpp"

namespace coxtile {

// Dense integer matrix, row-major. All homology inputs here are small
// enough that density is a feature, not a problem.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

namespace detail {

inline long long checked_mul(long long x, long long y) {
    __int128 p = static_cast<__int128>(x) * y;
    if (p > static_cast<__int128>(4611686018427387903ll) ||
        p < -static_cast<__int128>(4611686018427387903ll))
        throw std::overflow_error("integer overflow in Smith normal form");
    return static_cast<long long>(p);
}

inline void row_axpy(IntMat& m, int dst, int src, long long q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols; ++j)
        if (m.at(src, j) != 0) m.at(dst, j) -= checked_mul(q, m.at(src, j));
}

inline void col_axpy(IntMat& m, int dst, int src, long long q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows; ++i)
        if (m.at(i, src) != 0) m.at(i, dst) -= checked_mul(q, m.at(i, src));
}

}  // namespace detail

// Smith normal form over Z with pivoting by smallest nonzero entry.
// Returns the diagonal (nonzero entries first, each positive). If
// right_transform is given it receives the accumulated column
// operations V with M * V in diagonal form, so columns of V matching
// zero diagonal entries form a kernel basis of M.
inline std::vector<long long> smith_diagonal(IntMat m, IntMat* right_transform = nullptr) {
    IntMat V;
    if (right_transform) {
        V = IntMat(m.cols, m.cols);
        for (int j = 0; j < m.cols; ++j) V.at(j, j) = 1;
    }
    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        if (right_transform)
            for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    };
    auto col_op = [&](int dst, int src, long long q) {
        detail::col_axpy(m, dst, src, q);
        if (right_transform) detail::col_axpy(V, dst, src, q);
    };

    const int bound = std::min(m.rows, m.cols);
    int t = 0;
    for (; t < bound; ++t) {
        // pivot: smallest nonzero |entry| in the remaining block
        int pi = -1, pj = -1;
        long long pv = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                long long v = std::llabs(m.at(i, j));
                if (v != 0 && (pi < 0 || v < pv)) { pi = i; pj = j; pv = v; }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                long long q = m.at(i, t) / m.at(t, t);
                detail::row_axpy(m, i, t, q);
                if (m.at(i, t) != 0) {
                    // remainder strictly smaller than pivot: promote it
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                long long q = m.at(t, j) / m.at(t, t);
                col_op(j, t, q);
                if (m.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (m.at(t, t) < 0) {
            for (int j = t; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
        }
    }

    // Enforce divisibility d1 | d2 | ... among the nonzero diagonal.
    // diag(a,b) ~ diag(gcd,lcm) by unimodular ops touching only these two
    // rows/columns, so the kernel columns of V are unaffected; V is kept
    // as-is and remains valid for kernel extraction.
    const int r = t;
    std::vector<long long> diag;
    for (int i = 0; i < r; ++i) diag.push_back(m.at(i, i));
    for (;;) {
        bool changed = false;
        for (int i = 0; i + 1 < r; ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            long long g = std::gcd(diag[i], diag[i + 1]);
            long long l = detail::checked_mul(diag[i] / g, diag[i + 1]);
            diag[i] = g;
            diag[i + 1] = l;
            changed = true;
        }
        if (!changed) break;
    }
    if (right_transform) *right_transform = std::move(V);
    return diag;
}

inline int matrix_rank(const IntMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return static_cast<int>(smith_diagonal(m).size());
}

// Columns spanning ker(m) over Z.
inline IntMat kernel_basis(const IntMat& m) {
    IntMat V;
    auto diag = smith_diagonal(m, &V);
    const int r = static_cast<int>(diag.size());
    IntMat K(m.cols, m.cols - r);
    for (int j = r; j < m.cols; ++j)
        for (int i = 0; i < m.cols; ++i) K.at(i, j - r) = V.at(i, j);
    return K;
}

// --- homology profiles -------------------------------------------------

struct HomologyProfile {
    struct Group {
        long long rank = 0;
        std::vector<long long> torsion;  // divisibility order, entries >= 2
        bool operator==(const Group& o) const { return rank == o.rank && torsion == o.torsion; }
    };
    std::vector<Group> groups;  // index = degree

    bool operator==(const HomologyProfile& o) const {
        std::size_t n = std::max(groups.size(), o.groups.size());
        for (std::size_t i = 0; i < n; ++i) {
            Group a = i < groups.size() ? groups[i] : Group{};
            Group b = i < o.groups.size() ? o.groups[i] : Group{};
            if (!(a == b)) return false;
        }
        return true;
    }
    bool operator!=(const HomologyProfile& o) const { return !(*this == o); }

    std::vector<long long> ranks() const {
        std::vector<long long> r;
        for (const auto& g : groups) r.push_back(g.rank);
        return r;
    }

    long long euler() const {
        long long chi = 0;
        for (std::size_t k = 0; k < groups.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * groups[k].rank;
        return chi;
    }

    bool trivial_reduced() const {
        if (groups.empty() || groups[0].rank != 1 || !groups[0].torsion.empty()) return false;
        for (std::size_t k = 1; k < groups.size(); ++k)
            if (groups[k].rank != 0 || !groups[k].torsion.empty()) return false;
        return true;
    }

    static HomologyProfile from_ranks(std::vector<long long> ranks) {
        HomologyProfile p;
        for (long long r : ranks) p.groups.push_back({r, {}});
        return p;
    }

    // Homology of the (d-1)-sphere: ranks 1,0,...,0,1 (2 in degree 0 for S^0;
    // empty complex profile for d == 0).
    static HomologyProfile sphere(int sphere_dim) {
        HomologyProfile p;
        if (sphere_dim < 0) return p;  // empty "(-1)-sphere"
        if (sphere_dim == 0) {
            p.groups.push_back({2, {}});
            return p;
        }
        p.groups.assign(static_cast<std::size_t>(sphere_dim) + 1, {0, {}});
        p.groups[0].rank = 1;
        p.groups[sphere_dim].rank = 1;
        return p;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < groups.size(); ++k) {
            if (k) s += ", ";
            s += std::to_string(groups[k].rank);
            for (long long t : groups[k].torsion) s += "+Z/" + std::to_string(t);
        }
        return s + "]";
    }
};

// Chain complex of free Z-modules; boundary[k] maps C_k -> C_{k-1}.
// boundary[0] has zero rows.
struct ChainComplex {
    std::vector<int> dims;
    std::vector<IntMat> boundary;

    long long euler() const {
        long long chi = 0;
        for (std::size_t k = 0; k < dims.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * dims[k];
        return chi;
    }
};

inline HomologyProfile homology(const ChainComplex& C) {
    HomologyProfile p;
    const int top = static_cast<int>(C.dims.size()) - 1;
    std::vector<int> rank_bd(C.dims.size() + 1, 0);
    std::vector<std::vector<long long>> tors(C.dims.size() + 1);
    for (int k = 0; k <= top; ++k) {
        auto diag = smith_diagonal(C.boundary[k]);
        rank_bd[k] = static_cast<int>(diag.size());
        for (long long d : diag)
            if (d > 1) tors[k].push_back(d);
    }
    for (int k = 0; k <= top; ++k) {
        HomologyProfile::Group g;
        g.rank = C.dims[k] - rank_bd[k] - (k + 1 <= top ? rank_bd[k + 1] : 0);
        if (k + 1 <= top) g.torsion = tors[k + 1];
        p.groups.push_back(std::move(g));
    }
    return p;
}

namespace detail {

template <typename SimplexLister>
inline ChainComplex chain_complex_impl(int top_dim, SimplexLister&& level) {
    ChainComplex C;
    for (int k = 0; k <= top_dim; ++k) C.dims.push_back(static_cast<int>(level(k).size()));
    for (int k = 0; k <= top_dim; ++k) {
        const auto& cur = level(k);
        IntMat bd(k == 0 ? 0 : static_cast<int>(level(k - 1).size()),
                  static_cast<int>(cur.size()));
        if (k > 0) {
            const auto& below = level(k - 1);
            for (std::size_t j = 0; j < cur.size(); ++j) {
                const Simplex& s = cur[j];
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) f.push_back(s[i]);
                    auto it = std::lower_bound(below.begin(), below.end(), f);
                    assert(it != below.end() && *it == f);
                    int row = static_cast<int>(it - below.begin());
                    bd.at(row, static_cast<int>(j)) += (drop % 2 == 0 ? 1 : -1);
                }
            }
        }
        C.boundary.push_back(std::move(bd));
    }
    return C;
}

}  // namespace detail

inline ChainComplex chain_complex(const SimplicialComplex& K) {
    return detail::chain_complex_impl(K.dim(), [&](int k) -> const std::vector<Simplex>& {
        return K.simplices(k);
    });
}

inline ChainComplex chain_complex(const Subcomplex& S) {
    return detail::chain_complex_impl(S.dim(), [&](int k) -> const std::vector<Simplex>& {
        return S.simplices(k);
    });
}

inline HomologyProfile homology(const SimplicialComplex& K) { return homology(chain_complex(K)); }
inline HomologyProfile homology(const Subcomplex& S) { return homology(chain_complex(S)); }

}  // namespace coxtile
