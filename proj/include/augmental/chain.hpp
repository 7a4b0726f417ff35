#ifndef AUGMENTAL_CHAIN_HPP
#define AUGMENTAL_CHAIN_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "augmental/abelian.hpp"
#include "augmental/complex.hpp"
#include "augmental/smith.hpp"

namespace augmental {

/**
 * The augmental chain complex of a pair, over degrees -1..n.  Degree q basis:
 * the q-faces of the total complex not lying in the sub; orientation is fixed
 * once and for all by the global vertex sort.  For a present total with void
 * sub the degree -1 basis is the single empty face and the boundary of every
 * vertex is that generator.
 */
struct ChainComplex {
    int top = -2;                          // top degree n; -2 when no basis at all
    std::vector<std::vector<Mask>> basis;  // basis[q+1] = degree-q faces, q in -1..top
    std::vector<Matrix> boundary;          // boundary[q+1] : C_q -> C_{q-1}

    int dim_of(int q) const {
        int i = q + 1;
        if (i < 0 || i >= (int)basis.size()) return 0;
        return (int)basis[i].size();
    }
    const Matrix& boundary_of(int q) const {
        static const Matrix empty;
        int i = q + 1;
        if (i < 0 || i >= (int)boundary.size()) return empty;
        return boundary[i];
    }
};

inline ChainComplex build_chain(const ComplexPair& pair) {
    ChainComplex cc;
    if (pair.total.is_void()) return cc;
    const SimplicialComplex& T = pair.total;
    const SimplicialComplex& S = pair.sub;

    auto in_sub = [&](Mask m) { return !S.is_void() && S.contains_face(T.face_of(m)); };

    int n = T.dim().finite();
    cc.top = n;
    cc.basis.assign(n + 2, {});
    for (Mask f : T.face_masks())
        if (!in_sub(f)) cc.basis[face_dim(f) + 1].push_back(f);
    for (auto& b : cc.basis) std::sort(b.begin(), b.end());

    cc.boundary.assign(n + 2, Matrix());
    std::vector<std::map<Mask, int>> index(n + 2);
    for (int q = -1; q <= n; ++q)
        for (int i = 0; i < (int)cc.basis[q + 1].size(); ++i)
            index[q + 1][cc.basis[q + 1][i]] = i;

    for (int q = -1; q <= n; ++q) {
        int rows = q - 1 >= -1 ? (int)cc.basis[q].size() : 0;
        Matrix d(rows, (int)cc.basis[q + 1].size());
        if (q >= 0) {
            for (int c = 0; c < d.cols; ++c) {
                Mask f = cc.basis[q + 1][c];
                int j = 0;
                for (int v = 0; v < T.vertex_count(); ++v) {
                    if (!((f >> v) & 1)) continue;
                    Mask sub = f & ~(Mask(1) << v);
                    auto it = index[q].find(sub);
                    if (it != index[q].end()) d.at(it->second, c) = Integer(j % 2 == 0 ? 1 : -1);
                    ++j;
                }
            }
        }
        cc.boundary[q + 1] = std::move(d);
    }

    // boundary-of-boundary must vanish; checked facewise at build time
    for (int q = 1; q <= n; ++q) {
        for (Mask f : cc.basis[q + 1]) {
            std::map<Mask, long long> acc;
            int j = 0;
            for (int v = 0; v < T.vertex_count(); ++v) {
                if (!((f >> v) & 1)) continue;
                Mask g = f & ~(Mask(1) << v);
                if (index[q].count(g)) {
                    int sj = (j % 2 == 0) ? 1 : -1;
                    int k = 0;
                    for (int w = 0; w < T.vertex_count(); ++w) {
                        if (!((g >> w) & 1)) continue;
                        Mask h = g & ~(Mask(1) << w);
                        if (index[q - 1].count(h)) acc[h] += sj * ((k % 2 == 0) ? 1 : -1);
                        ++k;
                    }
                }
                ++j;
            }
            for (auto& [h, v] : acc)
                if (v != 0) throw std::logic_error("chain build: boundary squared is nonzero");
        }
    }
    return cc;
}

/** Homology table: degree -> group (over Z) or dimension (over a field). */
struct HomologyTable {
    Coefficients coeff;
    std::map<int, FgAbelianGroup> groups;  // zero degrees omitted

    const FgAbelianGroup& at(int q) const {
        static const FgAbelianGroup zero;
        auto it = groups.find(q);
        return it == groups.end() ? zero : it->second;
    }
    bool is_zero() const { return groups.empty(); }
    int min_degree() const { return groups.empty() ? 0 : groups.begin()->first; }
    int max_degree() const { return groups.empty() ? -2 : groups.rbegin()->first; }

    friend bool operator==(const HomologyTable& a, const HomologyTable& b) {
        return a.coeff == b.coeff && a.groups == b.groups;
    }
};

namespace detail {

inline HomologyTable homology_of_chain(const ChainComplex& cc, const Coefficients& coeff) {
    HomologyTable table;
    table.coeff = coeff;
    if (cc.top < -1) return table;

    std::vector<int> rank(cc.top + 3, 0);           // rank of boundary_q, index q+1
    std::vector<SmithResult> snf(cc.top + 3);
    for (int q = -1; q <= cc.top; ++q) {
        const Matrix& d = cc.boundary_of(q);
        if (d.rows == 0 || d.cols == 0) {
            rank[q + 1] = 0;
            continue;
        }
        switch (coeff.kind) {
            case Coefficients::Kind::integers:
                snf[q + 1] = smith_normal_form(d);
                rank[q + 1] = snf[q + 1].rank;
                break;
            case Coefficients::Kind::prime_field:
                rank[q + 1] = rank_mod_p(d, coeff.p);
                break;
            case Coefficients::Kind::rationals:
                rank[q + 1] = rank_over_q(d);
                break;
        }
    }
    for (int q = -1; q <= cc.top; ++q) {
        int dim = cc.dim_of(q);
        int rk_out = rank[q + 1];
        int rk_in = q + 2 <= cc.top + 1 ? rank[q + 2] : 0;
        int free_rank = dim - rk_out - rk_in;
        std::vector<Integer> torsion;
        if (coeff.is_integers() && q + 2 < (int)snf.size())
            for (const Integer& d1 : snf[q + 2].diagonal)
                if (d1 > Integer(1)) torsion.push_back(d1);
        FgAbelianGroup g = canonicalize(free_rank, std::move(torsion));
        if (!g.is_zero()) table.groups[q] = std::move(g);
    }
    return table;
}

}  // namespace detail

inline HomologyTable homology(const ComplexPair& pair, const Coefficients& coeff) {
    return detail::homology_of_chain(build_chain(pair), coeff);
}

inline HomologyTable homology(const SimplicialComplex& cx, const Coefficients& coeff) {
    return homology(ComplexPair::absolute(cx), coeff);
}

/**
 * Cohomology from the transposed boundaries: the coboundary out of degree q
 * is boundary(q+1) transposed, so H^q = ker d^q / im d^{q-1} with the same
 * descriptors as homology plus the familiar torsion shift.
 */
inline HomologyTable cohomology(const ComplexPair& pair, const Coefficients& coeff) {
    ChainComplex cc = build_chain(pair);
    HomologyTable table;
    table.coeff = coeff;
    if (cc.top < -1) return table;

    std::vector<int> rank(cc.top + 3, 0);
    std::vector<SmithResult> snf(cc.top + 3);
    for (int q = -1; q <= cc.top; ++q) {
        Matrix d = cc.boundary_of(q).transposed();  // delta^{q-1} : C^{q-1} -> C^q
        if (d.rows == 0 || d.cols == 0) continue;
        switch (coeff.kind) {
            case Coefficients::Kind::integers:
                snf[q + 1] = smith_normal_form(d);
                rank[q + 1] = snf[q + 1].rank;
                break;
            case Coefficients::Kind::prime_field:
                rank[q + 1] = rank_mod_p(d, coeff.p);
                break;
            case Coefficients::Kind::rationals:
                rank[q + 1] = rank_over_q(d);
                break;
        }
    }
    for (int q = -1; q <= cc.top; ++q) {
        int dim = cc.dim_of(q);
        int rk_out = q + 2 <= cc.top + 1 ? rank[q + 2] : 0;  // rank delta^q
        int rk_in = rank[q + 1];                             // rank delta^{q-1}
        int free_rank = dim - rk_out - rk_in;
        std::vector<Integer> torsion;
        if (coeff.is_integers())
            for (const Integer& d1 : snf[q + 1].diagonal)
                if (d1 > Integer(1)) torsion.push_back(d1);
        FgAbelianGroup g = canonicalize(free_rank, std::move(torsion));
        if (!g.is_zero()) table.groups[q] = std::move(g);
    }
    return table;
}

inline HomologyTable shifted(const HomologyTable& t, int by) {
    HomologyTable out;
    out.coeff = t.coeff;
    for (const auto& [q, g] : t.groups) out.groups[q + by] = g;
    return out;
}

/**
 * Local homology at a face: H_*(S, cost_S sigma).  Both identifications are
 * computed (contrastar-relative and the link shifted by the face
 * cardinality) and must agree.
 */
inline HomologyTable local_homology(const SimplicialComplex& cx, const Face& sigma,
                                    const Coefficients& coeff) {
    require_present(cx, "local_homology");
    if (!cx.contains_face(sigma))
        throw std::invalid_argument("local_homology: face not in the complex");
    HomologyTable rel = homology(ComplexPair(cx, contrastar(cx, sigma)), coeff);
    HomologyTable via_link =
        shifted(homology(link(cx, sigma), coeff), (int)sigma.size());
    if (!(rel == via_link))
        throw std::logic_error("local homology: contrastar and link routes disagree");
    return rel;
}

/** Link route only; used by classifiers that sweep every face. */
inline HomologyTable local_homology_via_link(const SimplicialComplex& cx, const Face& sigma,
                                             const Coefficients& coeff) {
    return shifted(homology(link(cx, sigma), coeff), (int)sigma.size());
}

/**
 * Injectivity of H_n(total, small) -> H_n(total, big) for top degree n =
 * dim(total), where small and big are subcomplexes with small inside big.
 * In top degree both groups are kernels of the relative boundary, so the
 * induced map is the basis projection restricted to the kernel.
 */
inline bool top_degree_map_injective(const SimplicialComplex& total,
                                     const SimplicialComplex& small,
                                     const SimplicialComplex& big,
                                     const Coefficients& coeff) {
    int n = total.dim().finite();
    ChainComplex small_cc = build_chain(ComplexPair(total, small));
    const Matrix& d_small = small_cc.boundary_of(n);
    const std::vector<Mask>& bas_small = small_cc.basis[n + 1];

    // columns of the projection keep only faces outside `big`
    std::vector<int> keep;
    for (int i = 0; i < (int)bas_small.size(); ++i)
        if (big.is_void() || !big.contains_face(total.face_of(bas_small[i])))
            keep.push_back(i);

    if (coeff.kind == Coefficients::Kind::prime_field) {
        auto kernel = kernel_basis_mod_p(d_small, coeff.p);
        if (kernel.empty()) return true;
        Matrix proj((int)keep.size(), (int)kernel.size());
        for (int c = 0; c < (int)kernel.size(); ++c)
            for (int r = 0; r < (int)keep.size(); ++r)
                proj.at(r, c) = Integer((long long)kernel[c][keep[r]]);
        return rank_mod_p(proj, coeff.p) == (int)kernel.size();
    }
    Matrix kernel = kernel_basis_int(d_small);
    if (kernel.cols == 0) return true;
    Matrix proj((int)keep.size(), kernel.cols);
    for (int c = 0; c < kernel.cols; ++c)
        for (int r = 0; r < (int)keep.size(); ++r) proj.at(r, c) = kernel.at(keep[r], c);
    return rank_over_q(proj) == kernel.cols;
}

/** Rendered lines `H_i = <group>`, ascending from -1; zeros suppressed. */
inline std::string render_table(const HomologyTable& t, bool verbose = false,
                                int low = -1, int high = -2) {
    std::string out;
    if (verbose) {
        if (high < low) {
            low = t.groups.empty() ? -1 : std::min(-1, t.min_degree());
            high = t.groups.empty() ? -1 : t.max_degree();
        }
        for (int q = low; q <= high; ++q)
            out += "H_" + std::to_string(q) + " = " + render_group(t.at(q), t.coeff) + "\n";
    } else {
        for (const auto& [q, g] : t.groups)
            out += "H_" + std::to_string(q) + " = " + render_group(g, t.coeff) + "\n";
    }
    return out;
}

}  // namespace augmental

#endif
