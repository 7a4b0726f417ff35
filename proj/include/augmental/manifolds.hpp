#ifndef AUGMENTAL_MANIFOLDS_HPP
#define AUGMENTAL_MANIFOLDS_HPP

#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "augmental/chain.hpp"
#include "augmental/complex.hpp"
#include "augmental/constructions.hpp"
#include "augmental/generators.hpp"

namespace augmental {

namespace detail {

/** The coefficient group as an FgAbelianGroup descriptor (Z, Z_p, or Q). */
inline FgAbelianGroup coefficient_unit(const Coefficients&) { return free_group(1); }

inline bool is_two_points(const SimplicialComplex& c) {
    return c.is_present() && c.vertex_count() == 2 && c.dim() == ExtDim::of(0) &&
           c.facet_masks().size() == 2;
}

/** Count of facets containing each (n-1)-face; the ridge condition. */
inline bool ridge_condition(const SimplicialComplex& c) {
    int n = c.dim().finite();
    std::map<Mask, int> count;
    for (Mask f : c.face_masks())
        if (face_dim(f) == n - 1) count[f] = 0;
    for (Mask top : c.face_masks()) {
        if (face_dim(top) != n) continue;
        for (int v = 0; v < c.vertex_count(); ++v)
            if ((top >> v) & 1) {
                auto it = count.find(top & ~(Mask(1) << v));
                if (it != count.end()) ++it->second;
            }
    }
    // dimension -1 ridge: the empty face, contained in every facet
    if (n == 0 && c.facet_masks().size() > 2) return false;
    for (auto& [f, k] : count)
        if (k > 2) return false;
    return true;
}

inline bool link_connected(const SimplicialComplex& lk) {
    if (lk.is_void() || lk.vertex_count() == 0) return false;
    UnionFind uf(lk.vertex_count());
    for (Mask f : lk.face_masks())
        if (face_card(f) == 2) {
            int a = std::countr_zero(f);
            int b = 63 - std::countl_zero(f);
            uf.unite(a, b);
        }
    int root = uf.find(0);
    for (int v = 1; v < lk.vertex_count(); ++v)
        if (uf.find(v) != root) return false;
    return true;
}

}  // namespace detail

/** Pure + every ridge in at most two facets + strongly connected. */
inline bool is_pseudomanifold(const SimplicialComplex& c) {
    if (c.is_void()) return true;  // the -infinity-dimensional manifold
    if (!is_pure(c)) return false;
    if (!detail::ridge_condition(c)) return false;
    return is_strongly_connected(c);
}

/**
 * Quasi-manifold: the two-point complex, or a pure complex whose ridges lie
 * in at most two facets and whose small-codimension links are connected
 * (the empty face included, so the complex itself is connected when n >= 1).
 */
inline bool is_quasi_manifold(const SimplicialComplex& c) {
    if (c.is_void()) return true;
    if (detail::is_two_points(c)) return true;
    if (!is_pure(c)) return false;
    if (!detail::ridge_condition(c)) return false;
    int n = c.dim().finite();
    for (Mask f : c.face_masks()) {
        if (face_dim(f) >= n - 1) continue;
        if (!detail::link_connected(link(c, c.face_of(f)))) return false;
    }
    return true;
}

/**
 * Homology manifold over the given coefficients: the two-point complex, or a
 * connected complex all of whose nonempty faces have sphere-or-disk local
 * homology (zero away from the top degree, zero or the coefficient group in
 * the top degree, the group itself achieved somewhere).
 */
inline bool is_homology_manifold(const SimplicialComplex& c, const Coefficients& coeff) {
    if (c.is_void()) return true;
    if (detail::is_two_points(c)) return true;
    int n = c.dim().finite();
    if (!homology(c, coeff).at(0).is_zero()) return false;  // connectivity
    FgAbelianGroup unit = detail::coefficient_unit(coeff);
    bool attained = c.is_empty_face_only();  // the (-1)-sphere is exempt
    for (Mask f : c.face_masks()) {
        if (f == 0) continue;
        HomologyTable local = local_homology_via_link(c, c.face_of(f), coeff);
        for (const auto& [q, g] : local.groups) {
            if (q != n) return false;
            if (!(g == unit)) return false;
        }
        if (local.at(n) == unit) attained = true;
    }
    return attained;
}

/** The ridge boundary of a pseudomanifold: closure of the ridges lying in
 *  exactly one facet (Void when there are none). */
inline SimplicialComplex pseudo_boundary(const SimplicialComplex& c) {
    require_present(c, "pseudo_boundary");
    int n = c.dim().finite();
    std::map<Mask, int> count;
    for (Mask f : c.face_masks())
        if (face_dim(f) == n - 1) count[f] = 0;
    for (Mask top : c.face_masks()) {
        if (face_dim(top) != n) continue;
        for (int v = 0; v < c.vertex_count(); ++v)
            if ((top >> v) & 1) {
                auto it = count.find(top & ~(Mask(1) << v));
                if (it != count.end()) ++it->second;
            }
    }
    if (n == 0) {
        // the ridge is the empty face, lying in every 0-facet
        if (c.facet_masks().size() == 1) return SimplicialComplex::empty_face_complex();
        return SimplicialComplex::void_complex();
    }
    std::vector<Mask> gens;
    for (auto& [f, k] : count)
        if (k == 1) gens.push_back(f);
    if (gens.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_generating_masks(c.labels(), gens);
}

inline void require_manifold(const SimplicialComplex& c, const Coefficients& coeff,
                             const char* op) {
    if (!(is_quasi_manifold(c) || is_homology_manifold(c, coeff)))
        throw std::invalid_argument(std::string(op) + ": complex is not a manifold");
}

/**
 * The homological boundary Bd_G: faces whose link has vanishing reduced
 * homology in its top dimension.  May be Void, {emptyface}, or a subcomplex.
 */
inline SimplicialComplex boundary(const SimplicialComplex& c, const Coefficients& coeff) {
    require_present(c, "boundary");
    require_manifold(c, coeff, "boundary");
    int n = c.dim().finite();
    std::vector<Mask> in_bd;
    for (Mask f : c.face_masks()) {
        HomologyTable local = local_homology_via_link(c, c.face_of(f), coeff);
        if (local.at(n).is_zero()) in_bd.push_back(f);
    }
    if (in_bd.empty()) return SimplicialComplex::void_complex();
    try {
        return SimplicialComplex::from_face_set(c.labels(), std::move(in_bd));
    } catch (const std::invalid_argument&) {
        throw std::logic_error("boundary face set is not a subcomplex");
    }
}

/** Strongly connected components of the boundary complex. */
inline std::vector<SimplicialComplex> boundary_components(const SimplicialComplex& c,
                                                          const Coefficients& coeff) {
    SimplicialComplex bd = boundary(c, coeff);
    if (bd.is_void() || bd.is_empty_face_only()) return {};
    return strong_components(bd);
}

/** H_n(S, Bd_G S; G) isomorphic to the coefficient group. */
inline bool orientable(const SimplicialComplex& c, const Coefficients& coeff) {
    require_present(c, "orientable");
    SimplicialComplex bd = boundary(c, coeff);  // gates on manifoldness
    int n = c.dim().finite();
    HomologyTable rel = homology(ComplexPair(c, bd), coeff);
    bool result = rel.at(n) == detail::coefficient_unit(coeff);
    if (coeff.kind == Coefficients::Kind::prime_field && coeff.p == 2 && !result)
        throw std::logic_error("orientability over Z_2 must hold for manifolds");
    return result;
}

/** Faces whose local homology vanishes in every degree. */
inline std::vector<Face> hip_set(const SimplicialComplex& c, const Coefficients& coeff) {
    require_present(c, "hip_set");
    std::vector<Face> out;
    for (Mask f : c.face_masks())
        if (local_homology_via_link(c, c.face_of(f), coeff).is_zero())
            out.push_back(c.face_of(f));
    return out;
}

// ---------------------------------------------------------------------------
// Theorem verifiers
// ---------------------------------------------------------------------------

enum class ConstructOp { join_op, product_op };

/**
 * Boundary formula Bd(S1 v S2) = (Bd S1 v S2) u (S1 v Bd S2) as an exact
 * face-set identity; nullopt when the factor pair is outside the theorem's
 * reading (non-manifold factors; for products Void, {emptyface} or the
 * two-point complex).
 */
inline std::optional<bool> verify_boundary_formula(const SimplicialComplex& s1,
                                                   const SimplicialComplex& s2,
                                                   ConstructOp op,
                                                   const Coefficients& coeff) {
    auto is_ok_manifold = [&](const SimplicialComplex& s) {
        return s.is_present() && (is_quasi_manifold(s) || is_homology_manifold(s, coeff));
    };
    if (!is_ok_manifold(s1) || !is_ok_manifold(s2)) return std::nullopt;

    if (op == ConstructOp::join_op) {
        SimplicialComplex a = s1, b = s2;
        if (!detail::labels_disjoint(a, b)) {
            a = detail::prefix_labels(a, "L:");
            b = detail::prefix_labels(b, "R:");
        }
        SimplicialComplex j = join(a, b);
        SimplicialComplex bd_a = boundary(a, coeff);
        SimplicialComplex bd_b = boundary(b, coeff);
        SimplicialComplex lhs = boundary(j, coeff);
        SimplicialComplex rhs = complex_union(
            join(bd_a, b), join(a, bd_b));
        return lhs == rhs;
    }

    // products: the theorem excludes Void, {emptyface} and the two-point complex
    if (s1.is_empty_face_only() || s2.is_empty_face_only()) return std::nullopt;
    if (detail::is_two_points(s1) || detail::is_two_points(s2)) return std::nullopt;
    OrderedComplex A = OrderedComplex::by_label_order(s1);
    OrderedComplex B = OrderedComplex::by_label_order(s2);
    OrderedComplex P = product(A, B);
    SimplicialComplex lhs = boundary(P.complex, coeff);
    auto in_faceset = [](const SimplicialComplex& sc, const Face& f) {
        return sc.is_present() && sc.contains_face(f);
    };
    std::vector<Mask> rhs_faces;
    bool point_left = s1.vertex_count() == 1 && s1.dim() == ExtDim::of(0);
    bool point_right = s2.vertex_count() == 1 && s2.dim() == ExtDim::of(0);
    SimplicialComplex bd1 = boundary(s1, coeff);
    SimplicialComplex bd2 = boundary(s2, coeff);
    for (Mask m : P.complex.face_masks()) {
        ProductProjection pr = project_product_face(P.complex.face_of(m));
        bool keep;
        if (point_left) keep = in_faceset(bd2, pr.second);
        else if (point_right) keep = in_faceset(bd1, pr.first);
        else keep = in_faceset(bd1, pr.first) || in_faceset(bd2, pr.second);
        if (keep) rhs_faces.push_back(m);
    }
    SimplicialComplex rhs =
        rhs_faces.empty() ? SimplicialComplex::void_complex()
                          : SimplicialComplex::from_face_set(P.complex.labels(),
                                                             std::move(rhs_faces));
    return lhs == rhs;
}

/**
 * Strong connectivity of the poset difference: the maximal faces of S \ D
 * chained through shared ridges that themselves avoid D.
 */
inline bool poset_strongly_connected(const SimplicialComplex& total,
                                     const SimplicialComplex& removed) {
    require_present(total, "poset_strongly_connected");
    std::vector<Mask> maximal;
    for (Mask f : total.facet_masks())
        if (removed.is_void() || !removed.contains_face(total.face_of(f)))
            maximal.push_back(f);
    if (maximal.size() <= 1) return true;
    detail::UnionFind uf(maximal.size());
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            int ci = face_card(maximal[i]);
            if (ci != face_card(maximal[j])) continue;
            Mask shared = maximal[i] & maximal[j];
            if (face_card(shared) != ci - 1) continue;
            if (!removed.is_void() && removed.contains_face(total.face_of(shared))) continue;
            uf.unite((int)i, (int)j);
        }
    int root = uf.find(0);
    for (std::size_t i = 1; i < maximal.size(); ++i)
        if (uf.find((int)i) != root) return false;
    return true;
}

/**
 * Equivalence of "S \ D strongly connected" with injectivity of
 * H_n(S,D) -> H_n(S,G); nullopt when the inputs violate the hypotheses.
 */
inline std::optional<bool> verify_strong_connect_injection(const SimplicialComplex& total,
                                                           const SimplicialComplex& small,
                                                           const SimplicialComplex& big,
                                                           const Coefficients& coeff) {
    if (total.is_void() || !is_pseudomanifold(total)) return std::nullopt;
    if (!total.has_subcomplex(big) || !big.has_subcomplex(small)) return std::nullopt;
    if (big == total || small == big) return std::nullopt;
    if (big.is_void() || big.dim() != total.dim()) return std::nullopt;
    bool connected = poset_strongly_connected(total, small);
    bool injective = top_degree_map_injective(total, small, big, coeff);
    return connected == injective;
}

// ---------------------------------------------------------------------------
// Classification report
// ---------------------------------------------------------------------------

struct ManifoldReport {
    Coefficients coeff;
    ExtDim dimension;
    bool pseudo = false;
    bool quasi = false;
    bool homology_manifold = false;
    bool ordinary = false;
    bool has_boundary = false;  // meaningful when some manifold flag holds
    SimplicialComplex boundary_complex;
    std::size_t boundary_component_count = 0;
    std::optional<bool> orientable_flag;
    std::vector<Face> hip;
};

inline ManifoldReport classify(const SimplicialComplex& c, const Coefficients& coeff) {
    ManifoldReport r;
    r.coeff = coeff;
    r.dimension = c.dim();
    if (c.is_void()) {
        r.pseudo = r.quasi = r.homology_manifold = true;
        r.ordinary = true;
        return r;
    }
    r.pseudo = is_pseudomanifold(c);
    r.quasi = is_quasi_manifold(c);
    r.homology_manifold = is_homology_manifold(c, coeff);
    int n = c.dim().finite();
    r.ordinary = true;
    for (Mask f : c.face_masks()) {
        if (f == 0) continue;
        if (!homology(contrastar(c, c.face_of(f)), coeff).at(n).is_zero()) {
            r.ordinary = false;
            break;
        }
    }
    r.hip = hip_set(c, coeff);
    if (r.quasi || r.homology_manifold) {
        r.boundary_complex = boundary(c, coeff);
        r.has_boundary = r.boundary_complex.is_present();
        if (r.boundary_complex.is_present() && !r.boundary_complex.is_empty_face_only())
            r.boundary_component_count = strong_components(r.boundary_complex).size();
        r.orientable_flag = orientable(c, coeff);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fuzz corpus of pseudomanifolds
// ---------------------------------------------------------------------------

/**
 * Seed manifolds closed under cone, suspension, join, one barycentric round,
 * and doubling along the ridge boundary; filtered back to pseudomanifolds.
 * Deterministic for a fixed seed.
 */
inline std::vector<SimplicialComplex> manifold_corpus(std::uint64_t seed, std::size_t count,
                                                      int vertex_cap = 26,
                                                      std::size_t face_cap = 700) {
    std::mt19937_64 rng(seed);
    std::vector<SimplicialComplex> pool = detail::corpus_seeds();
    std::vector<SimplicialComplex> out = pool;
    std::size_t guard = 0;
    while (out.size() < count && ++guard < count * 80) {
        const SimplicialComplex& base = out[rng() % out.size()];
        SimplicialComplex made;
        try {
            switch (rng() % 5) {
                case 0: made = cone(base); break;
                case 1: made = suspension(base); break;
                case 2: {
                    const SimplicialComplex& other = out[rng() % out.size()];
                    if (base.vertex_count() + other.vertex_count() > vertex_cap) continue;
                    made = join(base, other);
                    break;
                }
                case 3: {
                    if ((int)base.face_count() - 1 > vertex_cap) continue;
                    made = barycentric_subdivision(base);
                    break;
                }
                default: {
                    SimplicialComplex bd = pseudo_boundary(base);
                    if (bd.is_void() || bd.is_empty_face_only()) continue;
                    made = double_complex(base, bd);
                    break;
                }
            }
        } catch (const std::invalid_argument&) {
            continue;  // vertex budget exceeded
        }
        if (made.is_void() || made.vertex_count() > vertex_cap) continue;
        if (made.face_count() > face_cap) continue;
        if (!is_pseudomanifold(made)) continue;
        out.push_back(std::move(made));
    }
    return out;
}

}  // namespace augmental

#endif
