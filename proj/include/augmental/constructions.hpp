#ifndef AUGMENTAL_CONSTRUCTIONS_HPP
#define AUGMENTAL_CONSTRUCTIONS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "augmental/complex.hpp"

namespace augmental {

/** A complex together with a declared total order on its vertex set. */
struct OrderedComplex {
    SimplicialComplex complex;
    std::vector<std::string> order;  // covers exactly the vertex set

    OrderedComplex() = default;
    OrderedComplex(SimplicialComplex c, std::vector<std::string> ord)
        : complex(std::move(c)), order(std::move(ord)) {
        validate();
    }

    /** Default order: the sorted label table. */
    static OrderedComplex by_label_order(SimplicialComplex c) {
        std::vector<std::string> ord = c.labels();
        return OrderedComplex(std::move(c), std::move(ord));
    }

    int rank_of(const std::string& v) const {
        for (int i = 0; i < (int)order.size(); ++i)
            if (order[i] == v) return i;
        throw std::invalid_argument("vertex not in order: " + v);
    }

private:
    void validate() const {
        std::vector<std::string> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (complex.is_void()) {
            if (!order.empty()) throw std::invalid_argument("order on the void complex");
            return;
        }
        if (sorted != complex.labels())
            throw std::invalid_argument("order must cover exactly the vertex set");
    }
};

namespace detail {

inline bool labels_disjoint(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const std::string& v : a.labels())
        if (std::binary_search(b.labels().begin(), b.labels().end(), v)) return false;
    return true;
}

inline SimplicialComplex prefix_labels(const SimplicialComplex& c, const std::string& pre) {
    if (c.is_void()) return c;
    std::vector<Face> facets;
    for (const Face& f : c.facets()) {
        Face g;
        for (const std::string& v : f) g.push_back(pre + v);
        facets.push_back(std::move(g));
    }
    if (facets.empty()) facets.push_back({});
    return SimplicialComplex::from_facets(facets);
}

}  // namespace detail

/**
 * Join: all unions of faces from disjoint factors.  Void absorbs, the
 * complex {emptyface} is the unit.  Shared labels are made disjoint by
 * prefixing "L:" / "R:".
 */
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
    SimplicialComplex left = a, right = b;
    if (!detail::labels_disjoint(left, right)) {
        left = detail::prefix_labels(left, "L:");
        right = detail::prefix_labels(right, "R:");
    }
    if ((std::size_t)left.vertex_count() + right.vertex_count() > kMaxVertices)
        throw std::invalid_argument("join exceeds the vertex budget of 64");

    std::vector<std::string> labels = detail::merged_labels(left, right);
    auto fa = detail::remap_faces(left, labels);
    auto fb = detail::remap_faces(right, labels);
    std::vector<Mask> faces;
    faces.reserve(fa.size() * fb.size());
    for (Mask x : fa)
        for (Mask y : fb) faces.push_back(x | y);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return SimplicialComplex::from_face_set(labels, std::move(faces));
}

namespace detail {

inline std::string fresh_label(const SimplicialComplex& c, const std::string& stem) {
    for (int k = 0;; ++k) {
        std::string cand = stem + std::to_string(k);
        if (c.is_void() ||
            !std::binary_search(c.labels().begin(), c.labels().end(), cand))
            return cand;
    }
}

}  // namespace detail

inline SimplicialComplex point_complex(const std::string& label) {
    return SimplicialComplex::from_facets({{label}});
}

inline SimplicialComplex cone(const SimplicialComplex& c) {
    require_present(c, "cone");
    return join(c, point_complex(detail::fresh_label(c, "cp")));
}

inline SimplicialComplex suspension(const SimplicialComplex& c) {
    require_present(c, "suspension");
    std::string a, b;
    for (int k = 0;; ++k) {
        a = "sp" + std::to_string(k) + "a";
        b = "sp" + std::to_string(k) + "b";
        bool taken =
            !c.is_void() &&
            (std::binary_search(c.labels().begin(), c.labels().end(), a) ||
             std::binary_search(c.labels().begin(), c.labels().end(), b));
        if (!taken) break;
    }
    return join(c, SimplicialComplex::from_facets({{a}, {b}}));
}

// ---------------------------------------------------------------------------
// Ordered simplicial cartesian product
// ---------------------------------------------------------------------------

inline std::string product_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

/**
 * The ordered simplicial cartesian product.  Vertices are all pairs; faces
 * are the vertex-distinct chains monotone in both coordinates whose
 * coordinate projections (repetitions allowed) are faces of the factors.
 * A void factor gives Void; an {emptyface} factor gives {emptyface}.
 * The product order is componentwise-lexicographic.
 */
inline OrderedComplex product(const OrderedComplex& A, const OrderedComplex& B) {
    if (A.complex.is_void() || B.complex.is_void())
        return OrderedComplex(SimplicialComplex::void_complex(), {});
    if (A.complex.is_empty_face_only() || B.complex.is_empty_face_only())
        return OrderedComplex(SimplicialComplex::empty_face_complex(), {});

    const SimplicialComplex& X = A.complex;
    const SimplicialComplex& Y = B.complex;
    int nx = X.vertex_count(), ny = Y.vertex_count();
    if ((std::size_t)nx * ny > kMaxVertices)
        throw std::invalid_argument("product exceeds the vertex budget of 64");

    // grid points in (rank1, rank2)-lexicographic order
    struct Cell {
        int r1, r2;        // ranks in the factor orders
        int b1, b2;        // label-table bit positions in the factors
        std::string name;
    };
    std::vector<Cell> grid;
    std::vector<int> bit_of_rank_x(nx), bit_of_rank_y(ny);
    for (int i = 0; i < nx; ++i) {
        auto it = std::lower_bound(X.labels().begin(), X.labels().end(), A.order[i]);
        bit_of_rank_x[i] = (int)(it - X.labels().begin());
    }
    for (int j = 0; j < ny; ++j) {
        auto it = std::lower_bound(Y.labels().begin(), Y.labels().end(), B.order[j]);
        bit_of_rank_y[j] = (int)(it - Y.labels().begin());
    }
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            grid.push_back({i, j, bit_of_rank_x[i], bit_of_rank_y[j],
                            product_label(A.order[i], B.order[j])});

    std::vector<std::string> labels;
    for (const Cell& c : grid) labels.push_back(c.name);
    std::vector<std::string> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    std::vector<int> bit(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g)
        bit[g] = (int)(std::lower_bound(sorted_labels.begin(), sorted_labels.end(),
                                        labels[g]) -
                       sorted_labels.begin());

    // depth-first chain extension with projection pruning
    std::vector<Mask> faces = {0};
    struct Frame {
        std::size_t last;
        Mask face, px, py;
    };
    std::vector<Frame> stack;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        Mask px = Mask(1) << grid[g].b1, py = Mask(1) << grid[g].b2;
        if (!X.contains_mask(px) || !Y.contains_mask(py)) continue;
        stack.push_back({g, Mask(1) << bit[g], px, py});
    }
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        faces.push_back(f.face);
        const Cell& last = grid[f.last];
        for (std::size_t g = f.last + 1; g < grid.size(); ++g) {
            const Cell& c = grid[g];
            if (c.r1 < last.r1 || c.r2 < last.r2) continue;  // not above in product order
            Mask px = f.px | (Mask(1) << c.b1);
            Mask py = f.py | (Mask(1) << c.b2);
            if (!X.contains_mask(px) || !Y.contains_mask(py)) continue;
            stack.push_back({g, f.face | (Mask(1) << bit[g]), px, py});
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex prod = SimplicialComplex::from_face_set(sorted_labels, std::move(faces));
    return OrderedComplex(std::move(prod), std::move(labels));
}

/** Coordinate projections of a product face (repetitions collapse). */
struct ProductProjection {
    Face first, second;
};

inline ProductProjection project_product_face(const Face& f) {
    std::set<std::string> s1, s2;
    for (const std::string& v : f) {
        if (v.size() < 3 || v.front() != '(' || v.back() != ')')
            throw std::invalid_argument("not a product vertex label: " + v);
        // split at the comma that balances parentheses
        int depth = 0;
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            if (v[i] == '(') ++depth;
            else if (v[i] == ')') --depth;
            else if (v[i] == ',' && depth == 0) {
                split = i;
                break;
            }
        }
        if (split == std::string::npos)
            throw std::invalid_argument("not a product vertex label: " + v);
        s1.insert(v.substr(1, split - 1));
        s2.insert(v.substr(split + 1, v.size() - split - 2));
    }
    return {Face(s1.begin(), s1.end()), Face(s2.begin(), s2.end())};
}

// ---------------------------------------------------------------------------
// Pair versions
// ---------------------------------------------------------------------------

/** (X1,X2) * (Y1,Y2) = (X1*Y1, (X1*Y2) u (X2*Y1)). */
inline ComplexPair pair_join(const ComplexPair& x, const ComplexPair& y) {
    SimplicialComplex xt = x.total, xs = x.sub, yt = y.total, ys = y.sub;
    // disjointness is decided once for the whole pair, so all three joins
    // land in the same labeling
    if (!detail::labels_disjoint(xt, yt)) {
        xt = detail::prefix_labels(xt, "L:");
        xs = detail::prefix_labels(xs, "L:");
        yt = detail::prefix_labels(yt, "R:");
        ys = detail::prefix_labels(ys, "R:");
    }
    SimplicialComplex total = join(xt, yt);
    SimplicialComplex s1 = join(xt, ys);
    SimplicialComplex s2 = join(xs, yt);
    return ComplexPair(std::move(total), complex_union(s1, s2));
}

/** (X1,X2) x (Y1,Y2) = (X1 x Y1, (X1 x Y2) u (X2 x Y1)), inside the grid. */
inline ComplexPair pair_product(const OrderedComplex& x, const SimplicialComplex& xsub,
                                const OrderedComplex& y, const SimplicialComplex& ysub) {
    OrderedComplex total = product(x, y);
    if (total.complex.is_void())
        return ComplexPair(total.complex, SimplicialComplex::void_complex());
    std::vector<Mask> subfaces;
    for (Mask m : total.complex.face_masks()) {
        ProductProjection pr = project_product_face(total.complex.face_of(m));
        bool in1 = !ysub.is_void() && x.complex.contains_face(pr.first) &&
                   ysub.contains_face(pr.second);
        bool in2 = !xsub.is_void() && xsub.contains_face(pr.first) &&
                   y.complex.contains_face(pr.second);
        if (in1 || in2) subfaces.push_back(m);
    }
    SimplicialComplex sub =
        subfaces.empty()
            ? SimplicialComplex::void_complex()
            : SimplicialComplex::from_face_set(total.complex.labels(), std::move(subfaces));
    return ComplexPair(total.complex, std::move(sub));
}

// ---------------------------------------------------------------------------
// Barycentric subdivision and the double
// ---------------------------------------------------------------------------

namespace detail {

inline std::string chain_label(const Face& f) {
    std::string out;
    for (const std::string& v : f) {
        if (!out.empty()) out += ".";
        out += v;
    }
    return out;
}

}  // namespace detail

/**
 * One round of barycentric subdivision: vertices are the nonempty faces,
 * facets are the maximal flags.
 */
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
    require_present(c, "barycentric_subdivision");
    if (c.is_empty_face_only()) return c;
    std::vector<Mask> nonempty;
    for (Mask f : c.face_masks())
        if (f) nonempty.push_back(f);
    if (nonempty.size() > kMaxVertices)
        throw std::invalid_argument("subdivision exceeds the vertex budget of 64");
    // flags are built downward from each facet
    std::vector<Face> facets;
    std::vector<Mask> flag;
    auto emit = [&]() {
        Face f;
        for (Mask m : flag) f.push_back(detail::chain_label(c.face_of(m)));
        facets.push_back(std::move(f));
    };
    std::function<void(Mask)> descend = [&](Mask m) {
        flag.push_back(m);
        if (face_card(m) == 1) {
            emit();
        } else {
            for (int v = 0; v < c.vertex_count(); ++v)
                if ((m >> v) & 1) descend(m & ~(Mask(1) << v));
        }
        flag.pop_back();
    };
    for (Mask f : c.facet_masks())
        if (f) descend(f);
    return SimplicialComplex::from_facets(facets);
}

/** The subdivision of a subcomplex, in the labels of barycentric_subdivision. */
inline SimplicialComplex barycentric_subdivision_of_sub(const SimplicialComplex& c,
                                                        const SimplicialComplex& sub) {
    if (sub.is_void()) return sub;
    if (sub.is_empty_face_only()) return sub;
    SimplicialComplex sd = barycentric_subdivision(sub);
    // relabel: vertex labels of sd(sub) are chains over sub's own labels,
    // which coincide with chain labels over c's labels for shared faces
    (void)c;
    return sd;
}

/**
 * The double: two copies glued by identifying the boundary vertices.  When
 * naive identification would merge interior faces (some non-boundary face
 * has all its vertices on the boundary) both copies are barycentrically
 * subdivided first, which makes the identification simplicial.
 */
inline SimplicialComplex double_complex(const SimplicialComplex& c,
                                        const SimplicialComplex& boundary) {
    require_present(c, "double");
    if (!c.has_subcomplex(boundary))
        throw std::invalid_argument("double: boundary is not a subcomplex");

    SimplicialComplex base = c;
    SimplicialComplex bd = boundary;
    auto needs_subdivision = [&]() {
        if (bd.is_void()) return false;
        Mask bverts = 0;
        for (const std::string& v : bd.labels()) {
            auto m = base.mask_of(Face{v});
            bverts |= *m;
        }
        for (Mask f : base.face_masks()) {
            if (f == 0 || (f & ~bverts)) continue;
            if (!bd.contains_face(base.face_of(f))) return true;
        }
        return false;
    };
    if (needs_subdivision()) {
        bd = barycentric_subdivision_of_sub(base, bd);
        base = barycentric_subdivision(base);
        if (needs_subdivision())
            throw std::logic_error("double: one subdivision round did not separate");
    }

    std::set<std::string> shared(bd.is_void() ? std::set<std::string>{}
                                              : std::set<std::string>(bd.labels().begin(),
                                                                      bd.labels().end()));
    std::string pre = "m:";
    while (true) {
        bool clash = false;
        for (const std::string& v : base.labels())
            if (v.rfind(pre, 0) == 0) clash = true;
        if (!clash) break;
        pre = "m" + pre;
    }
    std::vector<Face> facets = base.facets();
    for (const Face& f : base.facets()) {
        Face g;
        for (const std::string& v : f) g.push_back(shared.count(v) ? v : pre + v);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace augmental

#endif
