#ifndef AUGMENTAL_COMPLEX_HPP
#define AUGMENTAL_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace augmental {

/** A face is a canonically sorted, duplicate-free list of vertex labels. */
using Face = std::vector<std::string>;

/** Internal face representation: bitset over a complex's label table. */
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int face_card(Mask m) { return std::popcount(m); }
inline int face_dim(Mask m) { return std::popcount(m) - 1; }

/**
 * Extended dimension: an integer or the -infinity sentinel reserved for the
 * void complex.  -infinity absorbs under addition.
 */
struct ExtDim {
    bool neg_inf = true;
    int value = 0;

    static ExtDim minus_infinity() { return {}; }
    static ExtDim of(int v) { return {false, v}; }

    bool is_finite() const { return !neg_inf; }
    int finite() const {
        if (neg_inf) throw std::domain_error("dimension is -infinity");
        return value;
    }

    friend ExtDim operator+(ExtDim a, int b) {
        if (a.neg_inf) return a;
        return of(a.value + b);
    }
    friend ExtDim operator+(ExtDim a, ExtDim b) {
        if (a.neg_inf || b.neg_inf) return minus_infinity();
        return of(a.value + b.value);
    }
    friend bool operator==(ExtDim a, ExtDim b) {
        return a.neg_inf == b.neg_inf && (a.neg_inf || a.value == b.value);
    }
    friend bool operator!=(ExtDim a, ExtDim b) { return !(a == b); }
    friend bool operator<(ExtDim a, ExtDim b) {
        if (a.neg_inf) return !b.neg_inf;
        if (b.neg_inf) return false;
        return a.value < b.value;
    }
    friend bool operator<=(ExtDim a, ExtDim b) { return a < b || a == b; }

    std::string render() const { return neg_inf ? "-inf" : std::to_string(value); }
};

/**
 * A finite simplicial complex in which every non-void complex contains the
 * empty face.  The void complex (no faces at all) is a distinct variant and
 * is never confused with {emptyface}, whose face set is exactly {0}.
 *
 * Values are immutable after construction; every operation below is a pure
 * function returning fresh complexes.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the void complex

    static SimplicialComplex void_complex() { return SimplicialComplex(); }

    /** The complex {emptyface}: one face of dimension -1, no vertices. */
    static SimplicialComplex empty_face_complex() {
        SimplicialComplex c;
        c.void_ = false;
        c.faces_ = {0};
        c.facets_ = {0};
        return c;
    }

    /**
     * Downward closure of a facet list with the empty face adjoined.
     * [] gives Void; [[]] gives {emptyface}; non-maximal entries are absorbed.
     */
    static SimplicialComplex from_facets(const std::vector<Face>& facets) {
        if (facets.empty()) return void_complex();
        std::set<std::string> labelset;
        for (const Face& f : facets) {
            std::set<std::string> inside;
            for (const std::string& v : f) {
                if (!inside.insert(v).second)
                    throw std::invalid_argument("malformed face: duplicate vertex '" + v + "'");
            }
            labelset.insert(f.begin(), f.end());
        }
        std::vector<std::string> labels(labelset.begin(), labelset.end());
        if (labels.size() > kMaxVertices)
            throw std::invalid_argument("complex exceeds the vertex budget of 64");
        std::vector<Mask> masks;
        for (const Face& f : facets) {
            Mask m = 0;
            for (const std::string& v : f) {
                std::size_t idx = std::lower_bound(labels.begin(), labels.end(), v) - labels.begin();
                m |= Mask(1) << idx;
            }
            masks.push_back(m);
        }
        return from_generating_masks(std::move(labels), masks);
    }

    /** Build from an arbitrary generating set of masks over a label table. */
    static SimplicialComplex from_generating_masks(std::vector<std::string> labels,
                                                   const std::vector<Mask>& gens) {
        if (gens.empty()) return void_complex();
        std::set<Mask> faceset;
        for (Mask g : gens) {
            // enumerate all submasks of g, including 0
            Mask s = g;
            while (true) {
                faceset.insert(s);
                if (s == 0) break;
                s = (s - 1) & g;
            }
        }
        SimplicialComplex c;
        c.void_ = false;
        c.faces_.assign(faceset.begin(), faceset.end());
        c.strip_unused_labels(std::move(labels));
        c.compute_facets();
        return c;
    }

    /** Build from a complete, downward-closed face set (validated). */
    static SimplicialComplex from_face_set(std::vector<std::string> labels,
                                           std::vector<Mask> faces) {
        if (faces.empty()) return void_complex();
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        SimplicialComplex c;
        c.void_ = false;
        c.faces_ = std::move(faces);
        for (Mask f : c.faces_)
            for (int i = 0; i < (int)labels.size(); ++i)
                if ((f >> i) & 1) {
                    Mask sub = f & ~(Mask(1) << i);
                    if (!c.contains_mask(sub))
                        throw std::invalid_argument("face set is not downward closed");
                }
        if (!c.contains_mask(0))
            throw std::invalid_argument("present complex must contain the empty face");
        c.strip_unused_labels(std::move(labels));
        c.compute_facets();
        return c;
    }

    bool is_void() const { return void_; }
    bool is_present() const { return !void_; }
    bool is_empty_face_only() const { return !void_ && faces_.size() == 1; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Mask>& face_masks() const { return faces_; }
    const std::vector<Mask>& facet_masks() const { return facets_; }
    std::size_t face_count() const { return faces_.size(); }
    int vertex_count() const { return (int)labels_.size(); }

    bool contains_mask(Mask m) const {
        return !void_ && std::binary_search(faces_.begin(), faces_.end(), m);
    }

    /** Mask of a labeled face; nullopt when some label is foreign. */
    std::optional<Mask> mask_of(const Face& f) const {
        Mask m = 0;
        for (const std::string& v : f) {
            auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
            if (it == labels_.end() || *it != v) return std::nullopt;
            m |= Mask(1) << (it - labels_.begin());
        }
        return m;
    }

    bool contains_face(const Face& f) const {
        auto m = mask_of(f);
        return m && contains_mask(*m);
    }

    Face face_of(Mask m) const {
        Face f;
        for (int i = 0; i < (int)labels_.size(); ++i)
            if ((m >> i) & 1) f.push_back(labels_[i]);
        return f;
    }

    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (Mask m : facets_) out.push_back(face_of(m));
        return out;
    }

    std::vector<Face> all_faces() const {
        std::vector<Face> out;
        for (Mask m : faces_) out.push_back(face_of(m));
        return out;
    }

    ExtDim dim() const {
        if (void_) return ExtDim::minus_infinity();
        int d = -1;
        for (Mask m : facets_) d = std::max(d, face_dim(m));
        return ExtDim::of(d);
    }

    /** Is `other` a subcomplex (Void counts)? */
    bool has_subcomplex(const SimplicialComplex& other) const {
        if (other.void_) return true;
        if (void_) return false;
        for (Mask m : other.faces_)
            if (!contains_face(other.face_of(m))) return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        if (a.void_ != b.void_) return false;
        if (a.void_) return true;
        return a.labels_ == b.labels_ && a.faces_ == b.faces_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

private:
    bool void_ = true;
    std::vector<std::string> labels_;  // sorted; bit i of a mask = labels_[i]
    std::vector<Mask> faces_;          // sorted ascending; contains 0 when present
    std::vector<Mask> facets_;

    void compute_facets() {
        facets_.clear();
        for (Mask f : faces_) {
            bool maximal = true;
            for (Mask g : faces_)
                if (g != f && (g & f) == f) {
                    maximal = false;
                    break;
                }
            if (maximal) facets_.push_back(f);
        }
    }

    // keep only labels that occur in a face, remapping bits
    void strip_unused_labels(std::vector<std::string> labels) {
        Mask used = 0;
        for (Mask f : faces_) used |= f;
        std::vector<int> newbit(labels.size(), -1);
        std::vector<std::string> kept;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if ((used >> i) & 1) {
                newbit[i] = (int)kept.size();
                kept.push_back(labels[i]);
            }
        if (kept.size() == labels.size()) {
            labels_ = std::move(labels);
            std::sort(faces_.begin(), faces_.end());
            return;
        }
        std::vector<Mask> remapped;
        remapped.reserve(faces_.size());
        for (Mask f : faces_) {
            Mask m = 0;
            for (std::size_t i = 0; i < labels.size(); ++i)
                if ((f >> i) & 1) m |= Mask(1) << newbit[i];
            remapped.push_back(m);
        }
        std::sort(remapped.begin(), remapped.end());
        faces_ = std::move(remapped);
        labels_ = std::move(kept);
    }
};

/** A pair (total, sub) with sub Void or a subcomplex of total. */
struct ComplexPair {
    SimplicialComplex total;
    SimplicialComplex sub;

    ComplexPair() = default;
    ComplexPair(SimplicialComplex t, SimplicialComplex s)
        : total(std::move(t)), sub(std::move(s)) {
        if (!total.has_subcomplex(sub))
            throw std::invalid_argument("pair: sub is not a subcomplex of total");
    }

    static ComplexPair absolute(SimplicialComplex t) {
        return ComplexPair(std::move(t), SimplicialComplex::void_complex());
    }
};

// ---------------------------------------------------------------------------
// Simplicial calculus
// ---------------------------------------------------------------------------

inline void require_present(const SimplicialComplex& c, const char* op) {
    if (c.is_void()) throw std::invalid_argument(std::string(op) + ": void complex");
}

inline ExtDim dim(const SimplicialComplex& c) { return c.dim(); }

/** Lk_S(s) = { t in S | s and t disjoint, s u t in S }.  Lk_S(empty) = S. */
inline SimplicialComplex link(const SimplicialComplex& c, const Face& sigma) {
    require_present(c, "link");
    auto m = c.mask_of(sigma);
    if (!m || !c.contains_mask(*m)) return SimplicialComplex::void_complex();
    std::vector<Mask> keep;
    for (Mask t : c.face_masks())
        if ((t & *m) == 0 && c.contains_mask(t | *m)) keep.push_back(t);
    return SimplicialComplex::from_face_set(c.labels(), std::move(keep));
}

/** Closed star: faces whose union with sigma is a face. */
inline SimplicialComplex closed_star(const SimplicialComplex& c, const Face& sigma) {
    require_present(c, "closed_star");
    auto m = c.mask_of(sigma);
    if (!m || !c.contains_mask(*m)) return SimplicialComplex::void_complex();
    std::vector<Mask> keep;
    for (Mask t : c.face_masks())
        if (c.contains_mask(t | *m)) keep.push_back(t);
    return SimplicialComplex::from_face_set(c.labels(), std::move(keep));
}

/** Contrastar: faces not containing sigma.  cost_S(empty) = Void. */
inline SimplicialComplex contrastar(const SimplicialComplex& c, const Face& sigma) {
    require_present(c, "contrastar");
    auto m = c.mask_of(sigma);
    if (!m) return c;  // a face with foreign labels is contained in nothing
    if (*m == 0) return SimplicialComplex::void_complex();
    std::vector<Mask> keep;
    for (Mask t : c.face_masks())
        if ((t & *m) != *m) keep.push_back(t);
    if (keep.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_face_set(c.labels(), std::move(keep));
}

/** Deletion of a vertex set: faces disjoint from T. */
inline SimplicialComplex deletion(const SimplicialComplex& c,
                                  const std::vector<std::string>& verts) {
    require_present(c, "deletion");
    Mask t = 0;
    for (const std::string& v : verts) {
        auto it = std::lower_bound(c.labels().begin(), c.labels().end(), v);
        if (it != c.labels().end() && *it == v) t |= Mask(1) << (it - c.labels().begin());
    }
    std::vector<Mask> keep;
    for (Mask f : c.face_masks())
        if ((f & t) == 0) keep.push_back(f);
    return SimplicialComplex::from_face_set(c.labels(), std::move(keep));
}

/** p-skeleton: faces with at most p+1 vertices. */
inline SimplicialComplex skeleton(const SimplicialComplex& c, int p) {
    require_present(c, "skeleton");
    if (p < -1) throw std::invalid_argument("skeleton: p must be >= -1");
    std::vector<Mask> keep;
    for (Mask f : c.face_masks())
        if (face_card(f) <= p + 1) keep.push_back(f);
    return SimplicialComplex::from_face_set(c.labels(), std::move(keep));
}

/** Vertices belonging to every facet. */
inline std::vector<std::string> cone_points(const SimplicialComplex& c) {
    require_present(c, "cone_points");
    Mask common = ~Mask(0);
    for (Mask f : c.facet_masks()) common &= f;
    if (c.facet_masks().empty()) common = 0;
    return c.face_of(common & ((c.vertex_count() == 64)
                                   ? ~Mask(0)
                                   : ((Mask(1) << c.vertex_count()) - 1)));
}

/** core(S) = faces containing no cone point; S = core(S) * closure(cone set). */
inline std::pair<std::vector<std::string>, SimplicialComplex> cone_points_and_core(
    const SimplicialComplex& c) {
    auto cp = cone_points(c);
    return {cp, deletion(c, cp)};
}

/**
 * Minimal non-faces over a universe W containing the vertex set.  For the
 * void complex the answer is the single "non-simplex" emptyface (so the face
 * ideal is the whole ring).
 */
inline std::vector<Face> minimal_non_faces(const SimplicialComplex& c,
                                           std::vector<std::string> universe) {
    if (c.is_void()) return {Face{}};
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    for (const std::string& v : c.labels())
        if (!std::binary_search(universe.begin(), universe.end(), v))
            throw std::invalid_argument("universe misses vertex '" + v + "'");
    std::set<Face> out;
    for (const std::string& w : universe)
        if (!std::binary_search(c.labels().begin(), c.labels().end(), w))
            out.insert(Face{w});
    // every minimal non-face inside V is (face u {v}) whose proper subsets are faces
    for (Mask f : c.face_masks())
        for (int v = 0; v < c.vertex_count(); ++v) {
            if ((f >> v) & 1) continue;
            Mask s = f | (Mask(1) << v);
            if (c.contains_mask(s)) continue;
            bool minimal = true;
            for (int u = 0; u < c.vertex_count() && minimal; ++u)
                if ((s >> u) & 1) {
                    if (!c.contains_mask(s & ~(Mask(1) << u))) minimal = false;
                }
            if (minimal) out.insert(c.face_of(s));
        }
    return {out.begin(), out.end()};
}

inline std::vector<Face> minimal_non_faces(const SimplicialComplex& c) {
    return minimal_non_faces(c, c.labels());
}

/** All facets of the same dimension; {emptyface} is pure. */
inline bool is_pure(const SimplicialComplex& c) {
    require_present(c, "is_pure");
    int d = -2;
    for (Mask f : c.facet_masks()) {
        if (d == -2) d = face_card(f);
        else if (face_card(f) != d) return false;
    }
    return true;
}

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = (int)i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace detail

/**
 * Maximal strongly connected components: facets chained through
 * intersections of cardinality (chain maximum) - 1.  Chains can never mix
 * facet cardinalities, so the relation reduces to same-size facets sharing
 * all but one vertex.
 */
inline std::vector<SimplicialComplex> strong_components(const SimplicialComplex& c) {
    require_present(c, "strong_components");
    const auto& fs = c.facet_masks();
    detail::UnionFind uf(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            int ci = face_card(fs[i]), cj = face_card(fs[j]);
            if (ci == cj && face_card(fs[i] & fs[j]) == ci - 1) uf.unite((int)i, (int)j);
        }
    std::map<int, std::vector<Mask>> groups;
    for (std::size_t i = 0; i < fs.size(); ++i) groups[uf.find((int)i)].push_back(fs[i]);
    std::vector<SimplicialComplex> out;
    for (auto& [root, gens] : groups)
        out.push_back(SimplicialComplex::from_generating_masks(c.labels(), gens));
    return out;
}

inline bool is_strongly_connected(const SimplicialComplex& c) {
    return strong_components(c).size() <= 1;
}

/**
 * Connectivity of the face-set difference total \ sub under inclusion
 * zigzags.  An empty difference counts as connected.
 */
inline bool poset_connected(const SimplicialComplex& total, const SimplicialComplex& sub) {
    require_present(total, "poset_connected");
    if (!total.has_subcomplex(sub))
        throw std::invalid_argument("poset_connected: not a subcomplex");
    std::vector<Mask> diff;
    for (Mask f : total.face_masks())
        if (sub.is_void() || !sub.contains_face(total.face_of(f))) diff.push_back(f);
    if (diff.empty()) return true;
    detail::UnionFind uf(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        for (std::size_t j = i + 1; j < diff.size(); ++j) {
            Mask a = diff[i], b = diff[j];
            if ((a & b) == a || (a & b) == b) uf.unite((int)i, (int)j);
        }
    int root = uf.find(0);
    for (std::size_t i = 1; i < diff.size(); ++i)
        if (uf.find((int)i) != root) return false;
    return true;
}

/** Reduced Euler characteristic; the empty face contributes -1; Void gives 0. */
inline long long euler_reduced(const SimplicialComplex& c) {
    if (c.is_void()) return 0;
    long long chi = 0;
    for (Mask f : c.face_masks()) chi += (face_card(f) % 2 == 0) ? -1 : 1;
    return chi;
}

// ---------------------------------------------------------------------------
// Set operations on complexes sharing a label universe
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<std::string> merged_labels(const SimplicialComplex& a,
                                              const SimplicialComplex& b) {
    std::set<std::string> s;
    if (!a.is_void()) s.insert(a.labels().begin(), a.labels().end());
    if (!b.is_void()) s.insert(b.labels().begin(), b.labels().end());
    return {s.begin(), s.end()};
}

inline std::vector<Mask> remap_faces(const SimplicialComplex& c,
                                     const std::vector<std::string>& labels) {
    std::vector<Mask> out;
    if (c.is_void()) return out;
    std::vector<int> bit(c.vertex_count());
    for (int i = 0; i < c.vertex_count(); ++i) {
        auto it = std::lower_bound(labels.begin(), labels.end(), c.labels()[i]);
        bit[i] = (int)(it - labels.begin());
    }
    for (Mask f : c.face_masks()) {
        Mask m = 0;
        for (int i = 0; i < c.vertex_count(); ++i)
            if ((f >> i) & 1) m |= Mask(1) << bit[i];
        out.push_back(m);
    }
    return out;
}
}  // namespace detail

inline SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void()) return b;
    if (b.is_void()) return a;
    auto labels = detail::merged_labels(a, b);
    if (labels.size() > kMaxVertices)
        throw std::invalid_argument("union exceeds the vertex budget of 64");
    auto fa = detail::remap_faces(a, labels);
    auto fb = detail::remap_faces(b, labels);
    fa.insert(fa.end(), fb.begin(), fb.end());
    std::sort(fa.begin(), fa.end());
    fa.erase(std::unique(fa.begin(), fa.end()), fa.end());
    return SimplicialComplex::from_face_set(labels, std::move(fa));
}

inline SimplicialComplex complex_intersection(const SimplicialComplex& a,
                                              const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
    auto labels = detail::merged_labels(a, b);
    if (labels.size() > kMaxVertices)
        throw std::invalid_argument("intersection exceeds the vertex budget of 64");
    auto fa = detail::remap_faces(a, labels);
    auto fb = detail::remap_faces(b, labels);
    std::sort(fb.begin(), fb.end());
    std::vector<Mask> keep;
    for (Mask m : fa)
        if (std::binary_search(fb.begin(), fb.end(), m)) keep.push_back(m);
    return SimplicialComplex::from_face_set(labels, std::move(keep));
}

}  // namespace augmental

#endif
