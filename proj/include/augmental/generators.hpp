#ifndef AUGMENTAL_GENERATORS_HPP
#define AUGMENTAL_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "augmental/complex.hpp"
#include "augmental/constructions.hpp"

namespace augmental {

// ---------------------------------------------------------------------------
// Named test surfaces
// ---------------------------------------------------------------------------

/** The full simplex on k+1 vertices v1..v{k+1}. */
inline SimplicialComplex simplex(int k) {
    Face f;
    for (int i = 1; i <= k + 1; ++i) f.push_back("v" + std::to_string(i));
    return SimplicialComplex::from_facets({f});
}

/** Boundary of the k-simplex: the (k-1)-sphere on k+1 vertices. */
inline SimplicialComplex sphere_boundary(int k) {
    std::vector<Face> facets;
    for (int drop = 1; drop <= k + 1; ++drop) {
        Face f;
        for (int i = 1; i <= k + 1; ++i)
            if (i != drop) f.push_back("v" + std::to_string(i));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

/** The n-cycle c1-c2-...-cn-c1 (n >= 3). */
inline SimplicialComplex cycle(int n) {
    std::vector<Face> facets;
    for (int i = 1; i <= n; ++i) {
        std::string a = "c" + std::to_string(i);
        std::string b = "c" + std::to_string(i % n + 1);
        facets.push_back({a, b});
    }
    return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex one_point() { return SimplicialComplex::from_facets({{"pt1"}}); }
inline SimplicialComplex two_points() {
    return SimplicialComplex::from_facets({{"pt1"}, {"pt2"}});
}

/** The 5-vertex Moebius band; its boundary is the pentagon 1-3-5-2-4. */
inline SimplicialComplex moebius5() {
    return SimplicialComplex::from_facets(
        {{"1", "2", "3"}, {"2", "3", "4"}, {"3", "4", "5"}, {"1", "4", "5"}, {"1", "2", "5"}});
}

/** The vertex-minimal 6-vertex triangulation of the real projective plane. */
inline SimplicialComplex rp2_6() {
    return SimplicialComplex::from_facets({{"1", "2", "5"},
                                           {"1", "2", "6"},
                                           {"1", "3", "4"},
                                           {"1", "3", "6"},
                                           {"1", "4", "5"},
                                           {"2", "3", "4"},
                                           {"2", "3", "5"},
                                           {"2", "4", "6"},
                                           {"3", "5", "6"},
                                           {"4", "5", "6"}});
}

/** A 6-vertex triangulated cylinder; boundary = two triangles' worth of circles. */
inline SimplicialComplex cylinder6() {
    return SimplicialComplex::from_facets({{"1", "2", "4"},
                                           {"2", "4", "5"},
                                           {"2", "3", "5"},
                                           {"3", "5", "6"},
                                           {"1", "3", "6"},
                                           {"1", "4", "6"}});
}

// ---------------------------------------------------------------------------
// Seeded random complexes
// ---------------------------------------------------------------------------

struct RandomComplexOptions {
    int max_vertices = 6;
    int max_facets = 8;
    int max_facet_size = 4;
    bool allow_degenerate = true;  // occasionally emit Void or {emptyface}
};

inline SimplicialComplex random_complex(std::mt19937_64& rng,
                                        const RandomComplexOptions& opt = {}) {
    if (opt.allow_degenerate) {
        int roll = (int)(rng() % 20);
        if (roll == 0) return SimplicialComplex::void_complex();
        if (roll == 1) return SimplicialComplex::empty_face_complex();
    }
    int nv = 1 + (int)(rng() % opt.max_vertices);
    int nf = 1 + (int)(rng() % opt.max_facets);
    std::vector<Face> facets;
    for (int i = 0; i < nf; ++i) {
        int size = 1 + (int)(rng() % std::min(opt.max_facet_size, nv));
        std::vector<int> verts(nv);
        for (int v = 0; v < nv; ++v) verts[v] = v + 1;
        for (int v = nv - 1; v > 0; --v) std::swap(verts[v], verts[rng() % (v + 1)]);
        Face f;
        for (int k = 0; k < size; ++k) f.push_back("w" + std::to_string(verts[k]));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

/** A random subcomplex: the closure of a random subset of the face set. */
inline SimplicialComplex random_subcomplex(std::mt19937_64& rng, const SimplicialComplex& c) {
    if (c.is_void()) return c;
    int roll = (int)(rng() % 6);
    if (roll == 0) return SimplicialComplex::void_complex();
    if (roll == 1) return SimplicialComplex::empty_face_complex();
    std::vector<Mask> gens;
    for (Mask f : c.face_masks())
        if (rng() % 3 == 0) gens.push_back(f);
    if (gens.empty()) return SimplicialComplex::empty_face_complex();
    return SimplicialComplex::from_generating_masks(c.labels(), gens);
}

/** A random nonempty face of a present complex. */
inline Face random_face(std::mt19937_64& rng, const SimplicialComplex& c) {
    const auto& fs = c.face_masks();
    return c.face_of(fs[rng() % fs.size()]);
}

// ---------------------------------------------------------------------------
// Manifold fuzz corpus
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<SimplicialComplex> corpus_seeds() {
    std::vector<SimplicialComplex> seeds;
    seeds.push_back(one_point());
    seeds.push_back(two_points());
    for (int k = 1; k <= 3; ++k) seeds.push_back(simplex(k));
    for (int k = 2; k <= 4; ++k) seeds.push_back(sphere_boundary(k));
    for (int n = 3; n <= 7; ++n) seeds.push_back(cycle(n));
    seeds.push_back(moebius5());
    seeds.push_back(rp2_6());
    seeds.push_back(cylinder6());
    return seeds;
}
}  // namespace detail

}  // namespace augmental

#endif
