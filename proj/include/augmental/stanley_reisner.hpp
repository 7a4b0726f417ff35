#ifndef AUGMENTAL_STANLEY_REISNER_HPP
#define AUGMENTAL_STANLEY_REISNER_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "augmental/complex.hpp"
#include "augmental/constructions.hpp"
#include "augmental/integer.hpp"

namespace augmental {

/**
 * A squarefree monomial ideal presented by its minimal generators; the face
 * ideal of a complex inside the polynomial ring on `universe`.
 */
struct SRIdeal {
    std::vector<std::string> universe;   // declared variable order
    std::vector<Face> generators;        // sorted vertex lists, pairwise non-dividing
    bool trivial_ring = false;           // the void complex: ideal (1), quotient 0
    bool whole_polynomial_ring_quotient = false;  // the complex {emptyface}: quotient A

    friend bool operator==(const SRIdeal& a, const SRIdeal& b) {
        return a.universe == b.universe && a.generators == b.generators &&
               a.trivial_ring == b.trivial_ring;
    }
};

inline SRIdeal sr_ideal(const SimplicialComplex& c, std::vector<std::string> universe) {
    SRIdeal ideal;
    if (c.is_void()) {
        ideal.universe = std::move(universe);
        ideal.trivial_ring = true;
        ideal.generators = {Face{}};  // the monomial 1
        return ideal;
    }
    std::vector<Face> gens = minimal_non_faces(c, universe);
    std::sort(gens.begin(), gens.end());
    ideal.universe = std::move(universe);
    ideal.generators = std::move(gens);
    ideal.whole_polynomial_ring_quotient = c.is_empty_face_only();
    return ideal;
}

inline SRIdeal sr_ideal(const SimplicialComplex& c) { return sr_ideal(c, c.labels()); }

/**
 * Face ideal of a join: the union of the factors' minimal non-face sets.
 * Computed combinatorially and validated against the ideal of the join
 * complex itself.
 */
inline SRIdeal join_ideal(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex left = a, right = b;
    if (!detail::labels_disjoint(left, right)) {
        left = detail::prefix_labels(left, "L:");
        right = detail::prefix_labels(right, "R:");
    }
    SimplicialComplex j = join(left, right);
    if (j.is_void()) return sr_ideal(j, detail::merged_labels(left, right));

    std::vector<Face> gens;
    if (left.is_present())
        for (Face f : minimal_non_faces(left)) gens.push_back(std::move(f));
    if (right.is_present())
        for (Face f : minimal_non_faces(right)) gens.push_back(std::move(f));
    std::sort(gens.begin(), gens.end());

    SRIdeal direct = sr_ideal(j, j.labels());
    if (gens != direct.generators)
        throw std::logic_error("join ideal disagrees with the join complex's ideal");
    return direct;
}

// ---------------------------------------------------------------------------
// Product ideal: the reduced Groebner set C' u D
// ---------------------------------------------------------------------------

namespace detail {

/** All weakly increasing rank sequences of length k whose support is a face. */
inline void weak_sequences(const OrderedComplex& oc, int k,
                           std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int r = from; r < (int)oc.order.size(); ++r) {
            Face support;
            std::set<int> ranks(cur.begin(), cur.end());
            ranks.insert(r);
            for (int x : ranks) support.push_back(oc.order[x]);
            std::sort(support.begin(), support.end());
            if (!oc.complex.contains_face(support)) continue;
            cur.push_back(r);
            rec(r);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace detail

/**
 * Reduced Groebner set of the product's face ideal: the incomparable pairs
 * C' plus the chain monomials D whose projections are minimal non-faces
 * (strict steps in any coordinate projecting onto a non-face, weak steps
 * against a face).  The result is asserted equal, as a monomial set, to the
 * minimal non-faces of the product complex.
 */
inline SRIdeal product_groebner_set(const OrderedComplex& a, const OrderedComplex& b) {
    OrderedComplex p = product(a, b);
    if (p.complex.is_void() || p.complex.is_empty_face_only())
        throw std::invalid_argument("product groebner set: degenerate product");

    std::set<Face> gens;
    int na = (int)a.order.size(), nb = (int)b.order.size();
    // C': strictly incomparable pairs of grid vertices
    for (int l = 0; l < na; ++l)
        for (int m = 0; m < nb; ++m)
            for (int v = l + 1; v < na; ++v)
                for (int x = 0; x < m; ++x) {
                    Face f = {product_label(a.order[l], b.order[m]),
                              product_label(a.order[v], b.order[x])};
                    std::sort(f.begin(), f.end());
                    gens.insert(std::move(f));
                }

    std::vector<Face> nf_a = minimal_non_faces(a.complex);
    std::vector<Face> nf_b = minimal_non_faces(b.complex);
    auto rank_sorted = [](const OrderedComplex& oc, const Face& f) {
        std::vector<int> rs;
        for (const std::string& v : f) rs.push_back(oc.rank_of(v));
        std::sort(rs.begin(), rs.end());
        return rs;
    };
    auto emit = [&](const std::vector<int>& ra, const std::vector<int>& rb) {
        Face f;
        for (std::size_t i = 0; i < ra.size(); ++i)
            f.push_back(product_label(a.order[ra[i]], b.order[rb[i]]));
        std::sort(f.begin(), f.end());
        gens.insert(std::move(f));
    };
    // first projection a minimal non-face, second weakly climbing a face
    for (const Face& s : nf_a) {
        std::vector<int> ra = rank_sorted(a, s);
        std::vector<std::vector<int>> seqs;
        detail::weak_sequences(b, (int)s.size(), seqs);
        for (const auto& rb : seqs) emit(ra, rb);
    }
    // second projection a minimal non-face, first weakly climbing a face
    for (const Face& s : nf_b) {
        std::vector<int> rb = rank_sorted(b, s);
        std::vector<std::vector<int>> seqs;
        detail::weak_sequences(a, (int)s.size(), seqs);
        for (const auto& ra : seqs) emit(ra, rb);
    }
    // both projections minimal non-faces of the same cardinality
    for (const Face& s : nf_a)
        for (const Face& t : nf_b) {
            if (s.size() != t.size()) continue;
            emit(rank_sorted(a, s), rank_sorted(b, t));
        }

    std::vector<Face> expected = minimal_non_faces(p.complex);
    std::sort(expected.begin(), expected.end());
    std::vector<Face> got(gens.begin(), gens.end());
    std::sort(got.begin(), got.end());
    if (got != expected)
        throw std::logic_error(
            "product groebner set disagrees with the product's minimal non-faces");

    SRIdeal ideal;
    ideal.universe = p.order;
    ideal.generators = std::move(got);
    return ideal;
}

// ---------------------------------------------------------------------------
// f-vectors and Hilbert functions
// ---------------------------------------------------------------------------

/** Face counts f_{-1}..f_n (f_{-1} = 1 for present complexes). */
struct FVector {
    std::vector<long long> counts;  // counts[i] = f_{i-1}

    long long at_dim(int d) const {
        int i = d + 1;
        if (i < 0 || i >= (int)counts.size()) return 0;
        return counts[i];
    }
};

inline FVector f_vector(const SimplicialComplex& c) {
    FVector fv;
    if (c.is_void()) return fv;
    fv.counts.assign(c.dim().finite() + 2, 0);
    for (Mask f : c.face_masks()) ++fv.counts[face_card(f)];
    return fv;
}

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r(1);
    for (long long i = 1; i <= k; ++i) r = r * Integer(n - k + i) / Integer(i);
    return r;
}

/**
 * Hilbert function of the face ring: the number of degree-m monomials
 * supported on faces.  H(0) = 1 for present complexes, identically 0 for the
 * void complex.
 */
inline Integer hilbert_function(const SimplicialComplex& c, long long m) {
    if (m < 0) throw std::invalid_argument("hilbert_function: negative degree");
    if (c.is_void()) return Integer(0);
    if (m == 0) return Integer(1);
    FVector fv = f_vector(c);
    Integer h(0);
    for (std::size_t i = 1; i < fv.counts.size(); ++i)
        h += Integer(fv.counts[i]) * binomial(m - 1, (long long)i - 1);
    return h;
}

/** Segre multiplicativity: H(product, m) = H(a, m) * H(b, m) for m = 0..m_max. */
inline bool segre_check(const OrderedComplex& a, const OrderedComplex& b, long long m_max) {
    OrderedComplex p = product(a, b);
    for (long long m = 0; m <= m_max; ++m) {
        Integer lhs = hilbert_function(p.complex, m);
        Integer rhs = hilbert_function(a.complex, m) * hilbert_function(b.complex, m);
        if (lhs != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Rendering for computer-algebra consumption
// ---------------------------------------------------------------------------

inline std::string render_ideal(const SRIdeal& ideal) {
    std::string out = "ring";
    for (std::size_t i = 0; i < ideal.universe.size(); ++i)
        out += (i ? "," : " ") + ideal.universe[i];
    out += "\n";
    if (ideal.trivial_ring) {
        out += "1\n";
        return out;
    }
    for (const Face& g : ideal.generators) {
        std::string mono;
        for (const std::string& v : g) {
            if (!mono.empty()) mono += "*";
            mono += v;
        }
        out += (mono.empty() ? "1" : mono) + "\n";
    }
    if (ideal.generators.empty()) out += "0\n";
    return out;
}

}  // namespace augmental

#endif
