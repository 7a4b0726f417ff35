#ifndef AUGMENTAL_KUNNETH_HPP
#define AUGMENTAL_KUNNETH_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "augmental/chain.hpp"
#include "augmental/complex.hpp"
#include "augmental/constructions.hpp"

namespace augmental {

struct KunnethRow {
    int q = 0;
    FgAbelianGroup lhs, rhs;
    bool ok = false;
};

struct KunnethReport {
    std::string case_label;  // C1..C4, "join", "degenerate"
    std::vector<KunnethRow> rows;

    bool all_ok() const {
        for (const auto& r : rows)
            if (!r.ok) return false;
        return true;
    }
};

namespace detail {

/** Direct sum of H_i (x) H_j over i+j = q with both indices >= floor. */
inline FgAbelianGroup tensor_sum(const HomologyTable& x, const HomologyTable& y, int q,
                                 int floor_idx) {
    FgAbelianGroup acc;
    for (const auto& [i, gx] : x.groups) {
        if (i < floor_idx) continue;
        int j = q - i;
        if (j < floor_idx) continue;
        acc = direct_sum(acc, tensor(gx, y.at(j)));
    }
    return acc;
}

/** Direct sum of Tor(H_i, H_j) over i+j = q with both indices >= floor. */
inline FgAbelianGroup tor_sum(const HomologyTable& x, const HomologyTable& y, int q,
                              int floor_idx) {
    FgAbelianGroup acc;
    for (const auto& [i, gx] : x.groups) {
        if (i < floor_idx) continue;
        int j = q - i;
        if (j < floor_idx) continue;
        acc = direct_sum(acc, tor1(gx, y.at(j)));
    }
    return acc;
}

}  // namespace detail

/**
 * Right-hand side of the join formula: the predicted H_{q+1} of the pair
 * join, as the split tensor part in total degree q plus the torsion part in
 * total degree q-1, indices running from -1.
 */
inline FgAbelianGroup kunneth_join_rhs(const HomologyTable& hx, const HomologyTable& hy,
                                       int q) {
    return direct_sum(detail::tensor_sum(hx, hy, q, -1),
                      detail::tor_sum(hx, hy, q - 1, -1));
}

/** Degreewise check of the join formula against directly computed homology. */
inline KunnethReport verify_join(const ComplexPair& x, const ComplexPair& y) {
    Coefficients z = Coefficients::Z();
    HomologyTable hx = homology(x, z);
    HomologyTable hy = homology(y, z);
    HomologyTable hj = homology(pair_join(x, y), z);

    KunnethReport rep;
    rep.case_label = "join";
    int lo = -2, hi = 1;
    if (!hj.is_zero()) hi = std::max(hi, hj.max_degree() - 1);
    if (!hx.is_zero() && !hy.is_zero()) hi = std::max(hi, hx.max_degree() + hy.max_degree() + 1);
    for (int q = lo; q <= hi; ++q) {
        KunnethRow row;
        row.q = q;
        row.lhs = hj.at(q + 1);
        row.rhs = kunneth_join_rhs(hx, hy, q);
        row.ok = row.lhs == row.rhs;
        if (!row.lhs.is_zero() || !row.rhs.is_zero() || !row.ok) rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Product formula with its four cases
// ---------------------------------------------------------------------------

enum class ProductCase { c1, c2, c3, c4, degenerate };

inline const char* case_name(ProductCase c) {
    switch (c) {
        case ProductCase::c1: return "C1";
        case ProductCase::c2: return "C2";
        case ProductCase::c3: return "C3";
        case ProductCase::c4: return "C4";
        default: return "degenerate";
    }
}

/** Case selection on the shapes of the subs and of X1 x Y1. */
inline ProductCase select_product_case(const ComplexPair& x, const ComplexPair& y) {
    bool product_degenerate = x.total.is_void() || y.total.is_void() ||
                              x.total.is_empty_face_only() || y.total.is_empty_face_only();
    bool x2 = x.sub.is_present(), y2 = y.sub.is_present();
    if (product_degenerate || (x2 && y2)) return ProductCase::c4;
    if (!x2 && !y2) return ProductCase::c1;
    if (!x2 && y2) return ProductCase::c2;
    return ProductCase::c3;
}

/**
 * Right-hand side of the product formula in degree q >= 0 over Z.  The
 * bracketed sums run over nonnegative indices; cases C1-C3 carry the extra
 * absolute/relative terms standing in for the missing (-1)-indices.
 */
inline FgAbelianGroup kunneth_product_rhs(const HomologyTable& habs_x,
                                          const HomologyTable& hrel_x,
                                          const HomologyTable& habs_y,
                                          const HomologyTable& hrel_y, ProductCase c, int q) {
    switch (c) {
        case ProductCase::c1: {
            FgAbelianGroup g = detail::tensor_sum(habs_x, habs_y, q, 0);
            g = direct_sum(g, habs_x.at(q));
            g = direct_sum(g, habs_y.at(q));
            return direct_sum(g, detail::tor_sum(habs_x, habs_y, q - 1, 0));
        }
        case ProductCase::c2: {
            FgAbelianGroup g = detail::tensor_sum(habs_x, hrel_y, q, 0);
            g = direct_sum(g, hrel_y.at(q));
            return direct_sum(g, detail::tor_sum(habs_x, hrel_y, q - 1, 0));
        }
        case ProductCase::c3: {
            FgAbelianGroup g = detail::tensor_sum(hrel_x, habs_y, q, 0);
            g = direct_sum(g, hrel_x.at(q));
            return direct_sum(g, detail::tor_sum(hrel_x, habs_y, q - 1, 0));
        }
        default: {
            FgAbelianGroup g = detail::tensor_sum(hrel_x, hrel_y, q, 0);
            return direct_sum(g, detail::tor_sum(hrel_x, hrel_y, q - 1, 0));
        }
    }
}

/** Degreewise check of the product formula with case selection. */
inline KunnethReport verify_product(const OrderedComplex& x, const SimplicialComplex& xsub,
                                    const OrderedComplex& y, const SimplicialComplex& ysub) {
    Coefficients z = Coefficients::Z();
    ComplexPair px(x.complex, xsub), py(y.complex, ysub);
    ProductCase c = select_product_case(px, py);
    ComplexPair prod = pair_product(x, xsub, y, ysub);

    KunnethReport rep;
    rep.case_label = prod.total.is_void() ? "degenerate" : case_name(c);

    HomologyTable hp = homology(prod, z);
    HomologyTable habs_x = homology(x.complex, z);
    HomologyTable habs_y = homology(y.complex, z);
    HomologyTable hrel_x = homology(px, z);
    HomologyTable hrel_y = homology(py, z);

    int hi = 1;
    if (!hp.is_zero()) hi = std::max(hi, hp.max_degree());
    if (x.complex.dim().is_finite() && y.complex.dim().is_finite())
        hi = std::max(hi, x.complex.dim().finite() + y.complex.dim().finite());
    for (int q = 0; q <= hi; ++q) {
        KunnethRow row;
        row.q = q;
        row.lhs = hp.at(q);
        row.rhs = kunneth_product_rhs(habs_x, hrel_x, habs_y, hrel_y, c, q);
        row.ok = row.lhs == row.rhs;
        if (!row.lhs.is_zero() || !row.rhs.is_zero() || !row.ok) rep.rows.push_back(row);
    }
    return rep;
}

/**
 * Degree-shift identity: H_q of the pair product against H_{q+1} of the pair
 * join plus the case-dependent correction terms.
 */
inline KunnethReport verify_degree_shift(const OrderedComplex& x, const SimplicialComplex& xsub,
                                         const OrderedComplex& y,
                                         const SimplicialComplex& ysub) {
    if (x.complex.is_void() || y.complex.is_void())
        throw std::invalid_argument("degree shift: factors must be present");
    if ((x.complex.is_empty_face_only() && xsub.is_void()) ||
        (y.complex.is_empty_face_only() && ysub.is_void()))
        throw std::invalid_argument("degree shift: the pair ({emptyface}, Void) is excluded");

    Coefficients z = Coefficients::Z();
    ComplexPair px(x.complex, xsub), py(y.complex, ysub);
    ProductCase c = select_product_case(px, py);
    HomologyTable hp = homology(pair_product(x, xsub, y, ysub), z);
    HomologyTable hj = homology(pair_join(px, py), z);
    HomologyTable habs_x = homology(x.complex, z);
    HomologyTable habs_y = homology(y.complex, z);
    HomologyTable hrel_x = homology(px, z);
    HomologyTable hrel_y = homology(py, z);

    KunnethReport rep;
    rep.case_label = case_name(c);
    int hi = 1;
    if (!hp.is_zero()) hi = std::max(hi, hp.max_degree());
    if (!hj.is_zero()) hi = std::max(hi, hj.max_degree());
    for (int q = 0; q <= hi; ++q) {
        KunnethRow row;
        row.q = q;
        row.lhs = hp.at(q);
        FgAbelianGroup rhs = hj.at(q + 1);
        switch (c) {
            case ProductCase::c1:
                rhs = direct_sum(rhs, direct_sum(habs_x.at(q), habs_y.at(q)));
                break;
            case ProductCase::c2: rhs = direct_sum(rhs, hrel_y.at(q)); break;
            case ProductCase::c3: rhs = direct_sum(rhs, hrel_x.at(q)); break;
            default: break;
        }
        row.rhs = rhs;
        row.ok = row.lhs == row.rhs;
        if (!row.lhs.is_zero() || !row.rhs.is_zero() || !row.ok) rep.rows.push_back(row);
    }
    return rep;
}

/**
 * Link formula inside a product: for every product face projecting exactly
 * onto (sigma1, sigma2), the link homology in the product matches the
 * tensor/torsion combination of the factor link homologies, with the
 * codimension defect shifting the degree.
 */
inline KunnethReport verify_link_kunneth(const OrderedComplex& x, const OrderedComplex& y,
                                         const Face& sigma1, const Face& sigma2) {
    if (sigma1.empty() || sigma2.empty())
        throw std::invalid_argument("link formula: faces must be nonempty");
    if (!x.complex.contains_face(sigma1) || !y.complex.contains_face(sigma2))
        throw std::invalid_argument("link formula: face not in its factor");

    Coefficients z = Coefficients::Z();
    OrderedComplex P = product(x, y);
    HomologyTable hl1 = homology(link(x.complex, sigma1), z);
    HomologyTable hl2 = homology(link(y.complex, sigma2), z);
    int d1 = (int)sigma1.size() - 1, d2 = (int)sigma2.size() - 1;

    KunnethReport rep;
    rep.case_label = "link";
    bool found = false;
    for (Mask m : P.complex.face_masks()) {
        if (m == 0) continue;
        Face f = P.complex.face_of(m);
        ProductProjection pr = project_product_face(f);
        if (pr.first != sigma1 || pr.second != sigma2) continue;
        found = true;
        int c_sigma = d1 + d2 - face_dim(m);
        HomologyTable hlk = homology(link(P.complex, f), z);
        int hi = 1;
        if (!hlk.is_zero()) hi = std::max(hi, hlk.max_degree() + 2);
        if (!hl1.is_zero() && !hl2.is_zero())
            hi = std::max(hi, hl1.max_degree() + hl2.max_degree() + 2);
        for (int i = -2; i <= hi; ++i) {
            KunnethRow row;
            row.q = i;
            row.lhs = hlk.at(i + c_sigma + 1);
            row.rhs = direct_sum(detail::tensor_sum(hl1, hl2, i, -1),
                                 detail::tor_sum(hl1, hl2, i - 1, -1));
            row.ok = row.lhs == row.rhs;
            if (!row.lhs.is_zero() || !row.rhs.is_zero() || !row.ok) rep.rows.push_back(row);
        }
    }
    if (!found)
        throw std::invalid_argument("link formula: no product face projects onto the pair");
    return rep;
}

/** Rendered table `q | LHS | RHS | ok`. */
inline std::string render_report(const KunnethReport& rep) {
    std::string out = "case " + rep.case_label + "\n";
    out += "q | LHS | RHS | ok\n";
    for (const auto& r : rep.rows)
        out += std::to_string(r.q) + " | " + render_group(r.lhs) + " | " + render_group(r.rhs) +
               " | " + (r.ok ? "yes" : "NO") + "\n";
    if (rep.rows.empty()) out += "(all degrees zero on both sides)\n";
    return out;
}

}  // namespace augmental

#endif
