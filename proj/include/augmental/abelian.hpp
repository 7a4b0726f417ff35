#ifndef AUGMENTAL_ABELIAN_HPP
#define AUGMENTAL_ABELIAN_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "augmental/integer.hpp"

namespace augmental {

/** Coefficient ring selector: Z, Z_p for a prime p, or Q. */
struct Coefficients {
    enum class Kind { integers, prime_field, rationals };
    Kind kind = Kind::integers;
    long long p = 0;

    static Coefficients Z() { return {Kind::integers, 0}; }
    static Coefficients Zp(long long prime) {
        if (prime < 2 || !is_prime(prime))
            throw std::invalid_argument("coefficient field modulus must be prime");
        return {Kind::prime_field, prime};
    }
    static Coefficients Q() { return {Kind::rationals, 0}; }

    bool is_integers() const { return kind == Kind::integers; }
    bool is_field() const { return kind != Kind::integers; }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    // grammar: Z | Zp:<prime> | Q
    static Coefficients parse(const std::string& s) {
        if (s == "Z") return Z();
        if (s == "Q") return Q();
        if (s.rfind("Zp:", 0) == 0) {
            long long p = 0;
            try {
                std::size_t pos = 0;
                p = std::stoll(s.substr(3), &pos);
                if (pos != s.size() - 3) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("bad coefficient spec: " + s);
            }
            return Zp(p);
        }
        throw std::invalid_argument("bad coefficient spec: " + s);
    }

    std::string render() const {
        switch (kind) {
            case Kind::integers: return "Z";
            case Kind::rationals: return "Q";
            case Kind::prime_field: return "Zp:" + std::to_string(p);
        }
        return "?";
    }

    friend bool operator==(const Coefficients& a, const Coefficients& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

/**
 * Finitely generated abelian group in invariant-factor form:
 * Z^rank  +  Z_{d1} + ... + Z_{dk}  with  d1 | d2 | ... | dk, each di >= 2.
 *
 * Over a field coefficient the same struct carries just a dimension in
 * `rank` with empty torsion.
 */
struct FgAbelianGroup {
    int rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }

    friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const FgAbelianGroup& a, const FgAbelianGroup& b) {
        return !(a == b);
    }
};

inline FgAbelianGroup zero_group() { return {}; }
inline FgAbelianGroup free_group(int rank) { return {rank, {}}; }

/** Bring (rank, arbitrary torsion list) into invariant-factor form. */
inline FgAbelianGroup canonicalize(int rank, std::vector<Integer> torsion) {
    for (const auto& t : torsion)
        if (t < Integer(2)) throw std::invalid_argument("torsion entries must be >= 2");
    // gcd/lcm exchange until the divisibility chain stabilizes
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < torsion.size(); ++i)
            for (std::size_t j = i + 1; j < torsion.size(); ++j) {
                Integer g = gcd(torsion[i], torsion[j]);
                if (g == torsion[i] || g == torsion[j]) continue;
                Integer l = torsion[i] / g * torsion[j];
                torsion[i] = g;
                torsion[j] = l;
                changed = true;
            }
    }
    std::vector<Integer> kept;
    for (auto& t : torsion)
        if (t > Integer(1)) kept.push_back(t);
    std::sort(kept.begin(), kept.end());
    return {rank, std::move(kept)};
}

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return canonicalize(a.rank + b.rank, std::move(t));
}

/** A (x) B over Z:  Z(x)Z = Z,  Z(x)Z_n = Z_n,  Z_m(x)Z_n = Z_gcd(m,n). */
inline FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> t;
    int rank = a.rank * b.rank;
    for (const auto& d : a.torsion)
        for (int j = 0; j < b.rank; ++j) t.push_back(d);
    for (const auto& e : b.torsion)
        for (int i = 0; i < a.rank; ++i) t.push_back(e);
    for (const auto& d : a.torsion)
        for (const auto& e : b.torsion) {
            Integer g = gcd(d, e);
            if (g > Integer(1)) t.push_back(g);
        }
    return canonicalize(rank, std::move(t));
}

/** Tor_1(A, B) over Z: free parts drop out, Tor(Z_m, Z_n) = Z_gcd(m,n). */
inline FgAbelianGroup tor1(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> t;
    for (const auto& d : a.torsion)
        for (const auto& e : b.torsion) {
            Integer g = gcd(d, e);
            if (g > Integer(1)) t.push_back(g);
        }
    return canonicalize(0, std::move(t));
}

/**
 * Dimensions contributed by an integral group under the universal
 * coefficient theorem: over Z_p the group lands as A(x)Z_p in its own degree
 * and Tor(A, Z_p) one degree up; over Q only the rank survives.
 */
struct BaseChange {
    int tensor_dim = 0;  // dim (A (x) k), shows up in degree i
    int tor_dim = 0;     // dim Tor(A, k), shows up in degree i+1 of homology tables
};

inline BaseChange base_change(const FgAbelianGroup& a, const Coefficients& coeff) {
    if (coeff.kind == Coefficients::Kind::rationals) return {a.rank, 0};
    if (coeff.kind == Coefficients::Kind::prime_field) {
        Integer p(coeff.p);
        int div = 0;
        for (const auto& d : a.torsion)
            if ((d % p).is_zero()) ++div;
        return {a.rank + div, div};
    }
    throw std::invalid_argument("base_change expects a field coefficient");
}

/** Canonical rendering: `0`, `Z`, `Z^r`, `Z_d`, joined by ` + `. */
inline std::string render_group(const FgAbelianGroup& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.rank == 1) out = "Z";
    else if (g.rank > 1) out = "Z^" + std::to_string(g.rank);
    for (const auto& d : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z_" + d.to_string();
    }
    return out;
}

/** Rendering when the table lives over a field: dimensions, not groups. */
inline std::string render_group(const FgAbelianGroup& g, const Coefficients& coeff) {
    if (coeff.is_integers()) return render_group(g);
    if (g.rank == 0) return "0";
    std::string base = coeff.kind == Coefficients::Kind::rationals
                           ? "Q"
                           : "Z_" + std::to_string(coeff.p);
    if (g.rank == 1) return base;
    return base + "^" + std::to_string(g.rank);
}

}  // namespace augmental

#endif
