#pragma once

#include <vector>

#include "starsemi/rational.hpp"
#include "starsemi/semigroup.hpp"

namespace starsemi {

// One normalized Seifert pair (alpha, omega) with 0 < omega < alpha,
// gcd(alpha, omega) = 1, carried with multiplicity mult >= 1.
struct SeifertLeg {
    Int alpha;
    Int omega;
    Int mult = Int(1);

    friend bool operator==(const SeifertLeg&, const SeifertLeg&) = default;
};

// Star-shaped minimal good resolution graph of a Seifert rational
// homology sphere, encoded by Sf = (-b0; (alpha_i, omega_i) x s_i).
// Canonical form: legs sorted by (alpha, omega), duplicates merged into
// multiplicities. Negative definiteness (e < 0) is enforced on
// construction; graphs with fewer than three legs, or none, are valid.
struct SSRGraph {
    Int b0;
    std::vector<SeifertLeg> legs;

    // Validates and canonicalizes. Throws NotNegativeDefiniteError when
    // e >= 0 and Error for malformed legs or b0 < 1.
    static SSRGraph of(Int b0, std::vector<SeifertLeg> legs);

    Int total_legs() const;      // d = sum of multiplicities
    Rational euler() const;      // e = -b0 + sum s_i omega_i / alpha_i

    friend bool operator==(const SSRGraph&, const SSRGraph&) = default;
};

// Numeric invariants of the graph: orbifold Euler number e, the lcm of
// the leg orders, the orders h = |H_1| and o of the generic orbit, and
// the exponent gamma = (d - 2 - sum s_i/alpha_i) / |e|.
struct GraphInvariants {
    Rational e;
    Int alpha_lcm;
    Int h;
    Int o;
    Rational gamma;
    Int d;
};

// Hirzebruch-Jung expansion alpha/omega = [b_1, ..., b_nu], all b_j >= 2.
std::vector<Int> hj_expand(Int alpha, Int omega);

// omega' with omega * omega' == 1 (mod alpha), 0 < omega' < alpha.
Int omega_prime(Int alpha, Int omega);

GraphInvariants graph_invariants(const SSRGraph& g);

// Quasi-linear function N(l) = b0*l - sum s_i ceil(l omega_i / alpha_i).
// Defined for all integers l.
Int n_value(const SSRGraph& g, Int ell);

// S_Gamma = { l >= 0 : N(l) >= 0 }, scanned up to max(alpha, alpha+gamma);
// all larger values are members.
NumericalSemigroup semigroup_of_graph(const SSRGraph& g);

// Frobenius number of S_Gamma (-1 when S = N, in particular whenever
// b0 >= d) together with the derived invariant
// check_s = gamma + 1/|e| - f, the Lipman-cone term recovered by
// inverting the Frobenius formula.
struct GraphFrobenius {
    Int frobenius;
    Rational check_s;
};
GraphFrobenius frobenius_of_graph(const SSRGraph& g);

// gamma integral and gamma == omega_i' (mod alpha_i) for every leg.
bool is_numerically_gorenstein(const SSRGraph& g);

// b0 adds, leg multisets merge; the quasi-linear functions add pointwise.
SSRGraph sum_graphs(const SSRGraph& a, const SSRGraph& b);

// k-fold sum of the graph with itself; same associated semigroup.
SSRGraph scale_graph(const SSRGraph& g, Int k);

// Representative of S_Gamma / k: legs (alpha_i, k omega_i mod alpha_i)
// reduced, zero residues dropped, b0 adjusted so that N'(l) = N(k l).
SSRGraph quotient_graph(const SSRGraph& g, Int k);

// Sf = (-k, k x (p, omega_p), k x (q, omega_q)) where
// pq - omega_p q - omega_q p = 1; its semigroup is G(p, q).
SSRGraph plane_curve_representative(Int p, Int q, Int k);

}  // namespace starsemi
