#pragma once

#include <optional>
#include <vector>

#include "starsemi/flat_rep.hpp"

namespace starsemi {

// Ceiling-preserving window around r = omega/alpha: every reduced
// fraction r' in (left, r] satisfies ceil(r' l) = ceil(r l) for all
// 0 <= l <= horizon, where left = r - 1/(alpha * horizon).
struct PerturbationWindow {
    Rational r;
    Int horizon;
    Rational left;
};
PerturbationWindow perturbation_window(Int alpha, Int omega, Int horizon);

// True when the candidate ratio lies in the half-open window (left, r].
bool window_admits(const PerturbationWindow& w, const Rational& candidate);

// Replaces (alpha, omega) by the reduced fraction x / (k * d_base + 1)
// with the smallest k >= 1 admitting an integer x in the window, then
// the smallest such x. The result keeps ceil(omega l / alpha) for all
// l <= horizon and its order is coprime to d_base. Multiplicity is
// preserved.
SeifertLeg perturb_ratio(const SeifertLeg& leg, Int horizon, Int d_base);

// Blockwise perturbation: a block is kept when its order is coprime to
// every previously fixed order and to its own multiplicity, otherwise it
// is perturbed with d_base = (product of fixed orders) * s_i. The output
// has pairwise coprime orders, gcd(alpha_i', s_i) = 1, and the same
// quasi-linear function on [0, horizon].
SSRGraph perturb_graph(const SSRGraph& g, Int horizon);

// Certificate that S_Gamma equals the flat semigroup divided by the
// divisor: the perturbed (coprime) graph, the flat presentation read off
// its legs, the divisor o, and the tilde graph, which is the canonical
// representative of the presentation.
struct QuotientCertificate {
    FlatPresentation flat;
    Int divisor;
    SSRGraph perturbed_graph;
    SSRGraph tilde_graph;
};

// Proof of S_Gamma = G(alpha, s_1 alpha_hat_1, ...) / o for a graph with
// pairwise coprime leg orders and gcd(alpha_i, s_i) = 1. The known
// semigroup may be passed to skip rescanning the graph. Verification:
// always the exact congruence identities N~(o l) = N(l) on the scan
// range, plus the direct sieve comparison when the flat semigroup fits
// under the sieve limit.
QuotientCertificate flat_quotient(const SSRGraph& g,
                                  std::optional<NumericalSemigroup> known = std::nullopt);

// End-to-end decomposition of any SSR graph: scan the semigroup, perturb
// with horizon max(largest minimal generator, Frobenius number) (alpha
// when S = N), then certify through flat_quotient. The certificate's
// quotient reproduces S_Gamma exactly.
QuotientCertificate decompose(const SSRGraph& g);

// Checks a certificate against a graph (used by `verify` on foreign
// certificates; the tilde graph is reconstructed). Returns normally on
// success and throws Error with a reason otherwise.
void verify_certificate(const SSRGraph& graph, const FlatPresentation& flat, Int divisor);

// Submonoid bounds G(alpha, s_i alpha_{-i}) <= S_Gamma <= G(alpha, s_i alpha*_i)/o
// with alpha*_i = alpha/alpha_i and alpha_{-i} = lcm of the other orders.
// Inclusions are verified on [0, f + alpha] before returning.
struct MonoidBounds {
    Submonoid lower;
    Submonoid upper;
    Int upper_divisor;
};
MonoidBounds monoid_bounds(const SSRGraph& g);

}  // namespace starsemi
