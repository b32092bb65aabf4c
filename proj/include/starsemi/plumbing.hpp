#pragma once

#include <vector>

#include "starsemi/seifert.hpp"

namespace starsemi {

// Expanded star-shaped plumbing graph: the central vertex followed by
// one Hirzebruch-Jung chain per leg copy (multiplicities expanded),
// chains ordered from the vertex adjacent to the center outwards.
struct PlumbingData {
    std::vector<Int> euler_weights;            // e_v, all negative (-b_v)
    std::vector<std::vector<Int>> intersection;  // symmetric, negative definite
    std::vector<std::vector<std::size_t>> chains;  // vertex ids per leg copy
    std::vector<Rational> z_k;                 // anti-canonical cycle

    std::size_t vertex_count() const { return euler_weights.size(); }
    std::size_t valency(std::size_t v) const;
};

// Builds the plumbing data. Verifies on the way: every chain re-evaluates
// its alpha/omega exactly, the intersection matrix is negative definite
// (exact leading-minor signs), (Z_K, E_v) = e_v + 2 for every vertex and
// the central coordinate of Z_K equals gamma + 1.
PlumbingData plumbing_expand(const SSRGraph& g);

// Anti-canonical cycle of already-expanded data (fraction-free Bareiss
// solve of the adjunction system).
std::vector<Rational> z_k_cycle(const PlumbingData& p);

// Solves M x = rhs exactly; throws on a singular matrix.
std::vector<Rational> solve_exact(const std::vector<std::vector<Int>>& m,
                                  const std::vector<Int>& rhs);

// Determinant of the negated intersection form of a HJ chain [b_1..b_nu]
// (the continuant); used by the leg determinant identities.
Int chain_determinant(const std::vector<Int>& chain);

}  // namespace starsemi
