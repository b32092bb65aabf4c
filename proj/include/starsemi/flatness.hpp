#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starsemi/semigroup.hpp"

namespace starsemi {

// Raczunas / Chrzastowski-Wachtel decomposition of a generator system:
// q_i is the gcd of all generators except the i-th, q_hat_i the product
// of the other q_j, and s_hat_i = a_i / q_hat_i. The q_i are pairwise
// coprime and a_i = s_hat_i * q_hat_i reconstructs the input.
struct GcdDecomposition {
    std::vector<Int> q;
    std::vector<Int> q_hat;
    std::vector<Int> s_hat;
};

enum class FlatnessClass { StronglyFlat, Flat, AlmostFlat, NonFlat };

std::string flatness_name(FlatnessClass c);  // "strongly-flat", "flat", ...

// Requires |gens| >= 2 and gcd 1.
GcdDecomposition gcd_decomposition(const GeneratorSet& gens);

// Classification is computed on the minimal generators (flatness of a
// non-minimal system descends to the minimal one, non-flatness does
// not). Semigroups minimally generated by at most two elements,
// including N itself, are strongly flat.
FlatnessClass classify(const GeneratorSet& gens);

// Brauer bound T = sum (d_{i-1}/d_i - 1) a_i with d_0 = 0, in the order
// given (never permuted). equality_holds evaluates the Brauer-Shockley
// criterion by sieve; when it holds, the Frobenius number equals T.
struct BrauerBound {
    Int t;
    bool equality_holds;
};
BrauerBound brauer_T(const GeneratorSet& gens);

// Smallest T over all permutations; guarded to |gens| <= 8.
Int brauer_T_best_permutation(const GeneratorSet& gens);

// B = (n-1) lcm(a_i) - sum a_i; order-independent; f <= T <= B.
Int bound_B(const GeneratorSet& gens);

// Frobenius number of a flat semigroup by the closed formula
// f = sum (q_i - 1) a_i - prod q_i over the minimal generators.
// Errors with the class name when the semigroup is not flat.
Int flat_frobenius(const GeneratorSet& gens);

// Presentation G(alpha, s_1 alpha_hat_1, ..., s_n alpha_hat_n) of a flat
// semigroup: pairwise coprime alpha_i >= 2 with gcd(s_i, alpha_i) = 1.
// At least two alphas (a two-generator flat semigroup must be presented
// with three generators; see expand_two_generator).
struct FlatPresentation {
    std::vector<Int> alphas;
    std::vector<Int> mults;

    static FlatPresentation of(std::vector<Int> alphas, std::vector<Int> mults);

    Int alpha() const;                 // product of the alphas
    Int alpha_hat(std::size_t i) const;  // alpha / alphas[i]
    std::vector<Int> generators() const;  // {alpha, s_i * alpha_hat_i}
    NumericalSemigroup semigroup() const;
    // f = sum s_i (alpha_i - 1) alpha_hat_i - alpha, no sieve involved.
    Int frobenius_by_formula() const;

    friend bool operator==(const FlatPresentation& a, const FlatPresentation& b) {
        return a.alphas == b.alphas && a.mults == b.mults;
    }
};

// Reads a flat presentation off a generator system that is flat at the
// given pivot (s_hat_pivot = 1 with the pivot moved to the front):
// alpha_i = q_i, s_i = q_0 * s_hat_i for the non-pivot generators.
// A non-pivot generator with q_i = 1 is a multiple of the pivot one and
// makes the presentation degenerate; this is reported as an error.
FlatPresentation extract_flat_presentation(const GeneratorSet& gens, std::size_t pivot);

// {p, q} -> {pq, p, q}, the least presentation usable by the canonical
// representative construction for a two-generator flat semigroup.
GeneratorSet expand_two_generator(Int p, Int q);

}  // namespace starsemi
