#pragma once

#include <string>
#include <vector>

#include "starsemi/flatness.hpp"
#include "starsemi/seifert.hpp"

namespace starsemi {

// Unique solution of alpha * (b0 - sum omega_i / alpha_i) = 1 over
// pairwise coprime alphas: omega_i = -(alpha_hat_i)^{-1} mod alpha_i in
// (0, alpha_i) and b0 = (1 + sum omega_i alpha_hat_i) / alpha.
struct BaseDiophantine {
    Int b0;
    std::vector<Int> omegas;
};
BaseDiophantine base_diophantine(const std::vector<Int>& alphas);

// The canonical SSR representative of a flat presentation: the base
// solution adjusted by offsets k_i (0 <= k_i < s_i with
// k_i alpha_i + omega_i~ == 0 mod s_i) so that the graph carries the
// multiplicities and still has o = 1, e = -1/alpha. Construction checks
// o = 1, numerically Gorenstein, and f = alpha + gamma against the flat
// formula; semigroup equality with the presentation is covered by the
// sieve-backed tests and certificate verification.
struct CanonicalRepresentative {
    SSRGraph graph;
    FlatPresentation presentation;
    BaseDiophantine base;
    std::vector<Int> offsets;  // k_i
};
CanonicalRepresentative canonical_representative(const FlatPresentation& f);

// H_1 of the representative: direct sum over blocks of Z_{alpha_i}^{s_i - 1},
// returned as (prime-power cyclic order, exponent) pairs, sorted; the
// total order always equals the invariant h.
std::vector<std::pair<Int, Int>> h_group(const CanonicalRepresentative& c);

// Numeric data of the universal abelian cover: legs with s_i = 1 survive
// (their omega solves omega * alpha_hat_i == -1 mod alpha_i) with
// multiplicity prod alpha_l^{s_l - 1}; legs with s_i > 1 are absorbed
// into the central genus. e_ab = -prod alpha_l^{s_l - 2} evaluated
// literally, so it may be a non-integer rational when some s_l < 2.
struct AbelianCoverData {
    Int genus;
    Rational e_ab;
    std::vector<SeifertLeg> legs;
};
AbelianCoverData abelian_cover_data(const CanonicalRepresentative& c);

// Structured equations of the isolated complete intersection whose link
// is the canonical representative. One of three shapes depending on
// K = #{i : s_i = 1}; generic coefficients stay symbolic, pinned slots
// are 0 or 1. #variables - #equations = 2 in every case.
enum class IcisCase { I, II, III };

struct IcisCoeff {
    enum Kind { Zero, One, Generic } kind;
    std::string name;  // set when Generic
};

struct IcisTerm {
    IcisCoeff coeff;
    std::string base;  // variable name
    Int power;
};

struct IcisFactor {
    IcisTerm lhs;
    IcisTerm rhs;
};

struct IcisEquation {
    std::string target;  // w_i or z_i raised to target_power
    Int target_power;
    std::vector<IcisFactor> factors;
};

struct IcisSystem {
    IcisCase shape;
    std::vector<std::string> variables;
    std::vector<IcisEquation> equations;
};

IcisSystem icis_equations(const CanonicalRepresentative& c);

// One equation per line, deterministic naming.
std::string render_icis(const IcisSystem& system);

}  // namespace starsemi
