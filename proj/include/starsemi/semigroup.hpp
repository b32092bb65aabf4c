#pragma once

#include <optional>
#include <vector>

#include "starsemi/bitvec.hpp"
#include "starsemi/ints.hpp"

namespace starsemi {

// Cap, in bits, on any membership sieve. Overridable through the
// SS_MAX_SIEVE environment variable (read once); default 10^8.
Int sieve_limit();

// Ordered system of positive generators. Order matters for the Brauer
// bound; the recorded gcd decides whether the set generates a numerical
// semigroup (gcd 1) or only a submonoid of the naturals.
struct GeneratorSet {
    std::vector<Int> elements;
    Int content;  // gcd of all elements

    static GeneratorSet of(std::vector<Int> elements);  // validates: nonempty, all >= 1
    bool generates_semigroup() const { return content == Int(1); }
    std::size_t size() const { return elements.size(); }
};

// Membership bitset over [0, bound]: bit l is set iff l is a nonnegative
// integer combination of the generators. Dynamic-programming sieve,
// O(bound * |gens|) bit operations (word-parallel in practice).
BitVec sieve_members(const GeneratorSet& gens, Int bound);

// Bound build_semigroup sieves to when the caller does not pass one:
// the product of the first two coprime generators (Sylvester), or
// B + 1 = (n-1) lcm - sum + 1 when no coprime pair exists.
Int default_sieve_bound(const GeneratorSet& gens);

// Canonical record of a numerical semigroup: minimal generators, the
// Frobenius number (-1 encodes S = N) and membership below it. Values
// are immutable after construction; equality is (frobenius, bitset).
struct NumericalSemigroup {
    std::vector<Int> minimal_generators;  // sorted
    Int frobenius;                        // >= -1
    BitVec members_below;                 // membership of 0 .. frobenius+1
    std::vector<Int> gaps;                // sorted

    bool contains(Int n) const {
        if (n < Int(0)) return false;
        if (n > frobenius) return true;
        return members_below.test(static_cast<std::size_t>(n.to_int64()));
    }
    Int multiplicity() const;  // least nonzero member

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.frobenius == b.frobenius && a.members_below == b.members_below;
    }
};

// Builds the canonical record from a membership table that is complete
// on [0, frobenius + 1]. Membership above the Frobenius number is
// implied. Gaps and minimal generators are derived here.
NumericalSemigroup semigroup_from_members(const BitVec& members, Int frobenius);

// Builds G(gens). Requires gcd(gens) = 1 (else NotCofiniteError). The
// sieve runs to `bound` when given; the default is the product of the
// first two coprime generators found (Sylvester bound), falling back to
// the Raczunas bound B when no coprime pair exists.
NumericalSemigroup build_semigroup(const GeneratorSet& gens,
                                   std::optional<Int> bound = std::nullopt);

// Least member in each residue class mod m; requires m in S, m >= 1.
// max(result) - m equals the Frobenius number.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int m);

// Members that are not sums of two smaller nonzero members.
std::vector<Int> minimal_generators(const GeneratorSet& gens);

// True iff x in S <=> f - x not in S for all 0 <= x <= f.
// S = N returns true by convention.
bool is_symmetric(const NumericalSemigroup& s);

// S/k = { l : k*l in S }, k >= 1.
NumericalSemigroup quotient(const NumericalSemigroup& s, Int k);

// Semigroup generated by the union of generators; equals {a+b}.
NumericalSemigroup sum(const NumericalSemigroup& a, const NumericalSemigroup& b);

// Submonoid of N generated by positive integers whose gcd may exceed 1.
// n is a member iff content | n and n/content lies in the reduced
// numerical semigroup.
struct Submonoid {
    std::vector<Int> generators;
    Int content;
    NumericalSemigroup reduced;

    static Submonoid of(std::vector<Int> generators);
    bool contains(Int n) const;
};

}  // namespace starsemi
