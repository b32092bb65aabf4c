#include "starsemi/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace starsemi {

Int sieve_limit() {
    static const Int limit = [] {
        if (const char* env = std::getenv("SS_MAX_SIEVE")) {
            try {
                Int v = parse_int(env);
                if (v >= Int(1)) return v;
            } catch (const Error&) {
            }
        }
        return Int(100000000);
    }();
    return limit;
}

GeneratorSet GeneratorSet::of(std::vector<Int> elements) {
    if (elements.empty()) throw Error("generator set must be nonempty");
    Int g(0);
    for (const Int& e : elements) {
        if (e < Int(1)) throw Error("generators must be >= 1, got " + to_string(e));
        g = gcd(g, e);
    }
    return GeneratorSet{std::move(elements), g};
}

BitVec sieve_members(const GeneratorSet& gens, Int bound) {
    if (bound < Int(0)) throw Error("sieve bound must be nonnegative");
    if (bound + Int(1) > sieve_limit()) {
        throw Error("sieve bound " + to_string(bound) + " exceeds SS_MAX_SIEVE limit " +
                    to_string(sieve_limit()));
    }
    const std::size_t n = static_cast<std::size_t>((bound + Int(1)).to_int64());
    BitVec bits(n);
    bits.set(0);
    std::vector<Int> sorted = gens.elements;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Int& g : sorted) {
        if (g > bound) break;
        bits.or_shift_self(static_cast<std::size_t>(g.to_int64()));
    }
    return bits;
}

Int NumericalSemigroup::multiplicity() const {
    if (frobenius == Int(-1)) return Int(1);
    return minimal_generators.front();
}

namespace {

// Membership including the "everything above the Frobenius number" rule,
// for tables that only cover [0, frobenius + 1].
bool member_at(const BitVec& members, Int frobenius, Int n) {
    if (n < Int(0)) return false;
    if (n > frobenius) return true;
    return members.test(static_cast<std::size_t>(n.to_int64()));
}

}  // namespace

NumericalSemigroup semigroup_from_members(const BitVec& members, Int frobenius) {
    NumericalSemigroup s;
    s.frobenius = frobenius;
    const std::size_t keep = static_cast<std::size_t>((frobenius + Int(2)).to_int64());
    const std::size_t given = members.size();
    BitVec trimmed = members;
    trimmed.resize(keep);
    // Positions past the supplied table lie above the Frobenius number.
    for (std::size_t i = given; i < keep; ++i) trimmed.set(i);
    s.members_below = std::move(trimmed);
    if (frobenius == Int(-1)) {
        s.minimal_generators = {Int(1)};
        return s;
    }
    if (!member_at(s.members_below, frobenius, Int(0)) ||
        member_at(s.members_below, frobenius, frobenius)) {
        throw Error("inconsistent membership table");
    }
    for (Int i(1); i <= frobenius; ++i) {
        if (!s.contains(i)) s.gaps.push_back(i);
    }
    // Minimal generators live in {m1} union the nonzero Apery set mod m1.
    Int m1(1);
    while (!s.contains(m1)) ++m1;
    std::vector<Int> ap = apery_set(s, m1);
    s.minimal_generators.push_back(m1);
    for (std::size_t r = 1; r < ap.size(); ++r) {
        const Int w = ap[r];
        bool reducible = false;
        for (std::size_t a = 1; a < ap.size() && !reducible; ++a) {
            Int rest = w - ap[a];
            if (rest >= Int(1) && s.contains(rest)) reducible = true;
        }
        if (!reducible) s.minimal_generators.push_back(w);
    }
    std::sort(s.minimal_generators.begin(), s.minimal_generators.end());
    return s;
}

Int default_sieve_bound(const GeneratorSet& gens) {
    // Sylvester bound from the first coprime pair, in the given order.
    const auto& a = gens.elements;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (gcd(a[i], a[j]) == Int(1)) return a[i] * a[j];
        }
    }
    // No coprime pair: fall back to B = (n-1)*lcm - sum, always >= f.
    Int l(1), total(0);
    for (const Int& g : a) {
        l = lcm(l, g);
        total += g;
    }
    return Int(static_cast<long long>(a.size()) - 1) * l - total + Int(1);
}

NumericalSemigroup build_semigroup(const GeneratorSet& gens, std::optional<Int> bound) {
    if (!gens.generates_semigroup()) throw NotCofiniteError(to_string(gens.content));
    Int limit = bound ? *bound : default_sieve_bound(gens);
    BitVec bits = sieve_members(gens, limit);
    std::size_t last_gap = bits.find_last_unset(static_cast<std::size_t>(limit.to_int64()));
    Int frobenius = last_gap == BitVec::npos ? Int(-1) : Int(static_cast<long long>(last_gap));
    return semigroup_from_members(bits, frobenius);
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int m) {
    if (m < Int(1) || !s.contains(m)) {
        throw Error("apery_set: " + to_string(m) + " is not a nonzero member");
    }
    const std::size_t mm = static_cast<std::size_t>(m.to_int64());
    std::vector<Int> ap(mm, Int(-1));
    std::size_t filled = 0;
    for (Int l(0); filled < mm; ++l) {
        if (!s.contains(l)) continue;
        std::size_t r = static_cast<std::size_t>((l % m).to_int64());
        if (ap[r] == Int(-1)) {
            ap[r] = l;
            ++filled;
        }
    }
    return ap;
}

std::vector<Int> minimal_generators(const GeneratorSet& gens) {
    return build_semigroup(gens).minimal_generators;
}

bool is_symmetric(const NumericalSemigroup& s) {
    if (s.frobenius == Int(-1)) return true;  // S = N, by convention
    for (Int x(0); x <= s.frobenius; ++x) {
        if (s.contains(x) == s.contains(s.frobenius - x)) return false;
    }
    return true;
}

NumericalSemigroup quotient(const NumericalSemigroup& s, Int k) {
    if (k < Int(1)) throw Error("quotient divisor must be >= 1");
    // The quotient's Frobenius number is at most f(S); membership of k*l
    // for l beyond that follows from the over-f rule, no extra sieve.
    Int f(-1);
    for (Int l(0); l <= s.frobenius; ++l) {
        if (!s.contains(k * l)) f = l;
    }
    const std::size_t n = static_cast<std::size_t>((f + Int(2)).to_int64());
    BitVec bits(n);
    for (std::size_t l = 0; l < n; ++l) {
        if (s.contains(k * Int(static_cast<long long>(l)))) bits.set(l);
    }
    return semigroup_from_members(bits, f);
}

NumericalSemigroup sum(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    std::set<Int> gens(a.minimal_generators.begin(), a.minimal_generators.end());
    gens.insert(b.minimal_generators.begin(), b.minimal_generators.end());
    return build_semigroup(GeneratorSet::of({gens.begin(), gens.end()}));
}

Submonoid Submonoid::of(std::vector<Int> generators) {
    GeneratorSet raw = GeneratorSet::of(std::move(generators));
    std::vector<Int> reduced_gens;
    reduced_gens.reserve(raw.elements.size());
    for (const Int& g : raw.elements) reduced_gens.push_back(g / raw.content);
    Submonoid m;
    m.generators = raw.elements;
    m.content = raw.content;
    m.reduced = build_semigroup(GeneratorSet::of(std::move(reduced_gens)));
    return m;
}

bool Submonoid::contains(Int n) const {
    if (n < Int(0)) return false;
    if (!((n % content) == Int(0))) return false;
    return reduced.contains(n / content);
}

}  // namespace starsemi
