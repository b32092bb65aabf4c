#include "starsemi/seifert.hpp"

#include <algorithm>

namespace starsemi {

SSRGraph SSRGraph::of(Int b0, std::vector<SeifertLeg> legs) {
    if (b0 < Int(1)) throw Error("central weight b0 must be >= 1, got " + to_string(b0));
    for (const SeifertLeg& leg : legs) {
        if (leg.alpha < Int(2)) throw Error("leg alpha must be >= 2, got " + to_string(leg.alpha));
        if (leg.omega < Int(1) || leg.omega >= leg.alpha) {
            throw Error("leg omega must satisfy 0 < omega < alpha, got (" + to_string(leg.alpha) +
                        "," + to_string(leg.omega) + ")");
        }
        if (!(gcd(leg.alpha, leg.omega) == Int(1))) {
            throw Error("leg (" + to_string(leg.alpha) + "," + to_string(leg.omega) +
                        ") is not reduced");
        }
        if (leg.mult < Int(1)) throw Error("leg multiplicity must be >= 1");
    }
    std::sort(legs.begin(), legs.end(), [](const SeifertLeg& a, const SeifertLeg& b) {
        if (!(a.alpha == b.alpha)) return a.alpha < b.alpha;
        return a.omega < b.omega;
    });
    std::vector<SeifertLeg> merged;
    for (const SeifertLeg& leg : legs) {
        if (!merged.empty() && merged.back().alpha == leg.alpha &&
            merged.back().omega == leg.omega) {
            merged.back().mult += leg.mult;
        } else {
            merged.push_back(leg);
        }
    }
    SSRGraph g{b0, std::move(merged)};
    if (!(g.euler() < Rational(0))) {
        throw NotNegativeDefiniteError("e = " + g.euler().to_string() + " >= 0");
    }
    return g;
}

Int SSRGraph::total_legs() const {
    Int d(0);
    for (const SeifertLeg& leg : legs) d += leg.mult;
    return d;
}

Rational SSRGraph::euler() const {
    Rational e(-b0);
    for (const SeifertLeg& leg : legs) {
        e = e + Rational(leg.mult * leg.omega, leg.alpha);
    }
    return e;
}

std::vector<Int> hj_expand(Int alpha, Int omega) {
    if (alpha < Int(2) || omega < Int(1) || omega >= alpha || !(gcd(alpha, omega) == Int(1))) {
        throw Error("hj_expand: invalid pair (" + to_string(alpha) + "," + to_string(omega) + ")");
    }
    std::vector<Int> expansion;
    Int a = alpha, w = omega;
    while (w > Int(0)) {
        Int b = ceil_div(a, w);
        expansion.push_back(b);
        Int next = b * w - a;
        a = w;
        w = next;
    }
    return expansion;
}

Int omega_prime(Int alpha, Int omega) { return mod_inverse(omega, alpha); }

GraphInvariants graph_invariants(const SSRGraph& g) {
    GraphInvariants inv;
    inv.e = g.euler();
    if (!(inv.e < Rational(0))) {
        throw NotNegativeDefiniteError("e = " + inv.e.to_string() + " >= 0");
    }
    inv.d = g.total_legs();
    inv.alpha_lcm = Int(1);
    Rational alpha_prod(1);
    Rational inv_alpha_sum(0);
    for (const SeifertLeg& leg : g.legs) {
        inv.alpha_lcm = lcm(inv.alpha_lcm, leg.alpha);
        alpha_prod = alpha_prod * Rational(checked_pow(leg.alpha, leg.mult));
        inv_alpha_sum = inv_alpha_sum + Rational(leg.mult, leg.alpha);
    }
    Rational abs_e = -inv.e;
    inv.h = (alpha_prod * abs_e).as_integer();
    inv.o = (Rational(inv.alpha_lcm) * abs_e).as_integer();
    if (inv.h < Int(1) || inv.o < Int(1)) throw Error("h and o must be positive");
    inv.gamma = (Rational(inv.d - Int(2)) - inv_alpha_sum) / abs_e;
    return inv;
}

Int n_value(const SSRGraph& g, Int ell) {
    Int n = g.b0 * ell;
    for (const SeifertLeg& leg : g.legs) {
        n -= leg.mult * ceil_div(ell * leg.omega, leg.alpha);
    }
    return n;
}

NumericalSemigroup semigroup_of_graph(const SSRGraph& g) {
    GraphInvariants inv = graph_invariants(g);
    // Scan to max(alpha, floor(alpha + gamma)); beyond that N(l) >= 0.
    Int bound = inv.alpha_lcm;
    Int ag = (Rational(inv.alpha_lcm) + inv.gamma).floor();
    if (ag > bound) bound = ag;
    if (bound + Int(1) > sieve_limit()) {
        throw Error("semigroup scan bound " + to_string(bound) + " exceeds SS_MAX_SIEVE limit " +
                    to_string(sieve_limit()));
    }
    const std::size_t n = static_cast<std::size_t>((bound + Int(1)).to_int64());
    BitVec bits(n);
    Int frobenius(-1);
    for (std::size_t l = 0; l < n; ++l) {
        if (n_value(g, Int(static_cast<long long>(l))) >= Int(0)) {
            bits.set(l);
        } else {
            frobenius = Int(static_cast<long long>(l));
        }
    }
    return semigroup_from_members(bits, frobenius);
}

GraphFrobenius frobenius_of_graph(const SSRGraph& g) {
    GraphInvariants inv = graph_invariants(g);
    NumericalSemigroup s = semigroup_of_graph(g);
    Rational check_s = inv.gamma + (Rational(-1) / inv.e) - Rational(s.frobenius);
    if (inv.o == Int(1) && is_numerically_gorenstein(g)) {
        Rational expected = Rational(inv.alpha_lcm) + inv.gamma;
        if (!(Rational(s.frobenius) == expected)) {
            throw Error("Frobenius formula mismatch: scanned " + to_string(s.frobenius) +
                        ", alpha+gamma = " + expected.to_string());
        }
    }
    return GraphFrobenius{s.frobenius, check_s};
}

bool is_numerically_gorenstein(const SSRGraph& g) {
    GraphInvariants inv = graph_invariants(g);
    if (!inv.gamma.is_integer()) return false;
    Int gamma = inv.gamma.as_integer();
    for (const SeifertLeg& leg : g.legs) {
        if (!(mod_floor(gamma, leg.alpha) == omega_prime(leg.alpha, leg.omega))) return false;
    }
    return true;
}

SSRGraph sum_graphs(const SSRGraph& a, const SSRGraph& b) {
    std::vector<SeifertLeg> legs = a.legs;
    legs.insert(legs.end(), b.legs.begin(), b.legs.end());
    return SSRGraph::of(a.b0 + b.b0, std::move(legs));
}

SSRGraph scale_graph(const SSRGraph& g, Int k) {
    if (k < Int(1)) throw Error("scale factor must be >= 1");
    std::vector<SeifertLeg> legs = g.legs;
    for (SeifertLeg& leg : legs) leg.mult = leg.mult * k;
    return SSRGraph::of(g.b0 * k, std::move(legs));
}

SSRGraph quotient_graph(const SSRGraph& g, Int k) {
    if (k < Int(1)) throw Error("quotient divisor must be >= 1");
    std::vector<SeifertLeg> legs;
    Int b0 = g.b0 * k;
    for (const SeifertLeg& leg : g.legs) {
        Int r = mod_floor(k * leg.omega, leg.alpha);
        b0 -= leg.mult * ((k * leg.omega - r) / leg.alpha);
        if (r == Int(0)) continue;  // ceil(r l / alpha) vanishes, leg disappears
        Int common = gcd(r, leg.alpha);
        legs.push_back(SeifertLeg{leg.alpha / common, r / common, leg.mult});
    }
    return SSRGraph::of(b0, std::move(legs));
}

SSRGraph plane_curve_representative(Int p, Int q, Int k) {
    if (p < Int(2) || q < Int(2) || !(gcd(p, q) == Int(1))) {
        throw Error("plane_curve_representative needs coprime p, q >= 2");
    }
    if (k < Int(1)) throw Error("multiplicity k must be >= 1");
    Int omega_p = mod_floor(-mod_inverse(q, p), p);
    Int omega_q = mod_floor(-mod_inverse(p, q), q);
    if (!(p * q - omega_p * q - omega_q * p == Int(1))) {
        throw Error("Diophantine solution check failed");
    }
    return SSRGraph::of(k, {SeifertLeg{p, omega_p, k}, SeifertLeg{q, omega_q, k}});
}

}  // namespace starsemi
