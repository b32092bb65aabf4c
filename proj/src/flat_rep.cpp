#include "starsemi/flat_rep.hpp"

#include <algorithm>

namespace starsemi {

BaseDiophantine base_diophantine(const std::vector<Int>& alphas) {
    if (alphas.size() < 2) throw Error("base_diophantine needs at least two alphas");
    Int alpha(1);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < Int(2)) throw Error("alphas must be >= 2");
        for (std::size_t j = i + 1; j < alphas.size(); ++j) {
            if (!(gcd(alphas[i], alphas[j]) == Int(1))) {
                throw CoprimalityRequiredError("alphas must be pairwise coprime");
            }
        }
        alpha = alpha * alphas[i];
    }
    BaseDiophantine base;
    Int weighted(1);
    for (const Int& a : alphas) {
        Int hat = alpha / a;
        Int omega = mod_floor(-mod_inverse(hat, a), a);
        base.omegas.push_back(omega);
        weighted += omega * hat;
    }
    if (!((weighted % alpha) == Int(0))) throw Error("base Diophantine solution is not integral");
    base.b0 = weighted / alpha;
    if (base.b0 < Int(1)) throw Error("base Diophantine b0 must be positive");
    // alpha * (b0 - sum omega_i/alpha_i) = 1, verified exactly.
    Rational check(base.b0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        check = check - Rational(base.omegas[i], alphas[i]);
    }
    if (!(check * Rational(alpha) == Rational(1))) {
        throw Error("base Diophantine verification failed");
    }
    return base;
}

CanonicalRepresentative canonical_representative(const FlatPresentation& f) {
    BaseDiophantine base = base_diophantine(f.alphas);
    const std::size_t n = f.alphas.size();
    std::vector<Int> offsets(n);
    std::vector<SeifertLeg> legs;
    Int b0 = base.b0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int s = f.mults[i];
        // k_i alpha_i + omega_i~ == 0 (mod s_i), 0 <= k_i < s_i.
        Int k = mod_floor(-base.omegas[i] * mod_inverse(f.alphas[i], s), s);
        offsets[i] = k;
        Int omega = (k * f.alphas[i] + base.omegas[i]) / s;
        legs.push_back(SeifertLeg{f.alphas[i], omega, s});
        b0 += k;
    }
    SSRGraph graph = SSRGraph::of(b0, std::move(legs));

    GraphInvariants inv = graph_invariants(graph);
    Int alpha = f.alpha();
    if (!(inv.o == Int(1)) || !(inv.e == Rational(Int(-1), alpha))) {
        throw Error("canonical representative must have o = 1 and e = -1/alpha");
    }
    if (!is_numerically_gorenstein(graph)) {
        throw Error("canonical representative must be numerically Gorenstein");
    }
    if (!(Rational(alpha) + inv.gamma == Rational(f.frobenius_by_formula()))) {
        throw Error("alpha + gamma disagrees with the flat Frobenius formula");
    }
    return CanonicalRepresentative{std::move(graph), f, std::move(base), std::move(offsets)};
}

namespace {

std::vector<std::pair<Int, Int>> prime_power_factors(Int n) {
    std::vector<std::pair<Int, Int>> factors;
    Int p(2);
    while (p * p <= n) {
        if ((n % p) == Int(0)) {
            Int power(1);
            while ((n % p) == Int(0)) {
                power = power * p;
                n = n / p;
            }
            factors.emplace_back(power, p);
        }
        ++p;
    }
    if (n > Int(1)) factors.emplace_back(n, n);
    return factors;
}

}  // namespace

std::vector<std::pair<Int, Int>> h_group(const CanonicalRepresentative& c) {
    std::vector<std::pair<Int, Int>> summands;
    Int order(1);
    const auto& f = c.presentation;
    for (std::size_t i = 0; i < f.alphas.size(); ++i) {
        Int exponent = f.mults[i] - Int(1);
        if (exponent == Int(0)) continue;
        for (const auto& [pk, p] : prime_power_factors(f.alphas[i])) {
            summands.emplace_back(pk, exponent);
            order = order * checked_pow(pk, exponent);
        }
    }
    std::sort(summands.begin(), summands.end());
    Int h = graph_invariants(c.graph).h;
    if (!(order == h)) {
        throw Error("H order " + to_string(order) + " differs from invariant h " + to_string(h));
    }
    return summands;
}

AbelianCoverData abelian_cover_data(const CanonicalRepresentative& c) {
    const auto& f = c.presentation;
    Int cover_mult(1);
    for (std::size_t i = 0; i < f.alphas.size(); ++i) {
        cover_mult = cover_mult * checked_pow(f.alphas[i], f.mults[i] - Int(1));
    }
    AbelianCoverData data;
    Rational genus_sum(0);
    Rational e_ab(-1);
    for (std::size_t i = 0; i < f.alphas.size(); ++i) {
        const Int a = f.alphas[i];
        const Int s = f.mults[i];
        if (s == Int(1)) {
            Int omega = mod_floor(-mod_inverse(f.alpha_hat(i), a), a);
            data.legs.push_back(SeifertLeg{a, omega, cover_mult});
        } else {
            genus_sum = genus_sum + Rational(s) * (Rational(1) - Rational(Int(1), a));
        }
        // -e_ab = prod alpha_l^{s_l - 2}, taken literally (rational when s_l < 2).
        Int exp = s - Int(2);
        if (exp >= Int(0)) {
            e_ab = e_ab * Rational(checked_pow(a, exp));
        } else {
            e_ab = e_ab / Rational(a);
        }
    }
    data.e_ab = e_ab;
    Rational genus = Rational(1) + Rational(cover_mult, Int(2)) * (genus_sum - Rational(2));
    data.genus = genus.as_integer();
    std::sort(data.legs.begin(), data.legs.end(), [](const SeifertLeg& x, const SeifertLeg& y) {
        return x.alpha < y.alpha;
    });
    return data;
}

namespace {

IcisCoeff generic(std::string name) { return IcisCoeff{IcisCoeff::Generic, std::move(name)}; }
IcisCoeff zero() { return IcisCoeff{IcisCoeff::Zero, {}}; }
IcisCoeff one() { return IcisCoeff{IcisCoeff::One, {}}; }

std::string block_suffix(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

IcisSystem icis_equations(const CanonicalRepresentative& c) {
    const auto& f = c.presentation;
    const std::size_t n = f.alphas.size();
    std::vector<std::size_t> simple, repeated;  // s_i = 1 vs s_i > 1
    for (std::size_t i = 0; i < n; ++i) {
        (f.mults[i] == Int(1) ? simple : repeated).push_back(i);
    }
    const std::size_t K = simple.size();
    IcisSystem sys;
    const bool name_by_block = repeated.size() > 1;
    auto coeff_pair = [&](std::size_t block, std::size_t slot) {
        std::string suffix = name_by_block
                                 ? block_suffix(block) + "_" + std::to_string(slot + 1)
                                 : std::to_string(slot + 1);
        return std::make_pair(generic("a" + suffix), generic("b" + suffix));
    };

    if (K == 0) {
        // Variables x, y are two chosen cover monomials; every block
        // contributes one product equation.
        sys.shape = IcisCase::I;
        std::size_t block_x = repeated[0], slot_x = 0;
        std::size_t block_y = repeated.size() > 1 ? repeated[1] : repeated[0];
        std::size_t slot_y = repeated.size() > 1 ? 0 : 1;
        sys.variables = {"x", "y"};
        for (std::size_t i : repeated) sys.variables.push_back("w" + block_suffix(i));
        for (std::size_t i : repeated) {
            IcisEquation eq{"w" + block_suffix(i), f.alphas[i], {}};
            const std::size_t s = static_cast<std::size_t>(f.mults[i].to_int64());
            for (std::size_t j = 0; j < s; ++j) {
                auto [ca, cb] = coeff_pair(i, j);
                if (i == block_x && j == slot_x) {
                    ca = one();
                    cb = zero();
                } else if (i == block_y && j == slot_y) {
                    ca = zero();
                    cb = one();
                }
                eq.factors.push_back(IcisFactor{IcisTerm{ca, "x", Int(1)},
                                                IcisTerm{cb, "y", Int(1)}});
            }
            sys.equations.push_back(std::move(eq));
        }
    } else if (K == 1) {
        // z belongs to the unique multiplicity-one block, x to a chosen
        // slot of a repeated block; that slot's factor reduces to x.
        sys.shape = IcisCase::II;
        const std::size_t zi = simple[0];
        const std::size_t xi = repeated[0];
        sys.variables = {"z", "x"};
        for (std::size_t i : repeated) sys.variables.push_back("w" + block_suffix(i));
        for (std::size_t i : repeated) {
            IcisEquation eq{"w" + block_suffix(i), f.alphas[i], {}};
            const std::size_t s = static_cast<std::size_t>(f.mults[i].to_int64());
            for (std::size_t j = 0; j < s; ++j) {
                auto [ca, cb] = coeff_pair(i, j);
                if (i == xi && j == 0) {
                    ca = zero();
                    cb = one();
                }
                eq.factors.push_back(IcisFactor{IcisTerm{ca, "z", f.alphas[zi]},
                                                IcisTerm{cb, "x", Int(1)}});
            }
            sys.equations.push_back(std::move(eq));
        }
    } else {
        // x, y come from two multiplicity-one blocks; the remaining
        // multiplicity-one blocks give binomial-style equations, the
        // repeated blocks give product equations in x^a1, y^a2.
        sys.shape = IcisCase::III;
        const std::size_t i1 = simple[0], i2 = simple[1];
        const Int px = f.alphas[i1], py = f.alphas[i2];
        sys.variables = {"x", "y"};
        for (std::size_t idx = 2; idx < simple.size(); ++idx) {
            sys.variables.push_back("z" + block_suffix(simple[idx]));
        }
        for (std::size_t i : repeated) sys.variables.push_back("w" + block_suffix(i));
        for (std::size_t idx = 2; idx < simple.size(); ++idx) {
            const std::size_t i = simple[idx];
            IcisEquation eq{"z" + block_suffix(i), f.alphas[i], {}};
            eq.factors.push_back(
                IcisFactor{IcisTerm{generic("p" + block_suffix(i)), "x", px},
                           IcisTerm{generic("q" + block_suffix(i)), "y", py}});
            sys.equations.push_back(std::move(eq));
        }
        for (std::size_t i : repeated) {
            IcisEquation eq{"w" + block_suffix(i), f.alphas[i], {}};
            const std::size_t s = static_cast<std::size_t>(f.mults[i].to_int64());
            for (std::size_t j = 0; j < s; ++j) {
                auto [ca, cb] = coeff_pair(i, j);
                eq.factors.push_back(IcisFactor{IcisTerm{ca, "x", px}, IcisTerm{cb, "y", py}});
            }
            sys.equations.push_back(std::move(eq));
        }
    }
    if (sys.variables.size() != sys.equations.size() + 2) {
        throw Error("ICIS variable/equation count invariant violated");
    }
    return sys;
}

namespace {

std::string render_term(const IcisTerm& t) {
    std::string power = t.power == Int(1) ? t.base : t.base + "^" + to_string(t.power);
    switch (t.coeff.kind) {
        case IcisCoeff::Zero: return "";
        case IcisCoeff::One: return power;
        case IcisCoeff::Generic: return t.coeff.name + "*" + power;
    }
    throw Error("unknown coefficient kind");
}

std::string render_factor(const IcisFactor& factor) {
    std::string l = render_term(factor.lhs);
    std::string r = render_term(factor.rhs);
    if (l.empty()) return r;
    if (r.empty()) return l;
    return l + " + " + r;
}

}  // namespace

std::string render_icis(const IcisSystem& system) {
    std::string out;
    for (const IcisEquation& eq : system.equations) {
        std::string line = eq.target;
        if (!(eq.target_power == Int(1))) line += "^" + to_string(eq.target_power);
        line += " = ";
        if (eq.factors.size() == 1) {
            line += render_factor(eq.factors[0]);
        } else {
            for (std::size_t i = 0; i < eq.factors.size(); ++i) {
                if (i > 0) line += "*";
                line += "(" + render_factor(eq.factors[i]) + ")";
            }
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace starsemi
