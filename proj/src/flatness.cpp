#include "starsemi/flatness.hpp"

#include <algorithm>

namespace starsemi {

std::string flatness_name(FlatnessClass c) {
    switch (c) {
        case FlatnessClass::StronglyFlat: return "strongly-flat";
        case FlatnessClass::Flat: return "flat";
        case FlatnessClass::AlmostFlat: return "almost-flat";
        case FlatnessClass::NonFlat: return "non-flat";
    }
    throw Error("unknown flatness class");
}

GcdDecomposition gcd_decomposition(const GeneratorSet& gens) {
    if (gens.size() < 2) throw Error("gcd_decomposition needs at least two generators");
    if (!gens.generates_semigroup()) throw NotCofiniteError(to_string(gens.content));
    const std::size_t n = gens.size();
    GcdDecomposition d;
    d.q.resize(n);
    d.q_hat.resize(n);
    d.s_hat.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int g(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) g = gcd(g, gens.elements[j]);
        }
        d.q[i] = g;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Int prod(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) prod = prod * d.q[j];
        }
        d.q_hat[i] = prod;
        if (!((gens.elements[i] % prod) == Int(0))) {
            throw Error("gcd decomposition inconsistency at index " + std::to_string(i));
        }
        d.s_hat[i] = gens.elements[i] / prod;
    }
    return d;
}

namespace {

FlatnessClass classify_minimal(const std::vector<Int>& minimal) {
    if (minimal.size() <= 2) return FlatnessClass::StronglyFlat;
    GcdDecomposition d = gcd_decomposition(GeneratorSet::of(minimal));
    bool all_s_one = true, some_s_one = false, some_q_big = false;
    for (std::size_t i = 0; i < d.q.size(); ++i) {
        if (d.s_hat[i] == Int(1)) some_s_one = true;
        else all_s_one = false;
        if (d.q[i] > Int(1)) some_q_big = true;
    }
    if (all_s_one) return FlatnessClass::StronglyFlat;
    if (some_s_one) return FlatnessClass::Flat;
    if (some_q_big) return FlatnessClass::AlmostFlat;
    return FlatnessClass::NonFlat;
}

}  // namespace

FlatnessClass classify(const GeneratorSet& gens) {
    return classify_minimal(minimal_generators(gens));
}

BrauerBound brauer_T(const GeneratorSet& gens) {
    if (!gens.generates_semigroup()) throw NotCofiniteError(to_string(gens.content));
    const auto& a = gens.elements;
    const std::size_t n = a.size();
    std::vector<Int> d(n);
    Int running(0);
    for (std::size_t i = 0; i < n; ++i) {
        running = gcd(running, a[i]);
        d[i] = running;
    }
    Int t = -a[0];  // d_0 = 0 makes the first term -a_1
    for (std::size_t i = 1; i < n; ++i) {
        t += (d[i - 1] / d[i] - Int(1)) * a[i];
    }
    // Brauer-Shockley: equality iff a_{i+1}/d_{i+1} in G(a_1/d_i, ..., a_i/d_i).
    bool equality = true;
    for (std::size_t i = 0; i + 1 < n && equality; ++i) {
        Int target = a[i + 1] / d[i + 1];
        std::vector<Int> scaled;
        scaled.reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) scaled.push_back(a[j] / d[i]);
        BitVec bits = sieve_members(GeneratorSet::of(std::move(scaled)), target);
        if (!bits.test(static_cast<std::size_t>(target.to_int64()))) equality = false;
    }
    return BrauerBound{t, equality};
}

Int brauer_T_best_permutation(const GeneratorSet& gens) {
    if (gens.size() > 8) throw Error("permutation search limited to 8 generators");
    std::vector<Int> perm = gens.elements;
    std::sort(perm.begin(), perm.end());
    Int best = brauer_T(GeneratorSet::of(perm)).t;
    while (std::next_permutation(perm.begin(), perm.end())) {
        Int t = brauer_T(GeneratorSet::of(perm)).t;
        if (t < best) best = t;
    }
    return best;
}

Int bound_B(const GeneratorSet& gens) {
    if (!gens.generates_semigroup()) throw NotCofiniteError(to_string(gens.content));
    Int l(1), total(0);
    for (const Int& g : gens.elements) {
        l = lcm(l, g);
        total += g;
    }
    return Int(static_cast<long long>(gens.size()) - 1) * l - total;
}

Int flat_frobenius(const GeneratorSet& gens) {
    std::vector<Int> minimal = minimal_generators(gens);
    FlatnessClass cls = classify_minimal(minimal);
    if (cls != FlatnessClass::Flat && cls != FlatnessClass::StronglyFlat) {
        throw NotFlatError(flatness_name(cls));
    }
    if (minimal.size() == 1) return Int(-1);  // S = N
    GcdDecomposition d = gcd_decomposition(GeneratorSet::of(minimal));
    Int f(0), prod(1);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        f += (d.q[i] - Int(1)) * minimal[i];
        prod = prod * d.q[i];
    }
    return f - prod;
}

FlatPresentation FlatPresentation::of(std::vector<Int> alphas, std::vector<Int> mults) {
    if (alphas.size() != mults.size()) throw Error("alpha/mult length mismatch");
    if (alphas.size() < 2) {
        throw Error("flat presentation needs at least two alphas; "
                    "use expand_two_generator for G(p,q)");
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < Int(2)) throw Error("alphas must be >= 2");
        if (mults[i] < Int(1)) throw Error("multiplicities must be >= 1");
        if (!(gcd(alphas[i], mults[i]) == Int(1))) {
            throw CoprimalityRequiredError("gcd(alpha, s) != 1 at index " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < alphas.size(); ++j) {
            if (!(gcd(alphas[i], alphas[j]) == Int(1))) {
                throw CoprimalityRequiredError("alphas " + to_string(alphas[i]) + " and " +
                                               to_string(alphas[j]) + " are not coprime");
            }
        }
    }
    return FlatPresentation{std::move(alphas), std::move(mults)};
}

Int FlatPresentation::alpha() const {
    Int prod(1);
    for (const Int& a : alphas) prod = prod * a;
    return prod;
}

Int FlatPresentation::alpha_hat(std::size_t i) const { return alpha() / alphas[i]; }

std::vector<Int> FlatPresentation::generators() const {
    std::vector<Int> gens{alpha()};
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        gens.push_back(mults[i] * alpha_hat(i));
    }
    return gens;
}

NumericalSemigroup FlatPresentation::semigroup() const {
    return build_semigroup(GeneratorSet::of(generators()));
}

Int FlatPresentation::frobenius_by_formula() const {
    Int f(0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        f += mults[i] * (alphas[i] - Int(1)) * alpha_hat(i);
    }
    return f - alpha();
}

FlatPresentation extract_flat_presentation(const GeneratorSet& gens, std::size_t pivot) {
    if (pivot >= gens.size()) throw Error("pivot index out of range");
    std::vector<Int> reordered;
    reordered.push_back(gens.elements[pivot]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != pivot) reordered.push_back(gens.elements[i]);
    }
    GcdDecomposition d = gcd_decomposition(GeneratorSet::of(reordered));
    if (!(d.s_hat[0] == Int(1))) {
        throw NotFlatAtPivotError("s-hat of generator " + to_string(reordered[0]) + " is " +
                                  to_string(d.s_hat[0]));
    }
    std::vector<Int> alphas, mults;
    for (std::size_t i = 1; i < reordered.size(); ++i) {
        if (d.q[i] == Int(1)) {
            throw Error("generator " + to_string(reordered[i]) +
                        " is a multiple of the pivot generator; remove it before extracting");
        }
        alphas.push_back(d.q[i]);
        mults.push_back(d.q[0] * d.s_hat[i]);
    }
    return FlatPresentation::of(std::move(alphas), std::move(mults));
}

GeneratorSet expand_two_generator(Int p, Int q) {
    if (p < Int(2) || q < Int(2) || !(gcd(p, q) == Int(1))) {
        throw Error("expand_two_generator needs coprime p, q >= 2");
    }
    return GeneratorSet::of({p * q, p, q});
}

}  // namespace starsemi
