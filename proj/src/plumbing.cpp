#include "starsemi/plumbing.hpp"

namespace starsemi {

std::size_t PlumbingData::valency(std::size_t v) const {
    std::size_t count = 0;
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        if (u != v && intersection[v][u] == Int(1)) ++count;
    }
    return count;
}

std::vector<Rational> solve_exact(const std::vector<std::vector<Int>>& m,
                                  const std::vector<Int>& rhs) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    // Bareiss fraction-free elimination on the augmented matrix.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n] = rhs[i];
    }
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == Int(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == Int(0)) ++swap_row;
            if (swap_row == n) throw Error("singular matrix in exact solve");
            std::swap(a[k], a[swap_row]);
            // Row swap flips the sign of every subsequent pivot; track it
            // by negating the swapped-in row instead.
            for (Int& v : a[k]) v = -v;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = Int(0);
        }
        prev = a[k][k];
    }
    if (a[n - 1][n - 1] == Int(0)) throw Error("singular matrix in exact solve");
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(a[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) {
            acc = acc - Rational(a[ii][j]) * x[j];
        }
        x[ii] = acc / Rational(a[ii][ii]);
    }
    return x;
}

Int chain_determinant(const std::vector<Int>& chain) {
    // Continuant recurrence for the tridiagonal matrix diag(b_i), off -1.
    Int prev(0), cur(1);
    for (const Int& b : chain) {
        Int next = b * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

void check_negative_definite(const std::vector<std::vector<Int>>& m) {
    // Leading principal minors of -M must all be positive. Fraction-free
    // elimination keeps pivots as ratios of consecutive minors.
    const std::size_t n = m.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = -m[i][j];
    }
    Int prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(a[k][k] > Int(0))) {
            throw NotNegativeDefiniteError("leading minor " + std::to_string(k + 1) +
                                           " is not positive");
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = Int(0);
        }
        prev = a[k][k];
    }
}

}  // namespace

std::vector<Rational> z_k_cycle(const PlumbingData& p) {
    const std::size_t n = p.vertex_count();
    std::vector<Int> rhs(n);
    for (std::size_t v = 0; v < n; ++v) rhs[v] = p.euler_weights[v] + Int(2);
    return solve_exact(p.intersection, rhs);
}

PlumbingData plumbing_expand(const SSRGraph& g) {
    PlumbingData p;
    p.euler_weights.push_back(-g.b0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const SeifertLeg& leg : g.legs) {
        std::vector<Int> chain = hj_expand(leg.alpha, leg.omega);
        // Chain re-evaluation: determinant identities alpha = det(chain),
        // omega = det(chain minus first), omega' = det(chain minus last).
        if (!(chain_determinant(chain) == leg.alpha)) {
            throw Error("chain determinant mismatch for alpha");
        }
        std::vector<Int> tail(chain.begin() + 1, chain.end());
        if (!(chain_determinant(tail) == leg.omega)) {
            throw Error("chain determinant mismatch for omega");
        }
        std::vector<Int> head(chain.begin(), chain.end() - 1);
        if (!(chain_determinant(head) == omega_prime(leg.alpha, leg.omega))) {
            throw Error("chain determinant mismatch for omega'");
        }
        for (Int copy(0); copy < leg.mult; ++copy) {
            std::vector<std::size_t> ids;
            std::size_t prev = 0;  // central vertex
            for (const Int& b : chain) {
                std::size_t id = p.euler_weights.size();
                p.euler_weights.push_back(-b);
                edges.emplace_back(prev, id);
                ids.push_back(id);
                prev = id;
            }
            p.chains.push_back(std::move(ids));
        }
    }
    const std::size_t n = p.euler_weights.size();
    p.intersection.assign(n, std::vector<Int>(n, Int(0)));
    for (std::size_t v = 0; v < n; ++v) p.intersection[v][v] = p.euler_weights[v];
    for (const auto& [u, v] : edges) {
        p.intersection[u][v] = Int(1);
        p.intersection[v][u] = Int(1);
    }
    check_negative_definite(p.intersection);
    p.z_k = z_k_cycle(p);

    // Adjunction identity (Z_K, E_v) = e_v + 2, re-checked by direct
    // matrix-vector evaluation.
    for (std::size_t v = 0; v < n; ++v) {
        Rational pairing(0);
        for (std::size_t u = 0; u < n; ++u) {
            pairing = pairing + Rational(p.intersection[v][u]) * p.z_k[u];
        }
        if (!(pairing == Rational(p.euler_weights[v] + Int(2)))) {
            throw Error("Z_K adjunction check failed at vertex " + std::to_string(v));
        }
    }
    // Central coordinate of Z_K is gamma + 1.
    GraphInvariants inv = graph_invariants(g);
    if (!(p.z_k[0] == inv.gamma + Rational(1))) {
        throw Error("central Z_K coordinate " + p.z_k[0].to_string() + " differs from gamma+1");
    }
    return p;
}

}  // namespace starsemi
