#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "charp/test_ideal.hpp"

namespace charp {
namespace detail {

// Exact rational scalar for the oracle's little LPs.
struct Frac {
    long long n = 0, d = 1;

    Frac() = default;
    Frac(long long nn, long long dd = 1) {
        if (dd == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
        if (dd < 0) { nn = -nn; dd = -dd; }
        long long g = std::gcd(nn < 0 ? -nn : nn, dd);
        if (g > 1) { nn /= g; dd /= g; }
        n = nn;
        d = dd;
    }

    static Frac from128(__int128 nn, __int128 dd) {
        if (dd < 0) { nn = -nn; dd = -dd; }
        __int128 a = nn < 0 ? -nn : nn, b = dd;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { nn /= a; dd /= a; }
        if (nn > INT64_MAX || nn < INT64_MIN || dd > INT64_MAX)
            fail(ErrorKind::DegreeExplosion, "oracle LP coefficient overflow");
        Frac f;
        f.n = static_cast<long long>(nn);
        f.d = static_cast<long long>(dd);
        return f;
    }

    bool zero() const { return n == 0; }
    bool pos() const { return n > 0; }
    bool neg() const { return n < 0; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return from128(static_cast<__int128>(a.n) * b.d + static_cast<__int128>(b.n) * a.d,
                       static_cast<__int128>(a.d) * b.d);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return from128(static_cast<__int128>(a.n) * b.d - static_cast<__int128>(b.n) * a.d,
                       static_cast<__int128>(a.d) * b.d);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return from128(static_cast<__int128>(a.n) * b.n, static_cast<__int128>(a.d) * b.d);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.zero()) fail(ErrorKind::InvalidArgument, "division by zero");
        return from128(static_cast<__int128>(a.n) * b.d, static_cast<__int128>(a.d) * b.n);
    }
    friend bool operator<(const Frac& a, const Frac& b) { return (a - b).neg(); }
};

// Dense two-phase simplex, Bland's rule, exact arithmetic.  Maximizes c.x
// subject to Ax = b, x >= 0 with b >= 0.  Returns false when infeasible;
// `value` receives the optimum (problems fed here are always bounded).
inline bool simplex_max(std::vector<std::vector<Frac>> A, std::vector<Frac> b, std::vector<Frac> c,
                        Frac& value) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    // extend with m artificial columns
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < m; ++r) A[r].push_back(Frac(r == i ? 1 : 0));
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](std::size_t row, std::size_t col) {
        Frac pv = A[row][col];
        for (auto& x : A[row]) x = x / pv;
        b[row] = b[row] / pv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || A[r][col].zero()) continue;
            Frac f = A[r][col];
            for (std::size_t j = 0; j < A[r].size(); ++j) A[r][j] = A[r][j] - f * A[row][j];
            b[r] = b[r] - f * b[row];
        }
        basis[row] = col;
    };

    auto run = [&](const std::vector<Frac>& obj, std::size_t ncols) -> Frac {
        while (true) {
            // reduced costs z_j - c_j under the current basis
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                Frac red = obj[j];
                for (std::size_t r = 0; r < m; ++r)
                    if (!A[r][j].zero()) red = red - obj[basis[r]] * A[r][j];
                if (red.pos()) { enter = j; break; }  // Bland: first improving column
            }
            if (enter == ncols) break;
            std::size_t leave = m;
            Frac best;
            for (std::size_t r = 0; r < m; ++r) {
                if (!A[r][enter].pos()) continue;
                Frac ratio = b[r] / A[r][enter];
                if (leave == m || ratio < best ||
                    (!(best < ratio) && basis[r] < basis[leave]))
                    { leave = r; best = ratio; }
            }
            if (leave == m) return Frac(1, 1);  // unbounded; callers treat as "large"
            pivot(leave, enter);
        }
        Frac v(0);
        for (std::size_t r = 0; r < m; ++r) v = v + obj[basis[r]] * b[r];
        return v;
    };

    // phase 1: minimize artificial sum == maximize -(sum of artificials)
    std::vector<Frac> obj1(n + m, Frac(0));
    for (std::size_t j = n; j < n + m; ++j) obj1[j] = Frac(-1);
    Frac art = run(obj1, n + m);
    if (art.neg()) return false;  // infeasible
    // drive artificials out of the basis where possible
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) continue;
        bool moved = false;
        for (std::size_t j = 0; j < n && !moved; ++j)
            if (!A[r][j].zero()) { pivot(r, j); moved = true; }
        // an all-zero row is a redundant constraint; leaving the artificial
        // basic at value zero is harmless for phase 2
    }
    std::vector<Frac> obj2(n + m, Frac(0));
    for (std::size_t j = 0; j < n; ++j) obj2[j] = c[j];
    value = run(obj2, n);
    return true;
}

} // namespace detail

// Newton-polyhedron description of tau for monomial combinations: the
// monomial ideal of all x^u with u + (1,...,1) interior to
// sum_i t_i Newt(a_i), enumerated up to degree_bound.  Used as an
// implementation-independent cross-check.
inline Ideal monomial_test_ideal_oracle(const FormalCombination& at, std::uint64_t degree_bound,
                                        const RingPtr& ring) {
    using detail::Frac;
    const std::size_t n = ring->nvars();
    // exponent vectors per factor
    std::vector<std::vector<std::vector<std::uint32_t>>> gens(at.factors.size());
    for (std::size_t i = 0; i < at.factors.size(); ++i) {
        const Ideal& a = at.factors[i].first;
        require_same_ring(ring, a.ring(), "monomial_test_ideal_oracle");
        for (const auto& g : a.generators()) {
            if (g.size() != 1)
                fail(ErrorKind::InvalidArgument, "oracle factor is not a monomial ideal");
            gens[i].push_back(g.terms()[0].mono.exps);
        }
        if (gens[i].empty())
            fail(ErrorKind::InvalidArgument, "oracle factor is the zero ideal");
    }
    // S: one scaled vertex per choice of generator in each factor
    std::vector<std::vector<Frac>> S;
    {
        std::vector<std::size_t> idx(at.factors.size(), 0);
        while (true) {
            std::vector<Frac> point(n, Frac(0));
            for (std::size_t i = 0; i < at.factors.size(); ++i) {
                const Rational& t = at.factors[i].second;
                for (std::size_t j = 0; j < n; ++j)
                    point[j] = point[j] + Frac(t.num, t.den) * Frac(gens[i][idx[i]][j]);
            }
            S.push_back(std::move(point));
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == gens[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
            if (idx.empty()) break;
        }
    }

    // interior test: maximize delta with u+1 - delta*1 in conv(S) + orthant
    auto interior = [&](const std::vector<std::uint32_t>& u) -> bool {
        const std::size_t k = S.size();
        const std::size_t ncols = k + n + 2;  // lambda, r, delta+, delta-
        std::vector<std::vector<Frac>> A(n + 1, std::vector<Frac>(ncols, Frac(0)));
        std::vector<Frac> b(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t s = 0; s < k; ++s) A[j][s] = S[s][j];
            A[j][k + j] = Frac(1);
            A[j][k + n] = Frac(1);
            A[j][k + n + 1] = Frac(-1);
            b[j] = Frac(static_cast<long long>(u[j]) + 1);
        }
        for (std::size_t s = 0; s < k; ++s) A[n][s] = Frac(1);
        b[n] = Frac(1);
        std::vector<Frac> c(ncols, Frac(0));
        c[k + n] = Frac(1);
        c[k + n + 1] = Frac(-1);
        Frac value;
        if (!detail::simplex_max(std::move(A), std::move(b), std::move(c), value)) return false;
        return value.pos();
    };

    // enumerate monomials by increasing degree, skipping anything already
    // above a found generator
    std::vector<Monomial> found;
    auto dominated = [&](const std::vector<std::uint32_t>& u) {
        for (const auto& f : found) {
            bool ge = true;
            for (std::size_t j = 0; j < n; ++j)
                if (u[j] < f.exps[j]) { ge = false; break; }
            if (ge) return true;
        }
        return false;
    };
    std::vector<std::uint32_t> u(n, 0);
    std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t pos, std::uint64_t left) {
        if (pos + 1 == n) {
            u[pos] = static_cast<std::uint32_t>(left);
            if (!dominated(u) && interior(u)) found.push_back(Monomial(u));
            u[pos] = 0;
            return;
        }
        for (std::uint64_t a = 0; a <= left; ++a) {
            u[pos] = static_cast<std::uint32_t>(a);
            walk(pos + 1, left - a);
        }
        u[pos] = 0;
    };
    for (std::uint64_t d = 0; d <= degree_bound; ++d) walk(0, d);

    // minimal elements only
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < found.size(); ++j)
            if (i != j && monomial_divides(found[j], found[i]) &&
                (found[j] != found[i] || j < i)) { redundant = true; break; }
        if (!redundant) minimal.push_back(found[i]);
    }

    // Truncation check.  A minimal generator u satisfies u_j <= W_j where
    // W_j bounds the j-th coordinate over the scaled vertex sums: above that
    // the r-part of the decomposition absorbs a step down, contradicting
    // minimality.  Enumeration is complete once degree_bound >= sum W_j;
    // otherwise any uncovered shell monomial inside the box signals possible
    // generators beyond the bound.
    {
        std::vector<std::uint64_t> W(n, 0);
        for (const auto& s : S)
            for (std::size_t j = 0; j < n; ++j) {
                auto ceil_s = static_cast<std::uint64_t>((s[j].n + s[j].d - 1) / s[j].d);
                W[j] = std::max(W[j], ceil_s + 1);
            }
        std::uint64_t Wsum = 0;
        for (auto w : W) Wsum += w;
        if (degree_bound < Wsum) {
            bool uncovered = false;
            std::function<void(std::size_t, std::uint64_t)> shell = [&](std::size_t pos,
                                                                        std::uint64_t left) {
                if (uncovered) return;
                if (pos + 1 == n) {
                    if (left > W[pos]) return;
                    u[pos] = static_cast<std::uint32_t>(left);
                    bool inF = false;
                    for (const auto& f : minimal)
                        if (monomial_divides(f, Monomial(u))) { inF = true; break; }
                    if (!inF) uncovered = true;
                    u[pos] = 0;
                    return;
                }
                std::uint64_t top = std::min(left, W[pos]);
                for (std::uint64_t a = 0; a <= top && !uncovered; ++a) {
                    u[pos] = static_cast<std::uint32_t>(a);
                    shell(pos + 1, left - a);
                }
                u[pos] = 0;
            };
            shell(0, degree_bound);
            if (uncovered)
                fail(ErrorKind::DegreeBoundTooSmall,
                     "degree bound " + std::to_string(degree_bound) + " may truncate the answer");
        }
    }

    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (auto& m : minimal) out.push_back(Polynomial::from_monomial(ring, m));
    return Ideal(ring, std::move(out));
}

} // namespace charp
