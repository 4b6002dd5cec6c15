#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {
namespace gb {

// Full normal form of f modulo the (not necessarily Gröbner) list G.
// Every term of the remainder is irreducible by every leading monomial of G.
// G must be monic and sorted; f and G live in a ring whose order is the
// computation order.
inline Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& G) {
    if (G.empty() || f.is_zero()) return f;
    RingPtr ring = f.ring();  // keep alive across the move below
    const std::uint64_t degree_limit = ring->limits().max_total_degree;
    std::vector<Term> out;
    Polynomial h = std::move(f);
    while (!h.is_zero()) {
        // move the irreducible prefix of h to the remainder in one pass
        const auto& terms = h.terms();
        std::size_t k = 0;
        const Polynomial* divisor = nullptr;
        for (; k < terms.size(); ++k) {
            for (const auto& g : G) {
                if (monomial_divides(g.leading_term().mono, terms[k].mono)) {
                    divisor = &g;
                    break;
                }
            }
            if (divisor) break;
            out.push_back(terms[k]);
        }
        if (!divisor) break;
        Term pivot = terms[k];
        if (k > 0) {
            Polynomial rest(ring, std::vector<Term>(terms.begin() + static_cast<std::ptrdiff_t>(k),
                                                    terms.end()));
            h = std::move(rest);
        }
        Monomial quot = monomial_div(pivot.mono, divisor->leading_term().mono);
        h = h - divisor->times_monomial(quot, pivot.coeff);
        if (h.total_degree() > degree_limit)
            fail(ErrorKind::DegreeExplosion, "reduction degree limit");
    }
    return Polynomial(ring, std::move(out));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    // both monic
    const Monomial& lf = f.leading_term().mono;
    const Monomial& lg = g.leading_term().mono;
    Monomial l = monomial_lcm(lf, lg);
    return f.times_monomial(monomial_div(l, lf)) - g.times_monomial(monomial_div(l, lg));
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
};

// Buchberger with the Gebauer–Möller pair criteria and normal selection
// (smallest lcm first).  Input polynomials live in a ring whose order is the
// order to compute under.  Output: the unique reduced basis, monic, sorted
// descending by leading monomial.
inline std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> input) {
    std::vector<Polynomial> G;
    RingPtr ring;
    for (auto& f : input) {
        if (f.is_zero()) continue;
        ring = f.ring();
        G.push_back(f.monic());
    }
    if (G.empty()) return G;
    const auto& ord = ring->order();
    const Limits& lim = ring->limits();

    std::vector<Pair> pairs;

    auto add_poly = [&](const Polynomial& h) {
        const Monomial& lh = h.leading_term().mono;
        std::size_t idx = G.size();
        // collect candidate pairs with the new element
        std::vector<Pair> fresh;
        fresh.reserve(idx);
        for (std::size_t k = 0; k < idx; ++k) {
            Monomial l = monomial_lcm(G[k].leading_term().mono, lh);
            fresh.push_back({k, idx, l, 0});
            fresh.back().deg = fresh.back().lcm.degree();
        }
        // B (chain) criterion: drop old pairs whose lcm is a proper multiple
        // of both mixed lcms with the new element
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            if (monomial_divides(lh, pr.lcm)) {
                const Monomial& li = fresh[pr.i].lcm;
                const Monomial& lj = fresh[pr.j].lcm;
                if (li != pr.lcm && lj != pr.lcm) continue;
            }
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);
        // M criterion: among the fresh pairs remove those whose lcm is a
        // proper multiple of another fresh lcm; F criterion: for equal lcms
        // keep the first
        std::vector<Pair> minimal;
        std::stable_sort(fresh.begin(), fresh.end(), [&](const Pair& a, const Pair& b) {
            return monomial_cmp(a.lcm, b.lcm, ord) == std::strong_ordering::less;
        });
        for (auto& pr : fresh) {
            bool drop = false;
            for (auto& m : minimal) {
                if (m.lcm == pr.lcm || monomial_divides(m.lcm, pr.lcm)) { drop = true; break; }
            }
            if (!drop) minimal.push_back(std::move(pr));
        }
        // product criterion
        for (auto& pr : minimal) {
            if (monomial_coprime(G[pr.i].leading_term().mono, lh)) continue;
            pairs.push_back(std::move(pr));
        }
        G.push_back(h);
        if (G.size() > lim.max_basis)
            fail(ErrorKind::DegreeExplosion, "basis size limit exceeded");
    };

    // seed: insert generators one at a time through the update
    std::vector<Polynomial> seed = std::move(G);
    G.clear();
    // deterministic seeding: sort ascending by leading monomial
    std::stable_sort(seed.begin(), seed.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(a.leading_term().mono, b.leading_term().mono, ord) ==
               std::strong_ordering::less;
    });
    for (auto& f : seed) {
        Polynomial r = reduce_full(f, G);
        if (!r.is_zero()) add_poly(r.monic());
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm under the order
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (monomial_cmp(pairs[k].lcm, pairs[best].lcm, ord) == std::strong_ordering::less)
                best = k;
        Pair pr = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        Polynomial s = s_polynomial(G[pr.i], G[pr.j]);
        Polynomial r = reduce_full(std::move(s), G);
        if (!r.is_zero()) add_poly(r.monic());
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another one's
    std::vector<Polynomial> mins;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Monomial& li = G[i].leading_term().mono;
            const Monomial& lj = G[j].leading_term().mono;
            if (monomial_divides(lj, li) && (li != lj || j < i)) { redundant = true; break; }
        }
        if (!redundant) mins.push_back(G[i]);
    }
    // tail-reduce everything
    std::vector<Polynomial> reduced;
    reduced.reserve(mins.size());
    for (std::size_t i = 0; i < mins.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(mins.size() - 1);
        for (std::size_t j = 0; j < mins.size(); ++j)
            if (j != i) others.push_back(mins[j]);
        Polynomial r = reduce_full(mins[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(a.leading_term().mono, b.leading_term().mono, ord) ==
               std::strong_ordering::greater;
    });
    return reduced;
}

} // namespace gb
} // namespace charp
