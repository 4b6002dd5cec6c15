#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "charp/ideal.hpp"
#include "charp/ideal_ops.hpp"

namespace charp {

// q = p^e, validated against the ring characteristic and exponent budget.
struct FrobeniusLevel {
    std::uint32_t e = 0;
    std::uint64_t q = 1;

    static FrobeniusLevel make(const RingPtr& ring, std::uint32_t e) {
        FrobeniusLevel lvl;
        lvl.e = e;
        lvl.q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            if (lvl.q > kMaxExponent / ring->p())
                fail(ErrorKind::DegreeExplosion, "p^e exceeds the exponent budget");
            lvl.q *= ring->p();
        }
        return lvl;
    }
};

// J^[q]: generated by generator q-th powers.  The reduced Gröbner basis maps
// to the reduced Gröbner basis under Frobenius (flatness of F over a regular
// ring), so the bracket's basis is carried over instead of recomputed.
inline Ideal bracket_power(const Ideal& J, const FrobeniusLevel& lvl) {
    const RingPtr& ring = J.ring();
    if (lvl.q == 1) return J;
    std::vector<Polynomial> gens;
    gens.reserve(J.generators().size());
    for (const auto& g : J.generators()) gens.push_back(g.frobenius(lvl.q));
    if (J.is_zero_ideal()) return Ideal(ring, std::move(gens));
    auto basis = J.groebner();
    std::vector<Polynomial> bracket_basis;
    bracket_basis.reserve(basis->size());
    for (const auto& b : *basis) bracket_basis.push_back(b.frobenius(lvl.q));
    return Ideal::with_known_basis(ring, std::move(gens), ring->order(), std::move(bracket_basis));
}

// The alpha-components of f = sum_alpha g_alpha^q x^alpha with alpha < q
// componentwise.  Over F_p the coefficient q-th root is the identity, so this
// is pure exponent bookkeeping.
inline std::vector<Polynomial> frobenius_root_components(const Polynomial& f, std::uint64_t q) {
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> buckets;
    for (const auto& t : f.terms()) {
        Monomial residue(t.mono.nvars());
        Monomial quotient(t.mono.nvars());
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            residue.exps[i] = static_cast<std::uint32_t>(t.mono.exps[i] % q);
            quotient.exps[i] = static_cast<std::uint32_t>(t.mono.exps[i] / q);
        }
        buckets[residue].push_back({std::move(quotient), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& [residue, terms] : buckets)
        out.emplace_back(f.ring(), std::move(terms));
    return out;
}

namespace detail {

// Cheap generator compression: monic, dedup, and drop monomials that are
// multiples of another collected monomial.  Keeps root outputs small without
// a Gröbner call.
inline std::vector<Polynomial> compress_generators(std::vector<Polynomial> gens) {
    std::vector<Polynomial> monomials, rest;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial m = g.monic();
        if (m.size() == 1)
            monomials.push_back(std::move(m));
        else
            rest.push_back(std::move(m));
    }
    // minimal monomials only
    std::sort(monomials.begin(), monomials.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.leading_term().mono.degree() < b.leading_term().mono.degree();
    });
    std::vector<Polynomial> kept;
    for (auto& m : monomials) {
        bool covered = false;
        for (const auto& k : kept)
            if (monomial_divides(k.leading_term().mono, m.leading_term().mono)) { covered = true; break; }
        if (!covered) kept.push_back(std::move(m));
    }
    for (auto& r : rest) {
        bool seen = false;
        for (const auto& k : kept)
            if (k == r) { seen = true; break; }
        // drop polynomials every one of whose monomials is covered by a kept
        // generator dividing it?  Not sound in general; only exact dupes go.
        if (!seen) kept.push_back(std::move(r));
    }
    return kept;
}

} // namespace detail

// J^[1/q]: the smallest ideal K with J contained in K^[q].  Additive in J, so
// it is computed generator by generator and summed.
inline Ideal frobenius_root(const Ideal& J, const FrobeniusLevel& lvl) {
    const RingPtr& ring = J.ring();
    if (lvl.q == 1) return J;
    std::vector<Polynomial> gens;
    for (const auto& g : J.generators()) {
        auto comps = frobenius_root_components(g, lvl.q);
        gens.insert(gens.end(), comps.begin(), comps.end());
    }
    return Ideal(ring, detail::compress_generators(std::move(gens)));
}

} // namespace charp
