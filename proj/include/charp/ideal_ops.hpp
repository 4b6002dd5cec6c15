#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "charp/ideal.hpp"

namespace charp {

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_sum");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

namespace detail {

// monic + exact-duplicate dedup, preserving first occurrence
inline std::vector<Polynomial> dedup_monic(std::vector<Polynomial> gens) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial m = g.monic();
        bool seen = false;
        for (const auto& h : out)
            if (h == m) { seen = true; break; }
        if (!seen) out.push_back(std::move(m));
    }
    return out;
}

} // namespace detail

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_product");
    const auto& A = I.generators();
    const auto& B = J.generators();
    if (A.empty() || B.empty()) return Ideal::zero(I.ring());
    if (A.size() * B.size() > I.ring()->limits().max_generators)
        fail(ErrorKind::DegreeExplosion, "product generating set exceeds limit");
    std::vector<Polynomial> gens;
    gens.reserve(A.size() * B.size());
    for (const auto& a : A)
        for (const auto& b : B) gens.push_back(a * b);
    return Ideal(I.ring(), detail::dedup_monic(std::move(gens)));
}

// I^n as an honest generator-set power: all n-fold products of generators,
// deduplicated.  n = 0 gives the unit ideal.  Raises DegreeExplosion when the
// generating set would exceed the configured ceiling.
inline Ideal ideal_power(const Ideal& I, std::uint64_t n) {
    const RingPtr& ring = I.ring();
    if (n == 0) return Ideal::unit(ring);
    if (I.is_zero_ideal()) return Ideal::zero(ring);
    const auto& gens = I.generators();
    std::size_t k = gens.size();
    // #compositions of n into k parts = C(n+k-1, k-1); bail out early
    double estimate = 1.0;
    for (std::size_t i = 1; i < k; ++i) estimate *= static_cast<double>(n + i) / static_cast<double>(i);
    if (estimate > static_cast<double>(ring->limits().max_generators))
        fail(ErrorKind::DegreeExplosion, "power generating set exceeds limit (" +
                                             std::to_string(static_cast<std::uint64_t>(estimate)) +
                                             " products)");
    // enumerate exponent vectors alpha with |alpha| = n
    std::vector<Polynomial> result;
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t left, const Polynomial& acc) -> void {
        if (idx + 1 == k) {
            result.push_back(acc * gens[idx].pow(left));
            return;
        }
        for (std::uint64_t a = 0; a <= left; ++a) {
            self(self, idx + 1, left - a, a == 0 ? acc : acc * gens[idx].pow(a));
        }
    };
    rec(rec, 0, n, Polynomial::constant(ring, 1));
    return Ideal(ring, detail::dedup_monic(std::move(result)));
}

// Intersection via a single auxiliary elimination variable:
// I cap J = (t*I + (1-t)*J) cap R, t eliminated by a block order.
inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_intersection");
    const RingPtr& ring = I.ring();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);
    RingPtr ext = ring->with_aux_front();
    auto lift = [&](const Polynomial& f) {
        std::vector<Term> ts;
        ts.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            Monomial m(ext->nvars());
            for (std::size_t i = 0; i < ring->nvars(); ++i) m.exps[i + 1] = t.mono.exps[i];
            ts.push_back({std::move(m), t.coeff});
        }
        return Polynomial(ext, std::move(ts));
    };
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one = Polynomial::constant(ext, 1);
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size() + J.generators().size());
    for (const auto& f : I.generators()) gens.push_back(t * lift(f));
    Polynomial omt = one - t;
    for (const auto& g : J.generators()) gens.push_back(omt * lift(g));
    std::vector<Polynomial> basis = gb::buchberger_reduced(std::move(gens));
    std::vector<Polynomial> kept;
    for (const auto& b : basis) {
        bool has_t = false;
        for (const auto& term : b.terms())
            if (term.mono.exps[0]) { has_t = true; break; }
        if (has_t) continue;
        std::vector<Term> ts;
        ts.reserve(b.terms().size());
        for (const auto& term : b.terms()) {
            Monomial m(ring->nvars());
            for (std::size_t i = 0; i < ring->nvars(); ++i) m.exps[i] = term.mono.exps[i + 1];
            ts.push_back({std::move(m), term.coeff});
        }
        kept.emplace_back(ring, std::move(ts));
    }
    return Ideal(ring, std::move(kept));
}

// Exact division by a single polynomial; the caller promises divisibility.
inline Polynomial poly_div_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero polynomial");
    const RingPtr& ring = f.ring();
    Polynomial h = f;
    std::vector<Term> q;
    const std::uint64_t lc_inv = mod_inv(g.leading_term().coeff, ring->p());
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        if (!monomial_divides(g.leading_term().mono, lt.mono))
            fail(ErrorKind::InvalidArgument, "poly_div_exact: not divisible");
        Monomial qm = monomial_div(lt.mono, g.leading_term().mono);
        std::uint64_t qc = mod_mul(lt.coeff, lc_inv, ring->p());
        q.push_back({qm, qc});
        h = h - g.times_monomial(qm, qc);
    }
    return Polynomial(ring, std::move(q));
}

// (I : g) for a single polynomial: (I cap (g)) scaled by 1/g.
inline Ideal ideal_colon_poly(const Ideal& I, const Polynomial& g) {
    require_same_ring(I.ring(), g.ring(), "ideal_colon");
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "colon by zero polynomial");
    Ideal cap = ideal_intersection(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> gens;
    gens.reserve(cap.generators().size());
    for (const auto& h : cap.generators()) gens.push_back(poly_div_exact(h, g));
    return Ideal(I.ring(), std::move(gens));
}

// (I : J), computed generator by generator over J.
inline Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_colon");
    if (J.is_zero_ideal()) fail(ErrorKind::InvalidArgument, "colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : J.generators()) {
        Ideal c = ideal_colon_poly(I, g);
        if (first) {
            acc = std::move(c);
            first = false;
        } else {
            acc = ideal_intersection(acc, c);
        }
        if (acc.is_zero_ideal()) break;
    }
    return acc;
}

// Krull dimension of R/I via maximal independent variable sets modulo the
// leading-term ideal.  Requires I proper.
inline std::size_t krull_dimension(const Ideal& I) {
    const RingPtr& ring = I.ring();
    std::size_t n = ring->nvars();
    if (I.is_zero_ideal()) return n;
    auto B = I.groebner();
    if (I.is_unit()) fail(ErrorKind::UnitIdeal, "krull_dimension of the unit ideal");
    std::vector<Monomial> lts;
    lts.reserve(B->size());
    for (const auto& b : *B) lts.push_back(b.leading_term().mono);
    std::size_t best = 0;
    // n <= ~16 in practice; enumerate subsets
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t sz = static_cast<std::size_t>(__builtin_popcount(mask));
        if (sz <= best) continue;
        bool independent = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i)
                if (m.exps[i] && !(mask & (1u << i))) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = sz;
    }
    return best;
}

inline std::size_t ideal_height(const Ideal& I) {
    return I.ring()->nvars() - krull_dimension(I);
}

} // namespace charp
