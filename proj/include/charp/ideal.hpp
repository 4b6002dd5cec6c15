#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/polynomial.hpp"

namespace charp {

using Basis = std::shared_ptr<const std::vector<Polynomial>>;

// Finitely generated ideal with a write-once reduced Gröbner basis cache per
// order.  Values are immutable; copies share the cache.  Concurrent fills of
// the same key compute the same (deterministic) basis, so last-writer-wins
// storage is idempotent.
class Ideal {
public:
    Ideal() = default;

    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        gens_.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_ring(ring_, g.ring(), "ideal generator ring");
            gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }

    static Ideal unit(RingPtr ring) {
        Ideal I(ring);
        I.gens_.push_back(Polynomial::constant(ring, 1));
        return I;
    }

    // Construct with a basis the caller guarantees to be the reduced
    // Gröbner basis of (gens) under `ord`; used where a basis is carried
    // across a structure-preserving map instead of recomputed.
    static Ideal with_known_basis(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder ord,
                                  std::vector<Polynomial> basis) {
        Ideal I(std::move(ring), std::move(gens));
        std::lock_guard<std::mutex> lock(I.cache_->mu);
        I.cache_->bases.emplace(ord, std::make_shared<std::vector<Polynomial>>(std::move(basis)));
        return I;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // Reduced Gröbner basis under `ord` (defaults to the ring order).
    Basis groebner(const MonomialOrder* ord_opt = nullptr) const {
        MonomialOrder ord = ord_opt ? *ord_opt : ring_->order();
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->bases.find(ord);
            if (it != cache_->bases.end()) return it->second;
        }
        Basis basis = std::make_shared<std::vector<Polynomial>>(compute_basis(ord));
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto [it, fresh] = cache_->bases.emplace(ord, basis);
        return it->second;
    }

    Polynomial normal_form(const Polynomial& f) const {
        require_same_ring(ring_, f.ring(), "normal_form");
        if (gens_.empty()) return f;
        return gb::reduce_full(f, *groebner());
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool contains_ideal(const Ideal& J) const {
        require_same_ring(ring_, J.ring_, "ideal_contains");
        for (const auto& g : J.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool equals(const Ideal& J) const {
        require_same_ring(ring_, J.ring_, "ideal equality");
        return *groebner() == *J.groebner();
    }

    bool is_unit() const {
        auto B = groebner();
        return B->size() == 1 && (*B)[0].is_constant() && !(*B)[0].is_zero();
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, Basis> bases;
    };

    std::vector<Polynomial> compute_basis(const MonomialOrder& ord) const {
        if (gens_.empty()) return {};
        if (ord == ring_->order()) return gb::buchberger_reduced(gens_);
        // recompute in a ring variant carrying the requested order, then map
        // the result back to canonical form under the original ring
        RingPtr variant = ring_->with_order(ord);
        std::vector<Polynomial> moved;
        moved.reserve(gens_.size());
        for (const auto& g : gens_)
            moved.emplace_back(variant, std::vector<Term>(g.terms()));
        std::vector<Polynomial> basis = gb::buchberger_reduced(std::move(moved));
        std::vector<Polynomial> back;
        back.reserve(basis.size());
        for (auto& b : basis)
            back.emplace_back(ring_, std::vector<Term>(b.terms()));
        return back;
    }

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// --- spec-level operation names -------------------------------------------

inline Polynomial normal_form(const Polynomial& f, const Ideal& I) { return I.normal_form(f); }

// Basis as a plain vector; polynomials are sorted descending by leading
// monomial under the requested order.
inline std::vector<Polynomial> reduced_groebner_basis(const Ideal& I, const MonomialOrder& ord) {
    return *I.groebner(&ord);
}

inline std::vector<Polynomial> reduced_groebner_basis(const Ideal& I) {
    return *I.groebner();
}

// true iff I contains J
inline bool ideal_contains(const Ideal& I, const Ideal& J) { return I.contains_ideal(J); }

inline bool ideal_equal(const Ideal& I, const Ideal& J) { return I.equals(J); }

} // namespace charp
