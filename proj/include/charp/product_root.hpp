#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "charp/frobenius.hpp"

namespace charp {

// A formal factor F^n of a product ideal: the base ideal is carried as a
// generator list and the exponent n is never expanded.
struct PowerFactor {
    std::vector<Polynomial> gens;
    std::uint64_t exponent = 0;
};

namespace detail {

// Working set of generators with reduce-to-zero pruning.  Not a Groebner
// basis; it generates the same ideal as everything ever offered to it.
class GenCollector {
public:
    explicit GenCollector(RingPtr ring) : ring_(std::move(ring)) {}

    void offer(Polynomial h) {
        if (h.is_zero()) return;
        Polynomial r = gb::reduce_full(std::move(h), gens_);
        if (r.is_zero()) return;
        gens_.push_back(r.monic());
        // keep heads minimal so reduce_full stays effective
        if (gens_.size() % 32 == 0) reminimalize();
    }

    const std::vector<Polynomial>& gens() const { return gens_; }

    std::vector<Polynomial> take() {
        reminimalize();
        return std::move(gens_);
    }

private:
    void reminimalize() {
        std::stable_sort(gens_.begin(), gens_.end(), [&](const Polynomial& a, const Polynomial& b) {
            return monomial_cmp(a.leading_term().mono, b.leading_term().mono, ring_->order()) ==
                   std::strong_ordering::less;
        });
        std::vector<Polynomial> kept;
        for (auto& g : gens_) {
            Polynomial r = gb::reduce_full(g, kept);
            if (!r.is_zero()) kept.push_back(r.monic());
        }
        gens_ = std::move(kept);
    }

    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

// All residue vectors rho in [0, p-1]^k, grouped by |rho|.
inline const std::vector<std::vector<std::vector<std::uint32_t>>>&
residue_vectors(std::uint64_t p, std::size_t k, std::size_t cap,
                std::map<std::pair<std::uint64_t, std::size_t>,
                         std::vector<std::vector<std::vector<std::uint32_t>>>>& memo) {
    auto key = std::make_pair(p, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    double count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= static_cast<double>(p);
    if (count > static_cast<double>(cap))
        fail(ErrorKind::DegreeExplosion, "residue enumeration too large (p^k)");
    std::vector<std::vector<std::vector<std::uint32_t>>> grouped(k * (p - 1) + 1);
    std::vector<std::uint32_t> rho(k, 0);
    while (true) {
        std::uint64_t s = 0;
        for (auto v : rho) s += v;
        grouped[s].push_back(rho);
        std::size_t i = 0;
        while (i < k && rho[i] + 1 == p) rho[i++] = 0;
        if (i == k) break;
        ++rho[i];
    }
    return memo.emplace(key, std::move(grouped)).first->second;
}

} // namespace detail

// Exact computation of  root( prod_i F_i^{n_i} * (concrete), p^e )  without
// materializing the big powers.  One p-th root is peeled per level using the
// residue decomposition
//   F^n = sum_{rho in [0,p-1]^k, |rho| = n mod p} (F^{(n-|rho|)/p})^[p] * g^rho
// together with root(B^[p] * X, p) = B * root(X, p); terms with equal
// residual exponent vectors are merged between levels.
inline Ideal frobenius_root_of_product(const RingPtr& ring, std::vector<PowerFactor> factors,
                                       std::vector<Polynomial> concrete, std::uint32_t e) {
    const std::uint64_t p = ring->p();
    for (auto& f : factors) {
        std::erase_if(f.gens, [](const Polynomial& g) { return g.is_zero(); });
        if (f.gens.empty() && f.exponent > 0) return Ideal::zero(ring);
    }
    std::erase_if(factors, [](const PowerFactor& f) { return f.exponent == 0; });
    if (concrete.empty()) concrete.push_back(Polynomial::constant(ring, 1));

    if (e == 0) fail(ErrorKind::InvalidArgument, "frobenius_root_of_product needs e >= 1");

    const std::size_t residue_cap = 1u << 22;
    const std::size_t atom_cap = 1u << 26;
    std::map<std::pair<std::uint64_t, std::size_t>,
             std::vector<std::vector<std::vector<std::uint32_t>>>>
        residue_memo;

    using ExpVec = std::vector<std::uint64_t>;
    std::map<ExpVec, std::vector<Polynomial>> terms;
    {
        ExpVec n0(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) n0[i] = factors[i].exponent;
        terms.emplace(std::move(n0), std::move(concrete));
    }

    for (std::uint32_t level = 0; level < e; ++level) {
        // per-factor memo of g^rho products for this level
        std::vector<std::unordered_map<std::string, Polynomial>> prod_memo(factors.size());
        auto base_product = [&](std::size_t fi, const std::vector<std::uint32_t>& rho) -> const Polynomial& {
            std::string key(reinterpret_cast<const char*>(rho.data()), rho.size() * sizeof(std::uint32_t));
            auto it = prod_memo[fi].find(key);
            if (it != prod_memo[fi].end()) return it->second;
            Polynomial prod = Polynomial::constant(ring, 1);
            for (std::size_t j = 0; j < rho.size(); ++j)
                if (rho[j]) prod = prod * factors[fi].gens[j].pow(rho[j]);
            return prod_memo[fi].emplace(std::move(key), std::move(prod)).first->second;
        };

        std::map<ExpVec, detail::GenCollector> next;
        for (auto& [nvec, cgens] : terms) {
            // residue choices per factor for this term
            std::vector<std::vector<const std::vector<std::uint32_t>*>> choices(factors.size());
            std::size_t combos = 1;
            for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                const auto& grouped = detail::residue_vectors(p, factors[fi].gens.size(),
                                                              residue_cap, residue_memo);
                std::uint64_t n = nvec[fi];
                for (std::uint64_t s = n % p; s < grouped.size(); s += p) {
                    if (s > n) break;
                    for (const auto& rho : grouped[s]) choices[fi].push_back(&rho);
                }
                combos *= std::max<std::size_t>(choices[fi].size(), 1);
                if (choices[fi].empty()) combos = 0;
            }
            if (combos == 0) continue;
            if (combos > atom_cap / std::max<std::size_t>(cgens.size(), 1))
                fail(ErrorKind::DegreeExplosion, "product root atom budget exceeded");

            // walk the cartesian product of residue choices
            std::vector<std::size_t> idx(factors.size(), 0);
            while (true) {
                ExpVec svec(factors.size());
                Polynomial base = Polynomial::constant(ring, 1);
                for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                    const auto& rho = *choices[fi][idx[fi]];
                    std::uint64_t s = 0;
                    for (auto v : rho) s += v;
                    svec[fi] = (nvec[fi] - s) / p;
                    if (s) base = base * base_product(fi, rho);
                }
                auto slot = next.find(svec);
                if (slot == next.end())
                    slot = next.emplace(std::move(svec), detail::GenCollector(ring)).first;
                for (const auto& c : cgens) {
                    Polynomial atom = base * c;
                    for (auto& comp : frobenius_root_components(atom, p))
                        slot->second.offer(std::move(comp));
                }
                // advance the cartesian index; the empty-factor case runs once
                std::size_t fi = 0;
                while (fi < factors.size() && ++idx[fi] == choices[fi].size()) idx[fi++] = 0;
                if (fi == factors.size()) break;
            }
        }
        terms.clear();
        for (auto& [svec, collector] : next) terms.emplace(svec, collector.take());
    }

    // expand the small residual powers honestly and union everything
    detail::GenCollector out(ring);
    for (auto& [svec, cgens] : terms) {
        Ideal acc(ring, cgens);
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            if (!svec[fi]) continue;
            acc = ideal_product(acc, ideal_power(Ideal(ring, factors[fi].gens), svec[fi]));
            if (acc.is_zero_ideal()) break;
        }
        for (const auto& g : acc.generators()) out.offer(g);
    }
    return Ideal(ring, out.take());
}

} // namespace charp
