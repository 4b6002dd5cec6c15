#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charp/ring.hpp"

namespace charp {

struct Term {
    Monomial mono;
    std::uint64_t coeff = 0;  // in [1, p)
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exps) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Sparse exact polynomial over F_p.  Terms are kept sorted descending under
// the ring's order with no zero coefficients, so equal polynomials have
// identical term vectors.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
        for (auto& t : terms) {
            if (t.mono.nvars() != ring_->nvars())
                fail(ErrorKind::LengthMismatch, "term arity does not match ring");
            std::uint64_t c = t.coeff % ring_->p();
            if (!c) continue;
            auto [it, fresh] = acc.emplace(std::move(t.mono), c);
            if (!fresh) {
                it->second = mod_add(it->second, c, ring_->p());
            }
        }
        terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c) terms_.push_back({m, c});
        sort_terms();
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, std::uint64_t c) {
        c %= ring->p();
        Polynomial f(ring);
        if (c) f.terms_.push_back({Monomial(ring->nvars()), c});
        return f;
    }

    static Polynomial variable(RingPtr ring, std::size_t i, std::uint32_t e = 1) {
        Monomial m(ring->nvars());
        m.exps[i] = e;
        Polynomial f(ring);
        if (e == 0) return constant(std::move(ring), 1);
        f.terms_.push_back({std::move(m), 1});
        return f;
    }

    static Polynomial from_monomial(RingPtr ring, Monomial m, std::uint64_t c = 1) {
        Polynomial f(ring);
        c %= ring->p();
        if (c) f.terms_.push_back({std::move(m), c});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    // Leading term under the ring's own order: first stored term.
    const Term& leading_term() const { return terms_.front(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (!a.terms_.empty()) require_same_ring(a.ring_, b.ring_, "polynomial comparison");
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].mono != b.terms_[i].mono)
                return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = ring_->p() - t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "poly_add");
        return merge(a, b, false);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "poly_sub");
        return merge(a, b, true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "poly_mul");
        const auto& r = a.ring_;
        if (a.is_zero() || b.is_zero()) return zero(r);
        std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = monomial_mul(ta.mono, tb.mono);
                std::uint64_t c = mod_mul(ta.coeff, tb.coeff, r->p());
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh) it->second = mod_add(it->second, c, r->p());
            }
        Polynomial out(r);
        out.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c) out.terms_.push_back({m, c});
        out.sort_terms();
        out.check_degree();
        return out;
    }

    Polynomial scaled(std::uint64_t c) const {
        c %= ring_->p();
        if (!c) return zero(ring_);
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = mod_mul(t.coeff, c, ring_->p());
        return r;
    }

    Polynomial times_monomial(const Monomial& m, std::uint64_t c = 1) const {
        c %= ring_->p();
        if (!c || is_zero()) return zero(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_)
            r.terms_.push_back({monomial_mul(t.mono, m), mod_mul(t.coeff, c, ring_->p())});
        // multiplying by a fixed monomial preserves the order
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(mod_inv(terms_.front().coeff, ring_->p()));
    }

    // f^q for q = p^e: coefficients are fixed, exponents scale (freshman's
    // dream), so this costs O(#terms).
    Polynomial frobenius(std::uint64_t q) const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({monomial_pow(t.mono, q), t.coeff});
        return r;
    }

    // f^n via the base-p expansion of n: n = sum n_j p^j gives
    // f^n = prod (f^{n_j})^{p^j} with every plain power below p.
    Polynomial pow(std::uint64_t n) const {
        const std::uint64_t p = ring_->p();
        Polynomial result = constant(ring_, 1);
        if (n == 0) return result;
        Polynomial small[2] = {constant(ring_, 1), *this};
        std::uint64_t qe = 1;
        std::uint64_t rest = n;
        while (rest) {
            std::uint64_t digit = rest % p;
            if (digit) {
                Polynomial block = constant(ring_, 1);
                // digit < p is small; plain square-and-multiply
                Polynomial base = *this;
                std::uint64_t d = digit;
                while (d) {
                    if (d & 1) block = block * base;
                    d >>= 1;
                    if (d) base = base * base;
                }
                result = result * block.frobenius(qe);
            }
            rest /= p;
            if (rest) {
                if (qe > kMaxExponent) fail(ErrorKind::DegreeExplosion, "pow exponent overflow");
                qe *= p;
            }
        }
        return result;
    }

    std::string str() const;

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
        Polynomial out(ring);
        if (!ring) return out;
        const auto& ord = ring->order();
        const std::uint64_t p = ring->p();
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            auto c = monomial_cmp(a.terms_[i].mono, b.terms_[j].mono, ord);
            if (c == std::strong_ordering::greater) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c == std::strong_ordering::less) {
                Term t = b.terms_[j++];
                if (subtract) t.coeff = p - t.coeff;
                out.terms_.push_back(std::move(t));
            } else {
                std::uint64_t c2 = subtract ? mod_sub(a.terms_[i].coeff, b.terms_[j].coeff, p)
                                            : mod_add(a.terms_[i].coeff, b.terms_[j].coeff, p);
                if (c2) out.terms_.push_back({a.terms_[i].mono, c2});
                ++i;
                ++j;
            }
        }
        while (i < a.terms_.size()) out.terms_.push_back(a.terms_[i++]);
        while (j < b.terms_.size()) {
            Term t = b.terms_[j++];
            if (subtract) t.coeff = p - t.coeff;
            out.terms_.push_back(std::move(t));
        }
        return out;
    }

    void sort_terms() {
        const auto& ord = ring_->order();
        std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
            return monomial_cmp(x.mono, y.mono, ord) == std::strong_ordering::greater;
        });
    }

    void check_degree() const {
        if (!terms_.empty() && total_degree() > ring_->limits().max_total_degree)
            fail(ErrorKind::DegreeExplosion, "total degree limit exceeded");
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline std::string monomial_str(const RingContext& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (!m.exps[i]) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(i);
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

inline std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        std::string ms = monomial_str(*ring_, t.mono);
        if (ms.empty()) {
            s += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            s += ms;
        } else {
            s += std::to_string(t.coeff) + "*" + ms;
        }
    }
    return s;
}

} // namespace charp
