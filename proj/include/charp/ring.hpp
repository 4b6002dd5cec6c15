#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

// ---------------------------------------------------------------------------
// Coefficient arithmetic in F_p.  Coefficients are stored reduced to [0, p).
// p-th roots of coefficients are the identity (c^p = c), which is what keeps
// the Frobenius root algorithm purely combinatorial.
// ---------------------------------------------------------------------------

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
    return mod_pow(a, p - 2, p);
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Monomial orders
// ---------------------------------------------------------------------------

enum class OrderKind : std::uint8_t { Lex, GrevLex, Block };

// Block orders eliminate the first `block` variables: they compare the
// leading block by grevlex first, then the tail by grevlex.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elimination(std::size_t k) { return {OrderKind::Block, k}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
    friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.block < b.block;
    }

    std::string str() const {
        switch (kind) {
            case OrderKind::Lex: return "lex";
            case OrderKind::GrevLex: return "grevlex";
            case OrderKind::Block: return "block(" + std::to_string(block) + ")";
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// Monomial: dense exponent vector, one entry per ring variable.
// ---------------------------------------------------------------------------

// Exponents stay below this; sums are checked so bracket powers at large q
// cannot silently wrap.
inline constexpr std::uint32_t kMaxExponent = (1u << 30);

struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool is_one() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) fail(ErrorKind::LengthMismatch, "monomial_mul");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a.exps[i]) + b.exps[i];
        if (s >= kMaxExponent) fail(ErrorKind::DegreeExplosion, "exponent overflow");
        r.exps[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.nvars() != b.nvars()) fail(ErrorKind::LengthMismatch, "monomial_divides");
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
    // a / b, assumes b | a
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

inline Monomial monomial_pow(const Monomial& a, std::uint64_t n) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a.exps[i]) * n;
        if (s >= kMaxExponent) fail(ErrorKind::DegreeExplosion, "exponent overflow");
        r.exps[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

// Total-order comparison of monomials.  Throws on length mismatch.
inline std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                         const MonomialOrder& ord) {
    if (a.nvars() != b.nvars()) fail(ErrorKind::LengthMismatch, "monomial_cmp");
    auto lex_range = [&](std::size_t lo, std::size_t hi) -> std::strong_ordering {
        for (std::size_t i = lo; i < hi; ++i)
            if (a.exps[i] != b.exps[i])
                return a.exps[i] <=> b.exps[i];
        return std::strong_ordering::equal;
    };
    auto grevlex_range = [&](std::size_t lo, std::size_t hi) -> std::strong_ordering {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) { da += a.exps[i]; db += b.exps[i]; }
        if (da != db) return da <=> db;
        // degree tie: reverse lex — last variable with differing exponent,
        // smaller exponent wins.
        for (std::size_t i = hi; i-- > lo;)
            if (a.exps[i] != b.exps[i])
                return b.exps[i] <=> a.exps[i];
        return std::strong_ordering::equal;
    };
    switch (ord.kind) {
        case OrderKind::Lex:
            return lex_range(0, a.nvars());
        case OrderKind::GrevLex:
            return grevlex_range(0, a.nvars());
        case OrderKind::Block: {
            std::size_t k = std::min(ord.block, a.nvars());
            auto c = grevlex_range(0, k);
            if (c != std::strong_ordering::equal) return c;
            return grevlex_range(k, a.nvars());
        }
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// RingContext: the ambient polynomial ring F_p[vars] with a default order.
// Immutable; shared by value through a shared_ptr.
// ---------------------------------------------------------------------------

// Resource ceilings threaded through every computation in the ring.
struct Limits {
    std::uint64_t max_total_degree = 2'000'000;  // intermediate polynomial degree
    std::size_t max_basis = 20'000;              // Gröbner basis size
    std::size_t max_generators = 4'000'000;      // product/power generating sets
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    static RingPtr make(std::uint64_t p, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex(),
                        Limits limits = {}) {
        if (!is_prime_u64(p)) fail(ErrorKind::NonPrimeChar, "characteristic " + std::to_string(p) + " is not prime");
        if (p >= (1ull << 31)) fail(ErrorKind::InvalidArgument, "characteristic too large");
        if (vars.empty()) fail(ErrorKind::InvalidArgument, "ring needs at least one variable");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i].empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    fail(ErrorKind::InvalidArgument, "duplicate variable name '" + vars[i] + "'");
        }
        return RingPtr(new RingContext(p, std::move(vars), order, limits));
    }

    std::uint64_t p() const { return p_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    const MonomialOrder& order() const { return order_; }
    const Limits& limits() const { return limits_; }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    // Same mathematical ring; order and limits are part of the identity so
    // canonical forms are unambiguous.
    bool same_as(const RingContext& o) const {
        return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_;
    }

    RingPtr with_order(MonomialOrder ord) const {
        return make(p_, vars_, ord, limits_);
    }

    RingPtr with_limits(Limits lim) const {
        return make(p_, vars_, order_, lim);
    }

    // Ring with one fresh elimination variable prepended; used by
    // intersection/colon.  The '#' makes the name unparseable, so it can
    // never collide with user variables.
    RingPtr with_aux_front() const {
        std::vector<std::string> vs;
        vs.reserve(vars_.size() + 1);
        vs.push_back("#t");
        vs.insert(vs.end(), vars_.begin(), vars_.end());
        return make(p_, std::move(vs), MonomialOrder::elimination(1), limits_);
    }

private:
    RingContext(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order, Limits limits)
        : p_(p), vars_(std::move(vars)), order_(order), limits_(limits) {}

    std::uint64_t p_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    Limits limits_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        fail(ErrorKind::RingMismatch, where);
}

} // namespace charp
