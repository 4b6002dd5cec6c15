#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charp/linkage.hpp"
#include "charp/test_ideal.hpp"

namespace charp {

// The two sides of the restriction containment at a fixed prime:
// lhs lifts tau_{fR}(R, aR^t) (computed through the Frobenius iteration on
// (I^[q]:I)), rhs is tau_I(S, a^t) + I.
struct RestrictionReport {
    Ideal I;
    FormalCombination at;
    std::uint64_t seed = 0;
    std::uint32_t e_max = 0;
    std::vector<Polynomial> fs;
    Polynomial link_f;
    TestElement te;
    Ideal lhs;
    Ideal rhs;
    bool containment_holds = false;
    bool equality_holds = false;
    TauComputation lhs_comp;
    TauComputation rhs_comp;
};

// Stabilized value of  root(gamma^N f^{q-1} (I^[q]:I) prod a_i^{ceil(t_i q)}, q) + I.
// The full colon (I^[q]:I) is recomputed at each level; it is exactly the
// object in the annihilation condition, and for Gorenstein I it stays small.
inline TauComputation quotient_divisorial_test_ideal_computation(
    const Ideal& I, const Polynomial& f, const FormalCombination& at, const TestElement& te,
    std::uint32_t e_max) {
    const RingPtr& ring = I.ring();
    if (I.is_zero_ideal() || I.is_unit())
        fail(ErrorKind::InvalidArgument, "quotient_divisorial_test_ideal needs a proper nonzero ideal");
    if (f.is_zero() || !ideal_colon_poly(I, f).equals(I))
        fail(ErrorKind::ZeroDivisorGamma, "f is a zerodivisor modulo I");
    detail::require_gamma_regular(I, te.gamma, "quotient_divisorial_test_ideal");
    auto build = [&](std::uint32_t e, std::uint64_t N) -> Ideal {
        FrobeniusLevel lvl = FrobeniusLevel::make(ring, e);
        Ideal bracket = bracket_power(I, lvl);
        Ideal colon = ideal_colon(bracket, I);
        std::vector<PowerFactor> factors;
        if (!te.gamma.is_constant()) factors.push_back({{te.gamma}, N});
        if (!f.is_constant()) factors.push_back({{f}, lvl.q - 1});
        for (const auto& [a, t] : at.factors)
            factors.push_back({a.generators(), t.ceil_mul(lvl.q)});
        std::vector<Polynomial> concrete = colon.generators();
        if (te.gamma.is_constant()) {
            Polynomial scale = te.gamma.pow(N);
            if (f.is_constant()) scale = scale * f.pow(lvl.q - 1);
            for (auto& g : concrete) g = g * scale;
        } else if (f.is_constant()) {
            Polynomial scale = f.pow(lvl.q - 1);
            for (auto& g : concrete) g = g * scale;
        }
        Ideal root = frobenius_root_of_product(ring, std::move(factors), std::move(concrete), e);
        return ideal_sum(root, I);
    };
    return detail::run_chain_adaptive(build, e_max, te.N, "quotient_divisorial_test_ideal");
}

inline Ideal quotient_divisorial_test_ideal(const Ideal& I, const Polynomial& f,
                                            const FormalCombination& at, const TestElement& te,
                                            std::uint32_t e_max) {
    return *quotient_divisorial_test_ideal_computation(I, f, at, te, e_max).result;
}

// Full pipeline for proof containment (2): generic link, divisorial side,
// ambient side, and the containment check.  A violated containment is a hard
// failure, never a value.
inline RestrictionReport restriction_report(const Ideal& I, const FormalCombination& at,
                                            std::uint64_t seed, std::uint32_t e_max,
                                            std::optional<TestElement> te_override = {}) {
    RestrictionReport rep;
    rep.I = I;
    rep.at = at;
    rep.seed = seed;
    rep.e_max = e_max;
    const std::size_t c = ideal_height(I);
    rep.fs = generic_regular_sequence(I, c, seed);
    rep.link_f = link_generator(I, rep.fs);
    rep.te = te_override ? *te_override : find_test_element(I);

    rep.lhs_comp = quotient_divisorial_test_ideal_computation(I, rep.link_f, at, rep.te, e_max);
    rep.rhs_comp = test_ideal_along_computation(I, at, rep.te, e_max);
    rep.lhs = *rep.lhs_comp.result;
    rep.rhs = ideal_sum(*rep.rhs_comp.result, I);

    if (!rep.lhs.contains_ideal(I) || !rep.rhs.contains_ideal(I))
        fail(ErrorKind::ContainmentViolation, "side does not contain I (internal defect)");

    rep.containment_holds = rep.rhs.contains_ideal(rep.lhs);
    rep.equality_holds = rep.containment_holds && rep.lhs.contains_ideal(rep.rhs);
    if (!rep.containment_holds)
        fail(ErrorKind::ContainmentViolation,
             "tau_{fR} lift is not contained in tau_I + I (seed " + std::to_string(seed) + ")");
    return rep;
}

} // namespace charp
