#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace ts;

namespace {

FormalCombination comb1(const Ideal& a, Rational t) {
    return FormalCombination::make({{a, t}});
}

} // namespace

TEST_CASE("oracle spec examples") {
    auto R = ring2(5);
    Ideal m = ideal(R, {"x", "y"});
    CHECK(monomial_test_ideal_oracle(comb1(m, Rational(2)), 8, R).equals(m));
    CHECK(monomial_test_ideal_oracle(comb1(m, Rational(1)), 8, R).is_unit());
    CHECK(monomial_test_ideal_oracle(comb1(Ideal::unit(R), Rational(3, 2)), 8, R).is_unit());
}

TEST_CASE("oracle rejects non-monomial factors") {
    auto R = ring2(5);
    CHECK_THROWS_AS(monomial_test_ideal_oracle(comb1(ideal(R, {"x + y"}), Rational(1)), 8, R),
                    Error);
}

TEST_CASE("oracle reports a too-small bound") {
    auto R = ring2(5);
    Ideal a = ideal(R, {"x^4", "y^4"});
    // tau(a^{3/2}) needs generators around degree 6+
    try {
        (void)monomial_test_ideal_oracle(comb1(a, Rational(3, 2)), 2, R);
        FAIL("expected DegreeBoundTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeBoundTooSmall);
    }
}

TEST_CASE("hand checks in one variable") {
    auto R = RingContext::make(5, {"x"});
    Ideal x(R, {Polynomial::variable(R, 0)});
    // tau(x^t) = (x^k) with k the number of jumping numbers <= t, i.e.
    // x^u in tau iff u > t - 1
    CHECK(monomial_test_ideal_oracle(comb1(x, Rational(1, 2)), 6, R).is_unit());
    CHECK(monomial_test_ideal_oracle(comb1(x, Rational(1)), 6, R)
              .equals(Ideal(R, {P(R, "x")})));
    CHECK(monomial_test_ideal_oracle(comb1(x, Rational(3, 2)), 6, R)
              .equals(Ideal(R, {P(R, "x")})));
    CHECK(monomial_test_ideal_oracle(comb1(x, Rational(2)), 6, R)
              .equals(Ideal(R, {P(R, "x^2")})));
    CHECK(monomial_test_ideal_oracle(comb1(x, Rational(5, 2)), 6, R)
              .equals(Ideal(R, {P(R, "x^2")})));
}

TEST_CASE("tau agrees with the Newton oracle on random monomial combinations") {
    std::mt19937_64 rng(83);
    int done = 0;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto R2 = ring2(p);
        auto R3 = ring3(p);
        for (int t = 0; t < 6; ++t) {
            const RingPtr& R = (t % 2) ? R3 : R2;
            Ideal a = random_monomial_ideal(R, rng, 2, 3);
            if (a.is_zero_ideal() || a.generators().empty()) continue;
            for (Rational tt : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
                Ideal fast = test_ideal(comb1(a, tt), 5, R);
                Ideal oracle = monomial_test_ideal_oracle(comb1(a, tt), 30, R);
                CHECK(fast.equals(oracle));
                ++done;
            }
        }
    }
    CHECK(done >= 48);
}

TEST_CASE("oracle handles multi-factor combinations") {
    auto R = ring2(3);
    Ideal a = ideal(R, {"x^2"});
    Ideal b = ideal(R, {"y^3"});
    FormalCombination at = FormalCombination::make({{a, Rational(1, 2)}, {b, Rational(2, 3)}});
    Ideal fast = test_ideal(at, 5, R);
    Ideal oracle = monomial_test_ideal_oracle(at, 20, R);
    CHECK(fast.equals(oracle));
}
