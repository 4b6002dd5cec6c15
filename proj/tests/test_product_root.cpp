#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace ts;

namespace {

// Reference route: expand the product honestly, then take the plain root.
Ideal honest_root(const RingPtr& R, const std::vector<PowerFactor>& factors,
                  const std::vector<Polynomial>& concrete, std::uint32_t e) {
    Ideal acc = concrete.empty() ? Ideal::unit(R) : Ideal(R, concrete);
    for (const auto& f : factors)
        acc = ideal_product(acc, ideal_power(Ideal(R, f.gens), f.exponent));
    return frobenius_root(acc, FrobeniusLevel::make(R, e));
}

} // namespace

TEST_CASE("product root equals the honest route on random inputs") {
    std::mt19937_64 rng(67);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto R = ring2(p);
        for (std::uint32_t e : {1u, 2u}) {
            for (int t = 0; t < 12; ++t) {
                std::vector<PowerFactor> factors;
                factors.push_back({{random_nonzero_poly(R, rng, 2, 2),
                                    random_nonzero_poly(R, rng, 2, 2)},
                                   1 + rng() % 6});
                if (t % 2)
                    factors.push_back({{random_nonzero_poly(R, rng, 2, 1)}, 1 + rng() % 4});
                Ideal fast = frobenius_root_of_product(R, factors, {}, e);
                Ideal slow = honest_root(R, factors, {}, e);
                CHECK(fast.equals(slow));
            }
        }
    }
}

TEST_CASE("product root with a concrete co-factor") {
    std::mt19937_64 rng(71);
    auto R = ring3(3);
    for (std::uint32_t e : {1u, 2u}) {
        for (int t = 0; t < 10; ++t) {
            std::vector<PowerFactor> factors;
            factors.push_back({{P(R, "x*y"), P(R, "z")}, 2 + rng() % 5});
            std::vector<Polynomial> concrete = {random_nonzero_poly(R, rng, 2, 3),
                                                random_nonzero_poly(R, rng, 2, 2)};
            Ideal fast = frobenius_root_of_product(R, factors, concrete, e);
            Ideal slow = honest_root(R, factors, concrete, e);
            CHECK(fast.equals(slow));
        }
    }
}

TEST_CASE("product root at tau-shaped exponents") {
    // exactly the shapes the tau engine submits: gamma^N * I^{c(q-1)} * a^{ceil(tq)}
    auto R = ring2(5);
    Ideal I = ideal(R, {"x^3 + y^5"});
    Polynomial gamma = P(R, "x^2");
    for (std::uint32_t e : {1u, 2u}) {
        std::uint64_t q = e == 1 ? 5 : 25;
        std::vector<PowerFactor> factors = {{{gamma}, 2}, {I.generators(), q - 1}};
        Ideal fast = frobenius_root_of_product(R, factors, {}, e);
        Ideal slow = honest_root(R, factors, {}, e);
        CHECK(fast.equals(slow));
    }
}

TEST_CASE("product root with a multi-generator base at e=2") {
    auto R = ring3(2);
    Ideal I = ideal(R, {"x*y", "x*z", "y*z"});
    std::vector<PowerFactor> factors = {{I.generators(), 6}};  // c(q-1) for c=2, q=4
    Ideal fast = frobenius_root_of_product(R, factors, {}, 2);
    Ideal slow = honest_root(R, factors, {}, 2);
    CHECK(fast.equals(slow));
}

TEST_CASE("projection formula: root(B^[p] A, p) = B root(A, p)") {
    std::mt19937_64 rng(73);
    for (std::uint64_t p : {2ull, 3ull}) {
        auto R = ring2(p);
        FrobeniusLevel lvl = FrobeniusLevel::make(R, 1);
        for (int t = 0; t < 10; ++t) {
            Ideal B(R, {random_nonzero_poly(R, rng, 2, 2)});
            Ideal A(R, {random_nonzero_poly(R, rng, 3, 4)});
            Ideal lhs = frobenius_root(ideal_product(bracket_power(B, lvl), A), lvl);
            Ideal rhs = ideal_product(B, frobenius_root(A, lvl));
            CHECK(lhs.equals(rhs));
        }
    }
}
