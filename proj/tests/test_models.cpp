#include "reson1d/models.hpp"

#include <cmath>

#include "doctest.h"

using namespace reson1d;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("model construction guards") {
    CHECK_THROWS_AS(ModelSpec::delta_wall(5.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::delta_wall(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::exp_one_piece(5.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::exp_one_piece(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::exp_two_piece(5.0, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::exp_two_piece(5.0, -0.1, 5.0), std::invalid_argument);
    CHECK_NOTHROW(ModelSpec::exp_two_piece(5.0, 0.0, 5.0));  // step limit allowed
    CHECK_NOTHROW(ModelSpec::delta_wall(0.0, 1.0));          // bare wall allowed
}

TEST_CASE("scale parameters") {
    const ScaleParams p = scales(ModelSpec::exp_two_piece(5.0, 0.5, 5.0));
    CHECK(p.s_c == doctest::Approx(0.5 * std::sqrt(5.0)).epsilon(1e-15));
    CHECK(p.s_d == doctest::Approx(5.0 * std::sqrt(5.0)).epsilon(1e-15));
    CHECK(p.zeta == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(p.s_c * p.zeta == doctest::Approx(p.s_d).epsilon(1e-14));
    CHECK(std::isnan(scales(ModelSpec::exp_two_piece(5.0, 0.0, 5.0)).zeta));
}

TEST_CASE("potential values") {
    const ModelSpec two = ModelSpec::exp_two_piece(5.0, 0.5, 5.0);
    CHECK(potential_value(two, 0.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(potential_value(two, -1e-9) == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(potential_value(two, 1e-9) == doctest::Approx(5.0).epsilon(1e-8));

    const ModelSpec one = ModelSpec::exp_one_piece(5.0, 0.5);
    CHECK(potential_value(one, -20.0) < 1e-34);
    CHECK(potential_value(one, -20.0) > 0.0);

    const ModelSpec step = ModelSpec::exp_two_piece(5.0, 0.0, 5.0);
    CHECK(potential_value(step, -1.0) == 0.0);
    CHECK(potential_value(step, 0.0) == 0.0);
    CHECK(potential_value(step, 1.0) == doctest::Approx(5.0 * std::exp(0.4)).epsilon(1e-15));

    CHECK_THROWS_AS(potential_value(ModelSpec::delta_wall(5.0, 1.0), -1.0), NotPointwiseError);
}

TEST_CASE("delta wall limits") {
    // bare rigid wall: r = -1
    const ModelSpec bare = ModelSpec::delta_wall(0.0, 1.0);
    for (double k : {0.3, 1.0, 2.2, 7.9}) {
        CHECK(std::abs(reflection_delta_wall(bare, {k, 0.0}) - Complex{-1.0, 0.0}) < 1e-13);
    }
    // impenetrable barrier: wall effectively moved to x = -a
    const ModelSpec hard = ModelSpec::delta_wall(1e12, 1.0);
    const Complex k{2.0, 0.0};
    CHECK(std::abs(reflection_delta_wall(hard, k) + std::exp(-2.0 * kI * k)) < 1e-10);
}

TEST_CASE("delta wall near-pole denominator") {
    const ModelSpec spec = ModelSpec::delta_wall(5.0, 1.0);
    const Complex k_published{2.7103, -0.1779};
    CHECK(std::abs(pole_denominator(spec, k_published)) <
          1e-3 * std::abs(pole_denominator(spec, {2.7, 0.0})));
    // no real-axis zeros
    for (double k = 0.2; k < 12.0; k += 0.1)
        CHECK(std::abs(pole_denominator(spec, {k, 0.0})) > 1e-6);
}

TEST_CASE("one-piece amplitude is unimodular and matches the gamma-ratio form") {
    const ModelSpec spec = ModelSpec::exp_one_piece(5.0, 0.5);
    CHECK(std::abs(std::abs(reflection_at_energy(spec, 10.0)) - 1.0) < 1e-12);
    // false discrete spectrum: poles only at ikc = -(n+1), i.e. k = (n+1) i / c
    for (int n = 0; n < 3; ++n) {
        const Complex near1 = kI * (2.0 * (n + 1)) * (1.0 + 1e-8);
        const Complex near10 = kI * (2.0 * (n + 1)) * (1.0 + 1e-7);
        const double r1 = std::abs(reflection_exp_one_piece(spec, near1));
        const double r10 = std::abs(reflection_exp_one_piece(spec, near10));
        CHECK(r1 > 1e4);
        CHECK(r1 / r10 == doctest::Approx(10.0).epsilon(0.05));  // simple pole
        CHECK_THROWS_AS(reflection_exp_one_piece(spec, kI * (2.0 * (n + 1))), GammaPoleError);
    }
    // generic complex k well away from the imaginary axis stays bounded
    for (double re : {0.5, 1.5, 3.0}) {
        for (double im : {-1.5, -0.5, 0.5}) {
            CHECK(std::abs(reflection_exp_one_piece(spec, {re, im})) < 1e3);
        }
    }
}

TEST_CASE("two-piece reduces to one-piece when c = d") {
    const ModelSpec two = ModelSpec::exp_two_piece(5.0, 0.5, 0.5);
    const ModelSpec one = ModelSpec::exp_one_piece(5.0, 0.5);
    for (double E = 0.5; E < 40.0; E += 1.7) {
        const Complex k{std::sqrt(E), 0.0};
        CHECK(std::abs(reflection_exp_two_piece(two, k) - reflection_exp_one_piece(one, k)) < 1e-10);
    }
    for (Complex k : {Complex{2.0, -0.3}, Complex{3.5, -0.2}, Complex{1.2, 0.4}}) {
        CHECK(std::abs(reflection_exp_two_piece(two, k) - reflection_exp_one_piece(one, k)) < 1e-10);
    }
}

TEST_CASE("unimodularity on the real axis for all three models") {
    const ModelSpec specs[3] = {ModelSpec::delta_wall(5.0, 1.0),
                                ModelSpec::exp_one_piece(5.0, 0.5),
                                ModelSpec::exp_two_piece(5.0, 0.5, 5.0)};
    for (const ModelSpec& spec : specs) {
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const double E = 0.05 + (60.0 - 0.05) * i / 499.0;
            worst = std::max(worst, std::abs(std::abs(reflection_at_energy(spec, E)) - 1.0));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("two-piece bracket factor is unimodular at real energy") {
    const ModelSpec spec = ModelSpec::exp_two_piece(5.0, 0.5, 5.0);
    const ModelSpec one = ModelSpec::exp_one_piece(5.0, 0.5);
    for (double E = 1.0; E <= 30.0; E += 0.93) {
        const Complex k{std::sqrt(E), 0.0};
        // bracket = r_two / r_one (the gamma-ratio prefactors coincide)
        const Complex bracket = reflection_exp_two_piece(spec, k) / reflection_exp_one_piece(one, k);
        CHECK(std::abs(std::abs(bracket) - 1.0) < 1e-10);
    }
}

TEST_CASE("two-piece denominator vanishes at the reference poles") {
    // frozen from a high-precision root solve of the matching condition
    const ModelSpec row1 = ModelSpec::exp_two_piece(5.0, 0.5, 5.0);
    const Complex k1{2.98984025323977, -0.251324960792176};
    CHECK(std::abs(pole_denominator(row1, k1)) < 1e-9 * std::abs(pole_denominator(row1, k1 + 0.1)));

    const ModelSpec row2 = ModelSpec::exp_two_piece(5.0, 0.0, 5.0);
    const Complex k2{3.07615301749382, -0.2};
    CHECK(std::abs(pole_denominator(row2, k2)) < 1e-9 * std::abs(pole_denominator(row2, k2 + 0.1)));
}

TEST_CASE("kind dispatch and misuse guards") {
    const ModelSpec one = ModelSpec::exp_one_piece(5.0, 0.5);
    CHECK_THROWS_AS(reflection_delta_wall(one, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(reflection_at_energy(one, -2.0), DomainError);
    CHECK_THROWS_AS(reflection_delta_wall(ModelSpec::delta_wall(5.0, 1.0), {0.0, 0.0}),
                    DomainError);
    const Complex k{1.4, 0.0};
    CHECK(reflection(one, k) == reflection_exp_one_piece(one, k));
}
