// test_channel.cpp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dephaser/channel.hpp"
#include "dephaser/infometrics.hpp"
#include "dephaser/qstate.hpp"
#include "test_helpers.hpp"

using namespace dephaser;
using doctest::Approx;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

channel::DephasingMap two_use_map(double g, double gamma) {
    return channel::DephasingMap::from_params(bath::direct_params(g, gamma), 2);
}

// product map E1 (x) E1 as a 4x4 coefficient matrix
channel::DephasingMap product_map(double g) {
    std::vector<double> c(16);
    const double c1[2][2] = {{1.0, g}, {g, 1.0}};
    for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
            for (int l1 = 0; l1 < 2; ++l1)
                for (int l2 = 0; l2 < 2; ++l2)
                    c[(j1 * 2 + j2) * 4 + (l1 * 2 + l2)] =
                        c1[j1][l1] * c1[j2][l2];
    return channel::DephasingMap::from_coefficients(2, std::move(c));
}

}  // namespace

TEST_CASE("single-use coefficient matrix is [[1,g],[g,1]]") {
    const auto m = channel::DephasingMap::from_params(
        bath::direct_params(0.37, 0.0), 1);
    CHECK(m.coeff(0, 0) == 1.0);
    CHECK(m.coeff(1, 1) == 1.0);
    CHECK(m.coeff(0, 1) == Approx(0.37).epsilon(1e-15));
    CHECK(m.coeff(1, 0) == Approx(0.37).epsilon(1e-15));
}

TEST_CASE("two-use coefficients: g on single flips, h+- on double flips") {
    const double g = 0.5, gamma = 0.6;
    const auto p = bath::direct_params(g, gamma);
    const auto m = two_use_map(g, gamma);
    for (std::size_t j = 0; j < 4; ++j) CHECK(m.coeff(j, j) == 1.0);
    for (auto [j, l] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}})
        CHECK(m.coeff(j, l) == Approx(g).epsilon(1e-14));
    CHECK(m.coeff(0, 3) == Approx(p.h_plus).epsilon(1e-14));
    CHECK(m.coeff(1, 2) == Approx(p.h_minus).epsilon(1e-14));
}

TEST_CASE("bath-sourced overlaps produce the same two-use map") {
    const bath::SpectralModel white = bath::White{1.0};
    const bath::ChannelTiming timing{1.0, 1.0, 0.5};
    const auto overlaps = bath::overlap_sequence(white, timing, 2);
    const auto from_bath =
        channel::DephasingMap::from_overlaps(timing.lambda, overlaps);
    const auto params = bath::dephasing_params(white, timing);
    const auto from_params = channel::DephasingMap::from_params(params, 2);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t l = 0; l < 4; ++l)
            CHECK(from_bath.coeff(j, l) ==
                  Approx(from_params.coeff(j, l)).epsilon(1e-12));
}

TEST_CASE("memoryless coefficients factorize") {
    const auto m = two_use_map(0.42, 0.0);
    const auto prod = product_map(0.42);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t l = 0; l < 4; ++l)
            CHECK(m.coeff(j, l) == Approx(prod.coeff(j, l)).epsilon(1e-14));
}

TEST_CASE("three-use map from a white bath") {
    // I(m tau) = max(0, 1 - 0.4 m)/2 for the unit white spectrum.
    const auto overlaps =
        bath::overlap_sequence(bath::White{1.0}, {1.0, 1.0, 0.4}, 3);
    const auto m = channel::DephasingMap::from_overlaps(1.0, overlaps);
    CHECK(m.dim() == 8);
    // d = (1,1,1) between |000> and |111>: exponent sum = 3 I0 + 2*2 I1 + 2 I2
    const double expo = 3 * overlaps[0] + 4 * overlaps[1] + 2 * overlaps[2];
    CHECK(m.coeff(0, 7) == Approx(std::exp(-expo)).epsilon(1e-10));
    // PSD holds
    CHECK(m.spectrum().back() > -1e-10);
}

TEST_CASE("elementwise application preserves populations") {
    auto gen = testing::rng(31);
    const auto rho = testing::random_density(2, gen);
    const auto m = two_use_map(0.3, 0.8);
    const auto out = channel::apply_dephasing(rho, m);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(out(j, j) == rho(j, j));
    CHECK(out.matrix().trace().real() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("all-ones coefficients are the identity channel") {
    auto gen = testing::rng(32);
    const auto rho = testing::random_density(2, gen);
    const auto m = two_use_map(1.0, 0.7);
    CHECK(CMat::max_abs_diff(channel::apply_dephasing(rho, m).matrix(),
                             rho.matrix()) == 0.0);
}

TEST_CASE("g = 0 single use kills the coherences") {
    auto gen = testing::rng(33);
    const auto rho = testing::random_density(1, gen);
    const auto m = channel::DephasingMap::from_params(
        bath::direct_params(0.0, 0.0), 1);
    const auto out = channel::apply_dephasing(rho, m);
    CHECK(std::abs(out(0, 1)) == 0.0);
    CHECK(out(0, 0) == rho(0, 0));
}

TEST_CASE("diagonal two-use inputs are fixed points") {
    const auto rho = infometrics::pq_state({0.7});
    const auto out = channel::apply_dephasing(rho, two_use_map(0.4, 0.9));
    CHECK(CMat::max_abs_diff(out.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("extending by the identity reaches only the designated qubits") {
    // single-use map on qubit Q of a Bell pair RQ: the Bell coherence
    // |00><11| picks up exactly one factor of g.
    const double g = 0.6;
    const auto m = channel::DephasingMap::from_params(
        bath::direct_params(g, 0.0), 1);
    std::vector<cplx> amp(4, 0.0);
    amp[0] = kInvSqrt2;
    amp[3] = kInvSqrt2;
    const auto bell = DensityMatrix::from_pure(PureState(std::move(amp), 2));
    const auto out = channel::extend_with_identity(m, 2, {1})(bell);
    CHECK(out(0, 3).real() == Approx(0.5 * g).epsilon(1e-14));
    CHECK(out(0, 0).real() == Approx(0.5).epsilon(1e-14));

    // identity map extended acts as the global identity
    const auto id1 = channel::DephasingMap::from_params(
        bath::direct_params(1.0, 0.0), 1);
    CHECK(CMat::max_abs_diff(
              channel::extend_with_identity(id1, 2, {0})(bell).matrix(),
              bell.matrix()) == 0.0);
}

TEST_CASE("extension index validation") {
    const auto m = two_use_map(0.5, 0.5);
    CHECK_THROWS_AS(channel::extend_with_identity(m, 3, {0, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(channel::extend_with_identity(m, 3, {1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(channel::extend_with_identity(m, 3, {1}),
                    std::invalid_argument);
}

TEST_CASE("single-use Kraus weights") {
    CHECK(channel::kraus_single(1.0).ops[0].weight == 1.0);
    CHECK(channel::kraus_single(1.0).ops[1].weight == 0.0);
    CHECK(channel::kraus_single(0.0).ops[0].weight == 0.5);
    CHECK(channel::kraus_single(0.5).ops[0].weight == 0.75);
    CHECK(channel::kraus_single(0.5).ops[1].weight == 0.25);
    CHECK(channel::kraus_single(0.5).completeness_defect() < 1e-15);
}

TEST_CASE("single-use Kraus equals the elementwise map") {
    auto gen = testing::rng(34);
    const double g = 0.71;
    const auto set = channel::kraus_single(g);
    const auto m = channel::DephasingMap::from_params(
        bath::direct_params(g, 0.0), 1);
    for (int t = 0; t < 10; ++t) {
        const auto rho = testing::random_density(1, gen);
        CHECK(CMat::max_abs_diff(channel::apply_kraus(set, rho).matrix(),
                                 channel::apply_dephasing(rho, m).matrix()) <
              1e-15);
    }
}

TEST_CASE("single-use Kraus contracts the transverse Bloch components") {
    const double g = 0.65;
    CMat r(2);
    const double x = 0.3, y = 0.2, z = 0.4;
    r(0, 0) = 0.5 * (1 + z);
    r(1, 1) = 0.5 * (1 - z);
    r(0, 1) = 0.5 * cplx(x, -y);
    r(1, 0) = 0.5 * cplx(x, y);
    const auto out =
        channel::apply_kraus(channel::kraus_single(g), DensityMatrix(r));
    CHECK(2.0 * out(0, 1).real() == Approx(g * x).epsilon(1e-14));
    CHECK(-2.0 * out(0, 1).imag() == Approx(g * y).epsilon(1e-14));
    CHECK((out(0, 0) - out(1, 1)).real() == Approx(z).epsilon(1e-14));
}

TEST_CASE("two-use six-operator set: corrected weights") {
    // g=0.5, perfect memory: h+ = 1/16, h- = 1
    const auto set = channel::kraus_two_use(0.5, 0.0625, 1.0);
    REQUIRE(set.ops.size() == 6);
    CHECK(set.valid);
    CHECK(set.ops[0].weight == Approx(0.515625).epsilon(1e-15));
    CHECK(set.ops[1].weight == 0.0);
    CHECK(set.ops[2].weight == 0.0);
    CHECK(set.ops[3].weight == Approx(0.015625).epsilon(1e-15));
    CHECK(set.ops[4].weight == Approx(0.46875).epsilon(1e-15));
    CHECK(set.ops[5].weight == Approx(0.46875).epsilon(1e-15));
    CHECK(set.completeness_defect() < 1e-15);
}

TEST_CASE("two-use six-operator set reproduces the coefficient map") {
    auto gen = testing::rng(35);
    // (0.8, 0.25) sits in the negative-weight regime; the set still
    // reproduces the (completely positive) map when applied anyway.
    for (auto [g, gamma] : {std::pair{0.5, 1.0}, {0.3, 0.5}, {0.8, 0.25},
                            {0.6, 0.0}}) {
        const auto p = bath::direct_params(g, gamma);
        const auto set = channel::kraus_two_use(g, p.h_plus, p.h_minus);
        const auto m = two_use_map(g, gamma);
        for (int t = 0; t < 5; ++t) {
            const auto rho = testing::random_density(2, gen);
            CHECK(CMat::max_abs_diff(
                      channel::apply_kraus(set, rho, true).matrix(),
                      channel::apply_dephasing(rho, m).matrix()) < 1e-14);
        }
    }
}

TEST_CASE("memoryless six-operator set degenerates to the product set") {
    const double g = 0.45;
    const auto p = bath::direct_params(g, 0.0);
    const auto set = channel::kraus_two_use(g, p.h_plus, p.h_minus);
    // K4/K5 weights vanish; the rest are products of single-use weights.
    const double p0 = 0.5 * (1 + g), pz = 0.5 * (1 - g);
    CHECK(set.ops[4].weight == Approx(0.0).epsilon(1e-15));
    CHECK(set.ops[5].weight == Approx(0.0).epsilon(1e-15));
    CHECK(set.ops[0].weight == Approx(p0 * p0).epsilon(1e-14));
    CHECK(set.ops[1].weight == Approx(p0 * pz).epsilon(1e-14));
    CHECK(set.ops[2].weight == Approx(pz * p0).epsilon(1e-14));
    CHECK(set.ops[3].weight == Approx(pz * pz).epsilon(1e-14));
}

TEST_CASE("quarter-prefactor weights violate trace preservation exactly") {
    for (auto [g, gamma] : {std::pair{0.5, 1.0}, {0.3, 0.5}, {0.7, 0.75}}) {
        const auto p = bath::direct_params(g, gamma);
        const auto quarter = channel::kraus_two_use(
            g, p.h_plus, p.h_minus, channel::TwoUseWeights::quarter);
        CHECK(quarter.completeness_defect() ==
              Approx(0.25 * (p.h_minus - p.h_plus)).epsilon(1e-12));
    }
}

TEST_CASE("negative-weight regime is flagged invalid") {
    // 1 - 2g + h+ < 0 at g=0.9, gamma=1
    const auto p = bath::direct_params(0.9, 1.0);
    CHECK(0.25 * (1.0 - 2.0 * 0.9 + p.h_plus) < 0.0);
    const auto set = channel::kraus_two_use(0.9, p.h_plus, p.h_minus);
    CHECK(!set.valid);
    auto gen = testing::rng(36);
    const auto rho = testing::random_density(2, gen);
    CHECK_THROWS_AS(channel::apply_kraus(set, rho), std::invalid_argument);
    // ... but the map itself stays completely positive there, and applying
    // with the override reproduces it.
    const auto m = two_use_map(0.9, 1.0);
    CHECK(m.spectrum().back() > -1e-10);
    CHECK(CMat::max_abs_diff(
              channel::apply_kraus(set, rho, /*allow_invalid=*/true).matrix(),
              channel::apply_dephasing(rho, m).matrix()) < 1e-14);
}

TEST_CASE("canonical Kraus recovers the single-use set exactly") {
    const double g = 0.5;
    const auto set = channel::kraus_canonical(
        channel::DephasingMap::from_params(bath::direct_params(g, 0.0), 1));
    REQUIRE(set.ops.size() == 2);
    CHECK(set.ops[0].weight == Approx(0.5 * (1 + g)).epsilon(1e-14));
    CHECK(set.ops[1].weight == Approx(0.5 * (1 - g)).epsilon(1e-14));
    CHECK(set.ops[0].op(0, 0).real() == Approx(1.0).epsilon(1e-14));
    CHECK(set.ops[0].op(1, 1).real() == Approx(1.0).epsilon(1e-14));
    CHECK(set.ops[1].op(0, 0).real() == Approx(1.0).epsilon(1e-14));
    CHECK(set.ops[1].op(1, 1).real() == Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("perfect memory drops the canonical set to three operators") {
    const auto set = channel::kraus_canonical(two_use_map(0.5, 1.0));
    CHECK(set.ops.size() <= 3);
    CHECK(set.completeness_defect() < 1e-10);
}

TEST_CASE("noiseless canonical set is the identity alone") {
    const auto set = channel::kraus_canonical(two_use_map(1.0, 0.3));
    REQUIRE(set.ops.size() == 1);
    CHECK(set.ops[0].weight == Approx(1.0).epsilon(1e-12));
    CHECK(CMat::max_abs_diff(set.ops[0].op, CMat::identity(4)) < 1e-12);
}

TEST_CASE("canonical Kraus equals the elementwise map for N in {1,2,3}") {
    auto gen = testing::rng(37);
    const auto overlaps =
        bath::overlap_sequence(bath::White{1.0}, {1.0, 1.0, 0.3}, 3);
    for (int n : {1, 2, 3}) {
        const auto m = channel::DephasingMap::from_overlaps(
            1.0, std::span(overlaps).first(n));
        const auto set = channel::kraus_canonical(m);
        CHECK(set.completeness_defect() < 1e-10);
        for (int t = 0; t < 5; ++t) {
            const auto rho = testing::random_density(n, gen);
            CHECK(CMat::max_abs_diff(
                      channel::apply_kraus(set, rho).matrix(),
                      channel::apply_dephasing(rho, m).matrix()) < 1e-12);
        }
    }
}

TEST_CASE("canonical and corrected six-operator sets act identically") {
    auto gen = testing::rng(38);
    const double g = 0.4, gamma = 0.7;  // valid regime: 1 - 2g + h+ > 0
    const auto p = bath::direct_params(g, gamma);
    REQUIRE(1.0 - 2.0 * g + p.h_plus >= 0.0);
    const auto six = channel::kraus_two_use(p.g, p.h_plus, p.h_minus);
    CHECK(six.valid);
    const auto canon = channel::kraus_canonical(two_use_map(g, gamma));
    for (int t = 0; t < 50; ++t) {
        const auto rho = testing::random_density(2, gen);
        CHECK(CMat::max_abs_diff(channel::apply_kraus(six, rho).matrix(),
                                 channel::apply_kraus(canon, rho).matrix()) <
              1e-12);
    }
}

TEST_CASE("complete positivity witness: C PSD iff Choi state PSD") {
    // the Choi state: apply the extended map to half of a maximally
    // entangled 4-qubit state
    auto choi_min_eig = [](const channel::DephasingMap& m) {
        const int q = m.n_uses();
        const std::size_t n = m.dim();
        std::vector<cplx> amp(n * n, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            amp[k * n + k] = 1.0 / std::sqrt(double(n));
        const auto ent = DensityMatrix::from_pure(PureState(std::move(amp), 2 * q));
        std::vector<int> acting(q);
        for (int i = 0; i < q; ++i) acting[i] = q + i;
        const auto out = channel::extend_with_identity(m, 2 * q, acting)(ent);
        return hermitian_eigenvalues(out.matrix()).back();
    };

    for (auto [g, gamma] : {std::pair{0.5, 1.0}, {0.2, 0.5}, {0.9, 0.0}})
        CHECK(choi_min_eig(two_use_map(g, gamma)) > -1e-12);

    // a symmetric unit-diagonal C that is NOT PSD must fail the witness
    std::vector<double> bad{1.0, 0.9, 0.9, 0.0,  //
                            0.9, 1.0, 0.0, 0.9,  //
                            0.9, 0.0, 1.0, 0.9,  //
                            0.0, 0.9, 0.9, 1.0};
    const auto bad_map =
        channel::DephasingMap::from_coefficients(2, bad, /*validate=*/false);
    CHECK(bad_map.spectrum().back() < -1e-6);
    CHECK(choi_min_eig(bad_map) < -1e-6);
    CHECK_THROWS_AS(channel::DephasingMap::from_coefficients(2, bad),
                    std::runtime_error);
    CHECK_THROWS_AS(channel::kraus_canonical(bad_map), std::runtime_error);
}

TEST_CASE("memoryless two-use map factorizes on random states") {
    auto gen = testing::rng(39);
    const double g = 0.55;
    const auto m2 = two_use_map(g, 0.0);
    const auto prod = product_map(g);
    for (int t = 0; t < 50; ++t) {
        const auto rho = testing::random_density(2, gen);
        CHECK(CMat::max_abs_diff(channel::apply_dephasing(rho, m2).matrix(),
                                 channel::apply_dephasing(rho, prod).matrix()) <
              1e-12);
    }
}

TEST_CASE("perfect memory leaves the odd-parity subspace decoherence free") {
    auto gen = testing::rng(40);
    const auto m = two_use_map(0.35, 1.0);
    // random states supported on span{|01>, |10>}
    for (int t = 0; t < 10; ++t) {
        const CMat block = testing::random_density(1, gen).matrix();
        CMat full(4);
        full(1, 1) = block(0, 0);
        full(1, 2) = block(0, 1);
        full(2, 1) = block(1, 0);
        full(2, 2) = block(1, 1);
        const DensityMatrix rho{full};
        CHECK(CMat::max_abs_diff(channel::apply_dephasing(rho, m).matrix(),
                                 rho.matrix()) < 1e-15);
    }
}

TEST_CASE("delta-correlated product form cannot reproduce finite memory") {
    // With p(m2|m1) = delta, the only achievable coefficient pattern is
    // c01 = p0 - pz on single flips and c03 = c12 = 1; minimizing the
    // distance to (g, h+, h-) over p0 leaves a gap for gamma in (0,1).
    for (auto [g, gamma] : {std::pair{0.5, 0.5}, {0.3, 0.25}, {0.8, 0.75}}) {
        const auto p = bath::direct_params(g, gamma);
        double best = 1e300;
        for (int i = 0; i <= 1000; ++i) {
            const double p0 = double(i) / 1000.0;
            const double c_flip = 2.0 * p0 - 1.0;
            const double d2 = 4.0 * (c_flip - g) * (c_flip - g) +
                              (1.0 - p.h_plus) * (1.0 - p.h_plus) +
                              (1.0 - p.h_minus) * (1.0 - p.h_minus);
            best = std::min(best, d2);
        }
        CHECK(best > 1e-4);
    }
}

TEST_CASE("two-use map on the encoded GHZ pair attenuates by h-") {
    // (|001> + |110>)/sqrt(2) with the channel acting on qubits 1,2: the
    // cross term lives on the protected 01/10 pattern.
    const double g = 0.45, gamma = 0.8;
    const auto p = bath::direct_params(g, gamma);
    std::vector<cplx> amp(8, 0.0);
    amp[0b001] = kInvSqrt2;
    amp[0b110] = kInvSqrt2;
    const auto ghz = DensityMatrix::from_pure(PureState(std::move(amp), 3));
    const auto out =
        channel::extend_with_identity(two_use_map(g, gamma), 3, {1, 2})(ghz);
    CHECK(out(0b001, 0b110).real() ==
          Approx(0.5 * p.h_minus).epsilon(1e-14));
    CHECK(out(0b001, 0b001).real() == Approx(0.5).epsilon(1e-14));
}

TEST_CASE("canonical two-use set leaves the diagonal family invariant") {
    const auto set = channel::kraus_canonical(two_use_map(0.5, 0.75));
    CMat m(4);
    m(0, 0) = 0.15;
    m(1, 1) = 0.35;
    m(2, 2) = 0.35;
    m(3, 3) = 0.15;
    const DensityMatrix rho{m};
    CHECK(CMat::max_abs_diff(channel::apply_kraus(set, rho).matrix(),
                             rho.matrix()) < 1e-12);
}

TEST_CASE("anti-correlated bath memory flips the protected subspace") {
    // ohmic T=0 overlaps turn negative at large separation: h+ > g^2 > h-,
    // the coefficient matrix stays completely positive.
    const auto params =
        bath::dephasing_params(bath::Ohmic{1.0, 3.0, 0.0}, {1.0, 1.0, 2.0});
    REQUIRE(params.gamma_mem.has_value());
    CHECK(*params.gamma_mem < 0.0);
    CHECK(params.h_plus > params.g * params.g);
    CHECK(params.h_minus < params.g * params.g);
    const auto map = channel::DephasingMap::from_params(params, 2);
    CHECK(map.spectrum().back() > -1e-10);
}

TEST_CASE("extension respects the use order of non-adjacent qubits") {
    // acting_on = {2, 0}: qubit 2 is the first use, qubit 0 the second.
    // For the symmetric two-use map the coefficient only depends on the bit
    // pattern, so compare against acting_on = {0, 2} explicitly.
    auto gen = testing::rng(41);
    const auto m = two_use_map(0.5, 0.8);
    const auto rho = testing::random_density(3, gen);
    const auto a = channel::extend_with_identity(m, 3, {2, 0})(rho);
    const auto b = channel::extend_with_identity(m, 3, {0, 2})(rho);
    CHECK(CMat::max_abs_diff(a.matrix(), b.matrix()) < 1e-15);
    // hand checks: |000><101| flips both acted qubits in the same sense
    // (h+); |001><100| flips them in opposite senses (h-)
    const auto p = bath::direct_params(0.5, 0.8);
    CHECK(std::abs(a(0b000, 0b101)) ==
          doctest::Approx(p.h_plus * std::abs(rho(0b000, 0b101)))
              .epsilon(1e-12));
    CHECK(std::abs(a(0b001, 0b100)) ==
          doctest::Approx(p.h_minus * std::abs(rho(0b001, 0b100)))
              .epsilon(1e-12));
    // single-qubit flip on an untouched qubit keeps only one factor of g
    CHECK(std::abs(a(0b000, 0b100)) ==
          doctest::Approx(p.g * std::abs(rho(0b000, 0b100))).epsilon(1e-12));
}

TEST_CASE("random correlation matrices make valid channels") {
    // any Gram matrix of unit vectors is a legal coefficient matrix; the
    // canonical construction must decompose it and reproduce its action
    auto gen = testing::rng(42);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 6;
        double x[4][6];
        for (auto& row : x) {
            double norm2 = 0.0;
            for (double& v : row) {
                v = d(gen);
                norm2 += v * v;
            }
            for (double& v : row) v /= std::sqrt(norm2);
        }
        std::vector<double> c(16);
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) {
                double dot = 0.0;
                for (int t = 0; t < k; ++t) dot += x[j][t] * x[l][t];
                c[j * 4 + l] = j == l ? 1.0 : dot;
            }
        const auto map = channel::DephasingMap::from_coefficients(2, c);
        const auto set = channel::kraus_canonical(map);
        CHECK(set.completeness_defect() < 1e-10);
        const auto rho = testing::random_density(2, gen);
        CHECK(CMat::max_abs_diff(channel::apply_kraus(set, rho).matrix(),
                                 channel::apply_dephasing(rho, map).matrix()) <
              1e-12);
    }
}

TEST_CASE("four-use bath map stays consistent with its canonical Kraus set") {
    auto gen = testing::rng(43);
    const auto overlaps =
        bath::overlap_sequence(bath::Ohmic{1.0, 3.0, 0.0}, {0.8, 1.0, 0.25}, 4);
    const auto map = channel::DephasingMap::from_overlaps(0.8, overlaps);
    CHECK(map.dim() == 16);
    CHECK(map.spectrum().back() > -1e-10);
    const auto set = channel::kraus_canonical(map);
    CHECK(set.completeness_defect() < 1e-10);
    const auto rho = testing::random_density(4, gen);
    CHECK(CMat::max_abs_diff(channel::apply_kraus(set, rho).matrix(),
                             channel::apply_dephasing(rho, map).matrix()) <
          1e-12);
}

TEST_CASE("kraus constructors validate their parameters") {
    CHECK_THROWS_AS(channel::kraus_single(1.5), std::invalid_argument);
    CHECK_THROWS_AS(channel::kraus_single(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(channel::kraus_two_use(0.5, 1.2, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        channel::DephasingMap::from_params(bath::direct_params(0.5, 0.5), 3),
        std::invalid_argument);
}
