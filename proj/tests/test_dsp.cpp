#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "plcsim/dft.hpp"
#include "plcsim/random.hpp"
#include "support/oracles.hpp"

using plcsim::cplx;
using plcsim::cvec;
using plcsim::rvec;

namespace {

cvec random_cvec(std::size_t n, std::uint64_t seed) {
    plcsim::StreamRng rng(plcsim::RandomStream{seed, 0});
    cvec out(n);
    for (auto& v : out) v = cplx(rng.gaussian(), rng.gaussian());
    return out;
}

double energy(const cvec& x) {
    double e = 0.0;
    for (const auto& v : x) e += std::norm(v);
    return e;
}

}  // namespace

TEST_CASE("dft of a unit impulse is a flat spectrum") {
    const cvec x = {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    const cvec X = plcsim::dft(x);
    REQUIRE(X.size() == 4);
    for (const auto& v : X) {
        CHECK(v.real() == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("dft of an impulse comb is an impulse comb") {
    // impulses every 32 samples -> lines every 256/32 = 8 bins, magnitude
    // 8/sqrt(256) = 0.5
    cvec x(256, cplx(0, 0));
    for (std::size_t n = 0; n < 256; n += 32) x[n] = cplx(1, 0);
    const cvec X = plcsim::dft(x);
    for (std::size_t k = 0; k < 256; ++k) {
        if (k % 8 == 0) {
            CHECK(std::abs(X[k]) == doctest::Approx(0.5).epsilon(1e-12));
        } else {
            CHECK(std::abs(X[k]) < 1e-12);
        }
    }
}

TEST_CASE("Parseval holds on random length-256 vectors") {
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const cvec x = random_cvec(256, trial + 1);
        const double ein = energy(x);
        const double eout = energy(plcsim::dft(x));
        CHECK(std::abs(ein - eout) <= 1e-9 * ein);
    }
}

TEST_CASE("dft agrees with the direct-summation reference for N = 1..64") {
    for (std::size_t n = 1; n <= 64; ++n) {
        const cvec x = random_cvec(n, 1000 + n);
        const cvec got = plcsim::dft(x);
        const cvec want = oracles::naive_dft(x);
        double scale = std::sqrt(energy(x));
        for (std::size_t k = 0; k < n; ++k)
            CHECK(std::abs(got[k] - want[k]) <= 1e-9 * scale);
    }
}

TEST_CASE("dft is linear") {
    plcsim::StreamRng rng(plcsim::RandomStream{77, 0});
    for (int trial = 0; trial < 20; ++trial) {
        const cplx a(rng.gaussian(), rng.gaussian());
        const cplx b(rng.gaussian(), rng.gaussian());
        const cvec x = random_cvec(128, 5000 + trial);
        const cvec y = random_cvec(128, 6000 + trial);
        cvec mix(128);
        for (std::size_t i = 0; i < 128; ++i) mix[i] = a * x[i] + b * y[i];
        const cvec lhs = plcsim::dft(mix);
        const cvec fx = plcsim::dft(x);
        const cvec fy = plcsim::dft(y);
        for (std::size_t k = 0; k < 128; ++k)
            CHECK(std::abs(lhs[k] - (a * fx[k] + b * fy[k])) < 1e-9);
    }
}

TEST_CASE("idft inverts dft") {
    SUBCASE("flat spectrum back to the unit impulse") {
        const cvec X = {cplx(0.5, 0), cplx(0.5, 0), cplx(0.5, 0), cplx(0.5, 0)};
        const cvec x = plcsim::idft(X);
        CHECK(std::abs(x[0] - cplx(1, 0)) < 1e-12);
        for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(x[i]) < 1e-12);
    }
    SUBCASE("zeros map to zeros") {
        const cvec x = plcsim::idft(cvec(16, cplx(0, 0)));
        for (const auto& v : x) CHECK(std::abs(v) == 0.0);
    }
    SUBCASE("round-trip on 1000 random vectors") {
        double worst = 0.0;
        for (std::uint64_t trial = 0; trial < 1000; ++trial) {
            const cvec x = random_cvec(256, 90000 + trial);
            const cvec back = plcsim::idft(plcsim::dft(x));
            for (std::size_t i = 0; i < x.size(); ++i)
                worst = std::max(worst, std::abs(back[i] - x[i]));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("dft and idft reject empty input") {
    CHECK_THROWS_AS((void)plcsim::dft(cvec{}), std::invalid_argument);
    CHECK_THROWS_AS((void)plcsim::idft(cvec{}), std::invalid_argument);
}

TEST_CASE("non-power-of-two lengths use the direct path and stay unitary") {
    const cvec x = random_cvec(60, 31);
    const cvec X = plcsim::dft(x);
    CHECK(std::abs(energy(x) - energy(X)) <= 1e-9 * energy(x));
    const cvec back = plcsim::idft(X);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(std::abs(back[i] - x[i]) < 1e-9);
}

TEST_CASE("gaussian_vector basics") {
    SUBCASE("variance 0 gives exact zeros") {
        const rvec v = plcsim::gaussian_vector({42, 7}, 100, 0.0);
        for (double s : v) CHECK(s == 0.0);
    }
    SUBCASE("unit variance at one million draws") {
        const rvec v = plcsim::gaussian_vector({42, 7}, 1000000, 1.0);
        const double var = oracles::variance(v);
        CHECK(var > 0.99);
        CHECK(var < 1.01);
        CHECK(std::abs(oracles::mean(v)) < 0.01);
    }
    SUBCASE("rejects bad arguments") {
        CHECK_THROWS_AS((void)plcsim::gaussian_vector({1, 2}, 0, 1.0),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)plcsim::gaussian_vector({1, 2}, 8, -0.5),
                        std::invalid_argument);
    }
}

TEST_CASE("random streams are deterministic and separated") {
    const rvec a = plcsim::gaussian_vector({123, 9}, 4096, 1.0);
    const rvec b = plcsim::gaussian_vector({123, 9}, 4096, 1.0);
    CHECK(a == b);  // bit identical

    const rvec c = plcsim::gaussian_vector({123, 10}, 4096, 1.0);
    CHECK(a != c);
    const rvec d = plcsim::gaussian_vector({124, 9}, 4096, 1.0);
    CHECK(a != d);

    // substreams derived with different tags are distinct, same tag identical
    const auto s = plcsim::RandomStream{5, 0};
    CHECK(plcsim::gaussian_vector(s.substream(1), 64, 1.0) ==
          plcsim::gaussian_vector(s.substream(1), 64, 1.0));
    CHECK(plcsim::gaussian_vector(s.substream(1), 64, 1.0) !=
          plcsim::gaussian_vector(s.substream(2), 64, 1.0));
}

TEST_CASE("distinct stream ids are statistically independent") {
    // correlation between adjacent stream ids at 10^5 samples stays at the
    // sqrt(1/n) level
    const std::size_t n = 100000;
    const rvec a = plcsim::gaussian_vector({99, 0}, n, 1.0);
    const rvec b = plcsim::gaussian_vector({99, 1}, n, 1.0);
    double corr = 0.0;
    for (std::size_t i = 0; i < n; ++i) corr += a[i] * b[i];
    corr /= static_cast<double>(n);
    CHECK(std::abs(corr) < 0.02);
}
