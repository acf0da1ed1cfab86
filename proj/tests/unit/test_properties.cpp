#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/constants/constants.hpp>

#include "plates/dimreg.hpp"
#include "plates/errors.hpp"
#include "plates/regsum.hpp"
#include "plates/stress.hpp"

using namespace plates;

namespace {

// Fixed seed: failures must be reproducible.
struct Generator {
    std::mt19937_64 engine{0x5eed'ca51'1e0fULL};

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    BoundaryCondition bc() { return kBoundaryConditions[engine() % 2]; }
};

double rel(const Real& x, const Real& y) { return to_double(abs(x - y) / abs(y)); }

constexpr int kTrials = 400;

} // namespace

TEST_CASE("property: stress invariants at random configurations") {
    Generator gen;
    const Real pi = boost::math::constants::pi<Real>();
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto bc = gen.bc();
        const double L = gen.log_uniform(1e-2, 1e2);
        // Concentrate samples near the plates, where cancellations are hardest.
        const double u = gen.log_uniform(1e-4, 0.5);
        const Real theta = gen.uniform(0, 1) < 0.5 ? Real(u) * pi : pi - Real(u) * pi;
        const PlateConfig c(L);
        const auto p = fluctuations::InteriorPoint::at_theta(c, theta);
        const auto set = fluctuations::expectation_set(bc, c, p);
        const auto ab = fluctuations::ab_values(c, p);
        INFO("bc=" << to_string(bc) << " L=" << L << " theta=" << to_double(theta));

        CHECK(rel(stress::improved_energy_density(set, ab), -ab.a) < 1e-12);
        CHECK(rel(stress::t_zz(set, ab), -3 * ab.a) < 1e-12);
        const auto t = stress::traces(set);
        CHECK(abs(t.improved) <= Real(1e-12) * abs(t.canonical));
        CHECK(rel(set.phidot2 - set.dzphi2 - set.grad_t_phi2, set.dlambda_phi2) < 1e-28);

        const auto mirror = fluctuations::expectation_set(bc, c, fluctuations::InteriorPoint::at_theta(c, pi - theta));
        CHECK(rel(mirror.phi2, set.phi2) < 1e-24);
        CHECK(rel(mirror.phidot2, set.phidot2) < 1e-24);

        const double lambda = gen.log_uniform(0.1, 10);
        const PlateConfig scaled(L * lambda);
        const auto s2 = fluctuations::expectation_set(
            bc, scaled, fluctuations::InteriorPoint::at_theta(scaled, theta));
        const Real l2 = Real(lambda) * lambda;
        CHECK(rel(s2.phi2 * l2, set.phi2) < 1e-12);
        CHECK(rel(s2.dzphi2 * l2 * l2, set.dzphi2) < 1e-12);

        const auto other = fluctuations::expectation_set(dual(bc), c, p);
        CHECK(abs(stress::canonical_t00(set) + stress::canonical_t00(other) + 2 * ab.a) <
              Real(1e-30) * (ab.a + ab.b));
    }
}

TEST_CASE("property: abel oracle matches closed forms at random angles") {
    Generator gen;
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = gen.uniform(0.1, std::numbers::pi - 0.1);
        const double e1 = regsum::trig_sum_n_cos(theta);
        const double e3 = regsum::trig_sum_n3_cos(theta);
        INFO("theta=" << theta);
        CHECK(std::abs(regsum::abel_sum_oracle(1, theta) - e1) <= 1e-8 * std::max(1.0, std::abs(e1)));
        CHECK(std::abs(regsum::abel_sum_oracle(3, theta) - e3) <= 1e-8 * std::max(1.0, std::abs(e3)));
        CHECK(regsum::trig_sum_n_cos(theta) ==
              doctest::Approx(regsum::trig_sum_n_cos(std::numbers::pi - theta)).epsilon(1e-10));
    }
}

TEST_CASE("property: master integral scaling and recursion at random parameters") {
    Generator gen;
    int checked = 0;
    for (int trial = 0; trial < kTrials; ++trial) {
        const double d = gen.uniform(0.5, 4.5);
        const double N = gen.uniform(-2.0, 4.0);
        const double m_sq = gen.log_uniform(1e-2, 1e2);
        const double lambda = gen.log_uniform(1e-1, 1e1);
        try {
            const double base = dimreg::master_integral({d, N, m_sq});
            const double scaled = dimreg::master_integral({d, N, lambda * m_sq});
            const double lower = dimreg::master_integral({d, N - 1.0, m_sq});
            INFO("d=" << d << " N=" << N << " m2=" << m_sq);
            CHECK(scaled == doctest::Approx(std::pow(lambda, d / 2 - N) * base).epsilon(1e-12));
            CHECK(base / lower == doctest::Approx((N - 1 - d / 2) / ((N - 1) * m_sq)).epsilon(1e-10));
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > kTrials / 2);
}
