#include "doctest.h"

#include <cmath>

#include "quelab/specialfun.hpp"

using namespace quelab;

TEST_CASE("half-integer closed form K_{1/2}") {
    for (double x : {1.0, 2.0, 5.0}) {
        double expect = std::sqrt(M_PI / (2 * x)) * std::exp(-x);
        double got = bessel_k(BesselOrder::real(0.5), x).value;
        CHECK(std::abs(got - expect) < 1e-10 * expect);
    }
}

TEST_CASE("K_0(1) against a fixed-step integral-representation oracle") {
    // oracle: trapezoid sum of exp(-cosh t) with small fixed step, independent
    // of the adaptive quadrature used by the implementation
    double h = 0.0005, oracle = 0.5 * std::exp(-1.0);
    for (int i = 1; i * h < 22.0; ++i) oracle += std::exp(-std::cosh(i * h));
    oracle *= h;
    double got = bessel_k(BesselOrder::real(0.0), 1.0).value;
    CHECK(std::abs(got - oracle) < 1e-10);
}

TEST_CASE("imaginary order is real-valued") {
    cplx v = bessel_k_complex_order(cplx(0.0, 1.3), 0.7);
    CHECK(std::abs(v.imag()) < 1e-12);
    CHECK(bessel_k(BesselOrder::imaginary(1.3), 0.7).value == v.real());
}

TEST_CASE("bessel_k monotone decreasing for x >= nu + 1") {
    for (double nu : {0.0, 1.0, 2.5}) {
        double prev = bessel_k(BesselOrder::real(nu), nu + 1.0).value;
        for (double x = nu + 1.25; x < nu + 6.0; x += 0.25) {
            double cur = bessel_k(BesselOrder::real(nu), x).value;
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("bessel_k domain error and precision-loss flag") {
    CHECK_THROWS_AS(bessel_k(BesselOrder::real(1.0), -2.0), DomainError);
    CHECK_THROWS_AS(bessel_k(BesselOrder::real(1.0), 0.0), DomainError);
    CHECK(bessel_k(BesselOrder::real(400.0), 900.0).precision_loss);
    CHECK(!bessel_k(BesselOrder::real(2.0), 3.0).precision_loss);
}

TEST_CASE("bessel product moment") {
    SUBCASE("pi^2/32 spot value") {
        double v = bessel_product_moment(2.0, BesselOrder::real(0), BesselOrder::real(0),
                                         EvalMode::ClosedForm);
        CHECK(std::abs(v - M_PI * M_PI / 32.0) < 1e-12);
    }
    SUBCASE("half-integer reduction to pi/4") {
        double c = bessel_product_moment(1.0, BesselOrder::real(0.5), BesselOrder::real(0.5),
                                         EvalMode::ClosedForm);
        double q = bessel_product_moment(1.0, BesselOrder::real(0.5), BesselOrder::real(0.5),
                                         EvalMode::Quadrature);
        CHECK(std::abs(c - M_PI / 4) < 1e-12);
        CHECK(std::abs(q - c) < 1e-8 * c);
    }
    SUBCASE("random admissible triples: closed vs quadrature") {
        Rng rng(2024);
        int done = 0;
        while (done < 20) {
            double lambda = 0.5 + 3.0 * rng.next_double();
            BesselOrder mu = rng.next_below(2) ? BesselOrder::real(rng.next_double() * 1.2)
                                               : BesselOrder::imaginary(rng.next_double() * 2.0);
            BesselOrder nu = rng.next_below(2) ? BesselOrder::real(rng.next_double() * 1.2)
                                               : BesselOrder::imaginary(rng.next_double() * 2.0);
            // stay inside the quadrature-validated envelope (away from the
            // divergence boundary of the y=0 singularity)
            double sing = 1.0 + lambda - std::abs(mu.as_complex().real()) -
                          std::abs(nu.as_complex().real());
            if (sing < 0.45) continue;
            double c, q;
            try {
                c = bessel_product_moment(lambda, mu, nu, EvalMode::ClosedForm);
                q = bessel_product_moment(lambda, mu, nu, EvalMode::Quadrature);
            } catch (const DivergentIntegral&) {
                continue;
            }
            CHECK(std::abs(c - q) < 1e-8 * std::abs(c));
            // symmetry under mu <-> nu
            double cs = bessel_product_moment(lambda, nu, mu, EvalMode::ClosedForm);
            CHECK(c == cs);
            ++done;
        }
    }
    SUBCASE("divergent precondition") {
        CHECK_THROWS_AS(bessel_product_moment(0.1, BesselOrder::real(1.0),
                                              BesselOrder::real(1.0), EvalMode::ClosedForm),
                        DivergentIntegral);
    }
}

TEST_CASE("gamma ratio error (Stirling comparison)") {
    SUBCASE("exactly zero at s = 1") {
        CHECK(gamma_ratio_error(cplx(1.0, 0.0), 50) == 0.0);
        CHECK(gamma_ratio_error(cplx(1.0, 0.0), 777) == 0.0);
    }
    SUBCASE("first-order 1/k decay at s = 2+i") {
        double e100 = gamma_ratio_error(cplx(2.0, 1.0), 100);
        double e200 = gamma_ratio_error(cplx(2.0, 1.0), 200);
        double ratio = e100 / e200;
        CHECK(ratio > 1.5);
        CHECK(ratio < 2.5);
    }
    SUBCASE("s = 1/2, k = 50") {
        CHECK(gamma_ratio_error(cplx(0.5, 0.0), 50) < 0.05);
    }
    SUBCASE("error * k / (|s|+1)^2 bounded over the grid") {
        double worst = 0.0;
        for (cplx s : {cplx(0.5, 0), cplx(1, 1), cplx(2, 0), cplx(3, 2)})
            for (long long k : {50, 100, 200, 400, 800}) {
                double e = gamma_ratio_error(s, k);
                double t = std::abs(s) + 1.0;
                worst = std::max(worst, e * k / (t * t));
            }
        CHECK(worst < 1.0);
    }
}

TEST_CASE("whittaker local L2 integrals") {
    SUBCASE("real place k=2: (4pi)^{-2} Gamma(2)") {
        double v = whittaker_l2_local(PlaceType::Real, 2, EvalMode::ClosedForm);
        CHECK(std::abs(v - 1.0 / (16 * M_PI * M_PI)) < 1e-15);
    }
    SUBCASE("complex place k=2: 1/(128 pi^4)") {
        double v = whittaker_l2_local(PlaceType::Complex, 2, EvalMode::ClosedForm);
        CHECK(std::abs(v - 1.0 / (128 * std::pow(M_PI, 4))) < 1e-15);
    }
    SUBCASE("binomial-sum identity k=6 (exact integers)") {
        // sum_j C(k,j) j! (k-j)! = (k+1)!
        long long k = 6, sum = 0;
        auto fact = [](long long n) { long long f = 1; for (long long i = 2; i <= n; ++i) f *= i; return f; };
        for (long long j = 0; j <= k; ++j)
            sum += fact(k) / (fact(j) * fact(k - j)) * fact(j) * fact(k - j);
        CHECK(sum == fact(k + 1));
    }
    SUBCASE("modes agree to 1e-8") {
        for (int k = 2; k <= 16; k += 2) {
            for (PlaceType pl : {PlaceType::Real, PlaceType::Complex}) {
                double c = whittaker_l2_local(pl, k, EvalMode::ClosedForm);
                double q = whittaker_l2_local(pl, k, EvalMode::Quadrature);
                CHECK(std::abs(c - q) < 1e-8 * c);
            }
        }
    }
    SUBCASE("whittaker vector real place exact form, positivity") {
        WhittakerVector w{PlaceType::Real, 12};
        CHECK(w.eval_sq(0.7) == std::pow(0.7, 12) * std::exp(-4 * M_PI * 0.7));
        WhittakerVector wc{PlaceType::Complex, 8};
        CHECK(wc.eval_sq(0.5) >= 0.0);
    }
}
