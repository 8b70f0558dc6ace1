#include "quelab/specialfun.hpp"

#include <algorithm>
#include <cmath>

namespace quelab {

cplx bessel_k_complex_order(cplx nu, double x) {
    if (!(x > 0)) throw DomainError("bessel_k needs x > 0");
    // K_nu(x) = K_{-nu}(x); work with Re nu >= 0
    if (nu.real() < 0) nu = -nu;
    double sigma = nu.real(), tau = nu.imag();
    // exponent f(t) = sigma t - x cosh t has its max at sinh t* = sigma/x
    double tstar = std::asinh(sigma / x);
    double fstar = sigma * tstar - x * std::cosh(tstar);
    // truncate where the integrand has dropped by e^{-50}
    double T = tstar + 1.0;
    while (sigma * T - x * std::cosh(T) > fstar - 50.0) T += 1.0;
    auto integrand = [&](double t) -> cplx {
        double base = -x * std::cosh(t) - fstar;
        // scaled cosh/sinh(sigma t) so nothing overflows before recombination
        double ep = std::exp(base + sigma * t), em = std::exp(base - sigma * t);
        double ch = 0.5 * (ep + em), sh = 0.5 * (ep - em);
        return cplx(ch * std::cos(tau * t), sh * std::sin(tau * t));
    };
    cplx val = integrate_c(integrand, 0.0, T, 1e-12, 1e-18);
    return val * std::exp(fstar);
}

BesselValue bessel_k(BesselOrder order, double x) {
    if (!(x > 0)) throw DomainError("bessel_k needs x > 0");
    BesselValue out;
    out.precision_loss = std::abs(order.value) > 500.0 || x > 1e4 ||
                         x * std::abs(order.value) > 1e5;
    cplx v = bessel_k_complex_order(order.as_complex(), x);
    out.value = v.real();  // imaginary part vanishes for real and imaginary orders
    return out;
}

double WhittakerVector::eval_sq(double y) const {
    if (place == PlaceType::Real) return std::pow(y, weight) * std::exp(-4 * M_PI * y);
    // complex place: y^{k+2} sum_j binom(k,j) K_{k/2-j}(4 pi y)^2
    int k = weight;
    double sum = 0.0;
    double lgk = std::lgamma(k + 1.0);
    for (int j = 0; j <= k; ++j) {
        double lbinom = lgk - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0);
        double kv = bessel_k_complex_order(cplx(std::abs(k / 2.0 - j), 0.0), 4 * M_PI * y).real();
        sum += std::exp(lbinom) * kv * kv;
    }
    return std::pow(y, k + 2) * sum;
}

double bessel_product_moment(double lambda, BesselOrder mu, BesselOrder nu, EvalMode mode) {
    cplx mc = mu.as_complex(), nc = nu.as_complex();
    for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) {
            cplx arg = (1.0 + lambda + double(s1) * mc + double(s2) * nc) / 2.0;
            if (arg.real() <= 0)
                throw DivergentIntegral("1 + lambda +- mu +- nu must have positive real part");
        }
    if (mode == EvalMode::ClosedForm) {
        cplx lg = 0.0;
        for (int s1 = -1; s1 <= 1; s1 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2)
                lg += log_gamma((1.0 + lambda + double(s1) * mc + double(s2) * nc) / 2.0);
        cplx v = std::exp((lambda - 2.0) * std::log(2.0) - log_gamma(cplx(lambda + 1.0)) + lg);
        return v.real();
    }
    // quadrature in u = log y (integrand ~ y^{1+lambda-|Re mu|-|Re nu|} dy/y at 0)
    double sing = 1.0 + lambda - std::abs(mc.real()) - std::abs(nc.real());
    double ulo = std::min(-3.0, -46.0 / std::max(sing, 0.35));
    double uhi = std::log(60.0 + 10.0 * std::abs(lambda));
    auto f = [&](double u) {
        double y = std::exp(u);
        if (y == 0.0) return 0.0;
        double kmu = bessel_k_complex_order(mc, y).real();
        double knu = bessel_k_complex_order(nc, y).real();
        return std::exp((lambda + 1.0) * u) * kmu * knu;
    };
    return integrate(f, ulo, uhi, 1e-10, 1e-16, 20000);
}

double gamma_ratio_error(cplx s, long long k) {
    if (k < 2) throw DomainError("need k >= 2");
    if (s.imag() == 0.0 && s.real() == std::floor(s.real()) && s.real() >= 1 && s.real() <= 8) {
        // exact integer shift: Gamma(s+k-1)/Gamma(k-1) = (k-1) k ... (k+s-2)
        int si = (int)s.real();
        double ratio = 1.0;
        for (int j = 0; j < si; ++j) ratio *= double(k - 1 + j) / double(k - 1);
        return std::abs(ratio - 1.0);
    }
    cplx lg = log_gamma(cplx(double(k - 1)) + s) - log_gamma(cplx(double(k - 1))) -
              s * std::log(double(k - 1));
    return std::abs(std::exp(lg) - 1.0);
}

double whittaker_l2_local(PlaceType place, int k, EvalMode mode) {
    if (k < 2 || k % 2 != 0) throw DomainError("weight must be even and >= 2");
    if (mode == EvalMode::ClosedForm) {
        if (place == PlaceType::Real)
            return std::exp(-k * std::log(4 * M_PI) + std::lgamma((double)k));
        return std::exp(-5 * std::log(2.0) - 2 * std::log(M_PI) - k * std::log(2 * M_PI) +
                        2 * std::lgamma(k / 2.0 + 1.0));
    }
    if (k > 60) throw Underflow("quadrature mode validated for k <= 60");
    WhittakerVector w{place, k};
    // integrate |K(y)|^2 dy/y in u = log y; the integrand peaks near y ~ k/(4 pi)
    double up = std::log(std::max(1.0, k / (4 * M_PI)));
    auto f = [&](double u) { return w.eval_sq(std::exp(u)); };
    return integrate(f, up - 14.0, up + 6.0, 1e-11, 1e-300);
}

}  // namespace quelab
