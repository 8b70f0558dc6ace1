#pragma once

#include <stdexcept>
#include <string>

#include "quelab/util.hpp"

namespace quelab {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};
struct DivergentIntegral : std::runtime_error {
    explicit DivergentIntegral(const std::string& m) : std::runtime_error(m) {}
};
struct Underflow : std::runtime_error {
    explicit Underflow(const std::string& m) : std::runtime_error(m) {}
};

struct BesselOrder {
    enum class Kind { Real, Imaginary } kind = Kind::Real;
    double value = 0.0;
    static BesselOrder real(double nu) { return {Kind::Real, nu}; }
    static BesselOrder imaginary(double r) { return {Kind::Imaginary, r}; }
    cplx as_complex() const {
        return kind == Kind::Real ? cplx(value, 0.0) : cplx(0.0, value);
    }
};

struct BesselValue {
    double value = 0.0;
    bool precision_loss = false;  // outside the validated envelope
};

// Modified Bessel K for general complex order and x > 0, via the real integral
// representation int_0^inf exp(-x cosh t) cosh(nu t) dt.
cplx bessel_k_complex_order(cplx nu, double x);

// Spec-facing wrapper: real or purely imaginary order (K_{ir}(x) is real).
BesselValue bessel_k(BesselOrder order, double x);

enum class EvalMode { ClosedForm, Quadrature };

// int_0^inf y^lambda K_mu(y) K_nu(y) dy; closed form
//   2^{lambda-2}/Gamma(lambda+1) * prod_{+-,+-} Gamma((1+lambda+-mu+-nu)/2)
double bessel_product_moment(double lambda, BesselOrder mu, BesselOrder nu, EvalMode mode);

// | Gamma(s+k-1)/Gamma(k-1) * (k-1)^{-s} - 1 |; exactly 0 at s = 1.
double gamma_ratio_error(cplx s, long long k);

enum class PlaceType { Real, Complex };

// Whittaker vector magnitude |K_i(y)|^2 at one infinite place.
struct WhittakerVector {
    PlaceType place = PlaceType::Real;
    int weight = 2;  // k_i, even
    double eval_sq(double y) const;
};

// Local L^2 integral int_0^inf |K_i(y)|^2 dy/y :
//   real place   (4 pi)^{-k} Gamma(k)
//   complex place 2^{-5} pi^{-2} (2 pi)^{-k} Gamma(1 + k/2)^2
double whittaker_l2_local(PlaceType place, int k, EvalMode mode);

}  // namespace quelab
