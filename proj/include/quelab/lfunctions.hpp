#pragma once

#include <vector>

#include "quelab/numberfield.hpp"
#include "quelab/specialfun.hpp"
#include "quelab/util.hpp"

namespace quelab {

struct AbscissaViolation : std::runtime_error {
    explicit AbscissaViolation(const std::string& m) : std::runtime_error(m) {}
};

// ---- analytic building blocks (Euler-Maclaurin, valid well left of Re s = 1) ----
cplx hurwitz_zeta(cplx s, double a);
cplx riemann_zeta(cplx s);
// L(s, chi_D) for the Kronecker character of a fundamental discriminant D
cplx dirichlet_l(long long D, cplx s);
// zeta_F(s) = zeta(s) * L(s, chi_D) (degree <= 2)
cplx zeta_f_analytic(const NumberField& F, cplx s);
// Res_{s=1} zeta_F(s): finite Gauss-sum closed form, independent of unit data
double zeta_f_residue(const NumberField& F);

struct SeriesValue {
    cplx value;
    double tail = 0.0;  // bound on the truncation error
};

// Hecke L-series sum over integral ideals of norm <= cutoff:
//   zeta(s, lambda_m) = sum lambda_m(a) / Na^s,  Re s > 1
SeriesValue dedekind_zeta(const NumberField& F, cplx s, const std::vector<int>& m,
                          double cutoff);

// ---- symmetric square / M_k ledger ----
struct EulerData {
    std::vector<std::pair<long long, double>> primes;  // (Np, lambda(p)), Np ascending
    double cutoff = 0.0;
    // lambda(p^a) for the associated GL2 Satake parameters (Hecke recursion)
    static double lambda_power(double lambda_p, int a);
    // trace of the a-th power of the Satake pair: alpha^a + beta^a
    static double satake_power_trace(double lambda_p, int a);
};

EulerData euler_data_from_field(const NumberField& F, double cutoff,
                                const std::function<double(const PrimeIdeal&)>& lambda);

struct Sym2Value {
    double value = 0.0;
    double lo = 0.0, hi = 0.0;  // bracketing band from the trivial tail estimate
};

Sym2Value sym2_l_value(const EulerData& e);

// Archimedean triple-product factor (real: Watson-type, complex place form),
// normalized so the outer constants are 1; decays like k^{-1} (real) / k^{-2} (complex).
double archimedean_triple_factor(PlaceType place, int k, double rprime);

// Blocks sum_{x < Np^a <= e x} |alpha^a + beta^a|^2 log(Np) / Np^a.
std::vector<std::pair<double, double>> weak_ramanujan_blocks(const EulerData& e,
                                                             const std::vector<double>& xs);

struct MkReport {
    double k = 0.0;
    double l1_sym2 = 0.0;
    double prime_product = 0.0;   // prod (1 + 2|lambda(p)|/Np)
    double m_k = 0.0;             // prime_product / ((log k)^2 L(1,sym^2))
    double mk_core = 0.0;         // exp(-sum (|lambda(p)|-1)^2 / Np)
    double mk_bound_rhs = 0.0;    // (log k)^{1/6} (log log k)^{9/2} L^{1/2}
};

MkReport m_k(const EulerData& e, double k, double l1sym2);

}  // namespace quelab
