#pragma once

#include <vector>

#include "quelab/lfunctions.hpp"
#include "quelab/numberfield.hpp"
#include "quelab/util.hpp"

namespace quelab {

struct NotConvergent : std::runtime_error {
    explicit NotConvergent(const std::string& m) : std::runtime_error(m) {}
};
struct PoleAtS1 : std::runtime_error {
    explicit PoleAtS1(const std::string& m) : std::runtime_error(m) {}
};
struct PoleOnPath : std::runtime_error {
    explicit PoleOnPath(const std::string& m) : std::runtime_error(m) {}
};
struct SupportTooWide : std::runtime_error {
    explicit SupportTooWide(const std::string& m) : std::runtime_error(m) {}
};

// Point on H_F: per place, x (real, or complex at a complex place) and y > 0.
struct PointOnH {
    std::vector<double> x_re, x_im, y;
    static PointOnH make(const NumberField& F, std::vector<double> xre,
                         std::vector<double> y, std::vector<double> xim = {});
};

// y-vector of gamma z for gamma with bottom row (c, d); also N y(gamma z).
std::vector<double> y_of_gamma_z(const NumberField& F, const RingElement& c,
                                 const RingElement& d, const PointOnH& z);
double norm_of_yvec(const NumberField& F, const std::vector<double>& yv);

// Full Moebius action of an integral matrix [[a,b],[c,d]] on H_F.
PointOnH apply_matrix(const NumberField& F, const RingElement& a, const RingElement& b,
                      const RingElement& c, const RingElement& d, const PointOnH& z);

struct EisParams {
    const NumberField* field = nullptr;
    cplx s;
    std::vector<int> m;
};

struct EisValue {
    cplx value;
    double tail = 0.0;  // truncation estimate
};

// Smooth compactly supported log-bump sin^{2m}(pi log(y/a)/L) on [a, a e^L],
// with elementary closed-form Mellin transform.
struct BumpProfile {
    double a = 1.0;
    double L = 1.0;
    int m = 4;
    double lo() const { return a; }
    double hi() const { return a * std::exp(L); }
    double operator()(double y) const;
    cplx mellin(cplx s) const;  // int_0^inf psi(y) y^{s-1} dy
};

// Evaluator with the (s, m)-dependent data precomputed (the coefficient set).
class EisensteinSeries {
public:
    EisensteinSeries(const NumberField& F, cplx s, std::vector<int> m);

    cplx scattering_phi() const { return phi_; }
    cplx theta(cplx s) const;

    // Fourier-expansion mode (Re s > 1/2 for m = 0; Re s > 1 otherwise)
    EisValue fourier(const PointOnH& z, double nterms) const;

    // truncated coset/lattice sum mode (Re s >= 1.2)
    EisValue direct(const PointOnH& z, long long cutoff) const;

    const NumberField& field() const { return *F_; }
    cplx s() const { return s_; }
    int m() const { return m_; }

private:
    const NumberField* F_;
    cplx s_;
    int m_ = 0;
    cplx phi_ = 0.0;
    cplx zeta_2s_;  // zeta(2s, lambda_{-2m})
    cplx hecke_zeta(cplx w, int mm) const;
    friend cplx scattering_phi_residue(const NumberField& F);
};

cplx scattering_phi(const NumberField& F, cplx s, const std::vector<int>& m);
// residue of phi(s, 0) at s = 1, by a 64-node circular contour of radius 1e-3
cplx scattering_phi_residue(const NumberField& F);

// Pure incomplete Eisenstein series E(psi, m | z) (finite coset sum).
cplx incomplete_eisenstein(const NumberField& F, const BumpProfile& psi,
                           const std::vector<int>& m, const PointOnH& z);

// Unipotent Eisenstein series E(g | z) for g(y) = prod_i h(y_i).
double unipotent_eisenstein(const NumberField& F, const BumpProfile& h, const PointOnH& z);

// <E(g|.), 1> = 2^{-r2} omega_+^{-1} sqrt|D| G(-1,0)
double unipotent_inner_product_one(const NumberField& F, const BumpProfile& h);

double volume_Y(const NumberField& F);
double cusp_volume_element(const NumberField& F);  // V_c = 2^{r1-r2-1+delta} R

// canonical representative test for the primitive-pair sum (one per unit orbit)
bool pair_is_canonical(const NumberField& F, const RingElement& c, const RingElement& d);

// enumerate canonical primitive pairs with all integer coordinates <= cutoff,
// calling fn(c, d) for each
void for_canonical_pairs(const NumberField& F, long long cutoff,
                         const std::function<void(const RingElement&, const RingElement&)>& fn);

}  // namespace quelab
