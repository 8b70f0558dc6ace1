#include "quelab/lfunctions.hpp"

#include <algorithm>
#include <cmath>

namespace quelab {

namespace {

// B_2, B_4, ..., B_28
const double kBernoulli[] = {1.0 / 6,   -1.0 / 30,    1.0 / 42,      -1.0 / 30,
                             5.0 / 66,  -691.0 / 2730, 7.0 / 6,      -3617.0 / 510,
                             43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
                             -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870};

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
    if (s == cplx(1.0, 0.0)) throw AbscissaViolation("pole at s = 1");
    const int N = 36, J = 12;
    cplx sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(cplx(n + a), -s);
    cplx Na = cplx(N + a);
    sum += std::pow(Na, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Na, -s);
    // Euler-Maclaurin correction terms
    cplx rising = s;               // (s)(s+1)...(s+2j-2), built incrementally
    cplx npow = std::pow(Na, -s - 1.0);
    double fact = 2.0;             // (2j)!
    for (int j = 1; j <= J; ++j) {
        sum += kBernoulli[j - 1] / fact * rising * npow;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        npow /= Na * Na;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_l(long long D, cplx s) {
    if (D == 1) return riemann_zeta(s);
    long long q = std::llabs(D);
    cplx sum = 0.0;
    for (long long a = 1; a <= q; ++a) {
        long long chi = NumberField::kronecker(D, a);
        if (chi == 0) continue;
        sum += double(chi) * hurwitz_zeta(s, double(a) / q);
    }
    return sum * std::pow(cplx((double)q), -s);
}

cplx zeta_f_analytic(const NumberField& F, cplx s) {
    if (F.kind == FieldKind::Rational) return riemann_zeta(s);
    return riemann_zeta(s) * dirichlet_l(F.disc, s);
}

double zeta_f_residue(const NumberField& F) {
    if (F.kind == FieldKind::Rational) return 1.0;
    long long D = F.disc, q = std::llabs(D);
    if (D > 0) {
        // L(1, chi_D) = -(1/sqrt D) sum_a chi(a) log(2 sin(pi a / D))
        double s = 0.0;
        for (long long a = 1; a < q; ++a) {
            long long chi = NumberField::kronecker(D, a);
            if (chi) s += chi * std::log(2.0 * std::sin(M_PI * a / q));
        }
        return -s / std::sqrt((double)q);
    }
    // L(1, chi_D) = -(pi / q^{3/2}) sum_a chi(a) a
    double s = 0.0;
    for (long long a = 1; a < q; ++a) {
        long long chi = NumberField::kronecker(D, a);
        if (chi) s += double(chi) * a;
    }
    return -M_PI * s / (q * std::sqrt((double)q));
}

SeriesValue dedekind_zeta(const NumberField& F, cplx s, const std::vector<int>& m,
                          double cutoff) {
    if (s.real() <= 1.0)
        throw AbscissaViolation("dedekind_zeta needs Re s > 1");
    if (cutoff > 1e7) throw RegionTooLarge("cutoff exceeds 1e7");
    if ((int)m.size() != F.r - 1) throw DimensionMismatch("character index length");
    int mi = m.empty() ? 0 : m[0];
    SeriesValue out;
    double sigma = s.real();
    if (mi == 0) {
        // norm-count path: r(n) = sum_{e | n} chi_D(e)
        long long X = (long long)cutoff;
        if (F.kind == FieldKind::Rational) {
            cplx acc = 0.0;
            for (long long n = 1; n <= X; ++n) acc += std::pow(cplx((double)n), -s);
            out.value = acc;
        } else {
            std::vector<int> r(X + 1, 0);
            for (long long e = 1; e <= X; ++e) {
                int chi = (int)NumberField::kronecker(F.disc, e);
                if (!chi) continue;
                for (long long n = e; n <= X; n += e) r[n] += chi;
            }
            cplx acc = 0.0;
            for (long long n = 1; n <= X; ++n)
                if (r[n]) acc += double(r[n]) * std::pow(cplx((double)n), -s);
            out.value = acc;
        }
    } else {
        cplx acc = 0.0;
        for (const auto& I : F.ideals_up_to(cutoff))
            acc += F.lambda_ideal(mi, I.gen) * std::pow(cplx((double)I.norm), -s);
        out.value = acc;
    }
    // crude divisor-bound tail: sum_{n > X} d(n) n^{-sigma}
    out.tail = 3.0 * (std::log(cutoff) + 1.0) * std::pow(cutoff, 1.0 - sigma) / (sigma - 1.0);
    return out;
}

double EulerData::lambda_power(double lambda_p, int a) {
    // Hecke recursion lambda(p^{a+1}) = lambda(p) lambda(p^a) - lambda(p^{a-1})
    if (a == 0) return 1.0;
    double prev = 1.0, cur = lambda_p;
    for (int i = 1; i < a; ++i) {
        double next = lambda_p * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double EulerData::satake_power_trace(double lambda_p, int a) {
    // alpha^a + beta^a with alpha + beta = lambda, alpha beta = 1
    double c = std::clamp(lambda_p / 2.0, -1.0, 1.0);
    return 2.0 * std::cos(a * std::acos(c));
}

EulerData euler_data_from_field(const NumberField& F, double cutoff,
                                const std::function<double(const PrimeIdeal&)>& lambda) {
    EulerData e;
    e.cutoff = cutoff;
    for (const auto& pi : F.primes_up_to(cutoff, false))
        e.primes.push_back({pi.norm, lambda(pi)});
    std::sort(e.primes.begin(), e.primes.end());
    return e;
}

Sym2Value sym2_l_value(const EulerData& e) {
    // partial Euler product of (1-a^2/p)^-1 (1-1/p)^-1 (1-b^2/p)^-1 at s=1;
    // (1-a^2 x)(1-b^2 x) = 1 - (lambda^2-2) x + x^2
    KahanSum logv;
    for (auto& [np, lam] : e.primes) {
        double x = 1.0 / np;
        double q = 1.0 - (lam * lam - 2.0) * x + x * x;
        logv.add(-std::log(q) - std::log(1.0 - x));
    }
    Sym2Value out;
    out.value = std::exp(logv.value());
    double P = e.cutoff;
    double w = 4.0 * std::log(std::log(2.0 * P) / std::log(P));
    out.lo = out.value * std::exp(-w);
    out.hi = out.value * std::exp(w);
    return out;
}

double archimedean_triple_factor(PlaceType place, int k, double rprime) {
    if (k < 4) throw DomainError("weight too small");
    auto lg_r = [](cplx z) {  // log Gamma_R(z) = -z/2 log pi + log Gamma(z/2)
        return -z / 2.0 * std::log(M_PI) + log_gamma(z / 2.0);
    };
    cplx ir(0.0, rprime);
    cplx acc = 0.0;
    if (place == PlaceType::Real) {
        // numerator: completed triple-product factors at s = 1/2; denominator:
        // the sym^2 factors at s = 1 (Watson normalization, ~ 1/k for large k)
        for (int sg = -1; sg <= 1; sg += 2) {
            cplx sr = double(sg) * ir;
            acc += lg_r(cplx(k - 0.5) + sr) + lg_r(cplx(k + 0.5) + sr) +
                   lg_r(cplx(0.5) + sr) + lg_r(cplx(1.5) + sr);
            acc -= lg_r(cplx(0.5) + 2.0 * sr);
        }
        acc -= 2.0 * (lg_r(cplx((double)k)) + lg_r(cplx((double)k + 1.0)));
    } else {
        for (int sg = -1; sg <= 1; sg += 2) {
            cplx sr = double(sg) * ir;
            acc += 2.0 * log_gamma((cplx(1.0 + k) + sr) / 2.0) +
                   2.0 * log_gamma((cplx(1.0) + sr) / 2.0);
            acc -= 2.0 * log_gamma(cplx(1.0) + sr);
        }
        acc -= 4.0 * log_gamma(cplx(1.0 + k / 2.0));
    }
    return std::exp(acc.real());
}

std::vector<std::pair<double, double>> weak_ramanujan_blocks(const EulerData& e,
                                                             const std::vector<double>& xs) {
    std::vector<std::pair<double, double>> out;
    for (double x : xs) {
        double hi = std::exp(1.0) * x;
        KahanSum block;
        for (auto& [np, lam] : e.primes) {
            if (np > hi) break;
            double lp = std::log((double)np);
            double npa = (double)np;
            for (int a = 1; npa <= hi; ++a, npa *= np) {
                if (npa <= x) continue;
                double c = EulerData::satake_power_trace(lam, a);
                block.add(c * c * lp / npa);
            }
        }
        out.push_back({x, block.value()});
    }
    return out;
}

MkReport m_k(const EulerData& e, double k, double l1sym2) {
    if (l1sym2 <= 0) throw DomainError("need L(1, sym^2) > 0");
    MkReport r;
    r.k = k;
    r.l1_sym2 = l1sym2;
    KahanSum logprod, core;
    for (auto& [np, lam] : e.primes) {
        if (np > k) break;
        logprod.add(std::log1p(2.0 * std::abs(lam) / np));
        double t = std::abs(lam) - 1.0;
        core.add(t * t / np);
    }
    double lk = std::log(k);
    r.prime_product = std::exp(logprod.value());
    r.m_k = r.prime_product / (lk * lk * l1sym2);
    r.mk_core = std::exp(-core.value());
    r.mk_bound_rhs = std::pow(lk, 1.0 / 6) * std::pow(std::log(lk), 4.5) * std::sqrt(l1sym2);
    return r;
}

}  // namespace quelab
