#include "quelab/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quelab {

namespace {

using i128 = __int128;

long long ll_gcd(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = (long long)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// sign of P + Q*sqrt(d), d > 0, exact
int sign_quad(i128 P, i128 Q, long long d) {
    if (Q == 0) return P > 0 ? 1 : (P < 0 ? -1 : 0);
    if (P == 0) return Q > 0 ? 1 : -1;
    if (P > 0 && Q > 0) return 1;
    if (P < 0 && Q < 0) return -1;
    i128 lhs = P * P, rhs = Q * Q * (i128)d;
    if (P > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

}  // namespace

long long NumberField::kronecker(long long a, long long n) {
    // Kronecker symbol (a/n) for n >= 1
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    long long result = 1;
    if (n < 0) { n = -n; if (a < 0) result = -result; }
    while (n % 2 == 0) {
        n /= 2;
        long long am = ((a % 8) + 8) % 8;
        if (am % 2 == 0) return 0;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n; if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

RingElement NumberField::element(long long a, long long b, long long den) const {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { den = -den; a = -a; b = -b; }
    long long g = ll_gcd(ll_gcd(a, b), den);
    if (g > 1) { a /= g; b /= g; den /= g; }
    RingElement x;
    x.a = a; x.b = b; x.den = den;
    switch (kind) {
        case FieldKind::Rational:
            x.emb1 = double(a) / den;
            break;
        case FieldKind::RealQuadratic:
            x.emb1 = (a + b * omega1) / den;
            x.emb2 = (a + b * omega2) / den;
            break;
        case FieldKind::ImaginaryQuadratic: {
            cplx e = (cplx(double(a)) + double(b) * omega_c) / double(den);
            x.emb_re = e.real(); x.emb_im = e.imag();
            break;
        }
    }
    return x;
}

RingElement NumberField::add(const RingElement& x, const RingElement& y) const {
    return element(x.a * y.den + y.a * x.den, x.b * y.den + y.b * x.den, x.den * y.den);
}

RingElement NumberField::sub(const RingElement& x, const RingElement& y) const {
    return element(x.a * y.den - y.a * x.den, x.b * y.den - y.b * x.den, x.den * y.den);
}

RingElement NumberField::neg(const RingElement& x) const {
    return element(-x.a, -x.b, x.den);
}

RingElement NumberField::mul(const RingElement& x, const RingElement& y) const {
    if (kind == FieldKind::Rational)
        return element(x.a * y.a, 0, x.den * y.den);
    i128 a1 = x.a, b1 = x.b, a2 = y.a, b2 = y.b;
    i128 ra, rb;
    if (omega_half) {
        i128 c = (d - 1) / 4;  // omega^2 = omega + (d-1)/4
        ra = a1 * a2 + b1 * b2 * c;
        rb = a1 * b2 + a2 * b1 + b1 * b2;
    } else {
        ra = a1 * a2 + b1 * b2 * (i128)d;  // omega^2 = d
        rb = a1 * b2 + a2 * b1;
    }
    return element((long long)ra, (long long)rb, x.den * y.den);
}

RingElement NumberField::conj(const RingElement& x) const {
    if (kind == FieldKind::Rational) return x;
    if (omega_half) return element(x.a + x.b, -x.b, x.den);  // conj(omega) = 1 - omega
    return element(x.a, -x.b, x.den);
}

Rational NumberField::norm(const RingElement& x) const {
    if (kind == FieldKind::Rational) return {x.a, x.den};
    i128 n;
    if (omega_half)
        n = (i128)x.a * x.a + (i128)x.a * x.b - (i128)x.b * x.b * ((d - 1) / 4);
    else
        n = (i128)x.a * x.a - (i128)x.b * x.b * (i128)d;
    long long num = (long long)n;
    long long den = x.den * x.den;
    long long g = ll_gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    return {num, den};
}

Rational NumberField::trace(const RingElement& x) const {
    if (kind == FieldKind::Rational) return {x.a, x.den};
    long long num = omega_half ? 2 * x.a + x.b : 2 * x.a;
    long long den = x.den;
    long long g = ll_gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    return {num, den};
}

int NumberField::sign_at(const RingElement& x, int place) const {
    if (kind == FieldKind::Rational)
        return x.a > 0 ? 1 : (x.a < 0 ? -1 : 0);
    if (kind == FieldKind::ImaginaryQuadratic)
        throw std::logic_error("no real embedding at a complex place");
    // a + b*omega at embedding `place`; reduce to P + Q sqrt(d)
    i128 P, Q;
    if (omega_half) { P = 2 * (i128)x.a + x.b; Q = x.b; }
    else { P = 2 * (i128)x.a; Q = 2 * (i128)x.b; }
    if (place == 1) Q = -Q;
    return sign_quad(P, Q, d);
}

bool NumberField::totally_positive(const RingElement& x) const {
    if (x.is_zero()) return false;
    if (kind == FieldKind::Rational) return x.a > 0;
    if (kind == FieldKind::ImaginaryQuadratic) return true;  // no real place
    return sign_at(x, 0) > 0 && sign_at(x, 1) > 0;
}

int NumberField::compare_first_embedding(const RingElement& x, const RingElement& y) const {
    if (kind == FieldKind::ImaginaryQuadratic)
        throw std::logic_error("no real embedding at a complex place");
    return sign_at(sub(x, y), 0);
}

std::vector<double> NumberField::embeddings_abs(const RingElement& x) const {
    switch (kind) {
        case FieldKind::Rational: return {std::abs(x.emb1)};
        case FieldKind::RealQuadratic: return {std::abs(x.emb1), std::abs(x.emb2)};
        case FieldKind::ImaginaryQuadratic:
            return {std::hypot(x.emb_re, x.emb_im)};
    }
    return {};
}

RingElement NumberField::mul_unit_pow(const RingElement& x, int j) const {
    if (kind != FieldKind::RealQuadratic || j == 0) return x;
    // eps0 has norm -1, so eps0^{-1} = -conj(eps0)
    RingElement u = j > 0 ? eps0 : neg(conj(eps0));
    RingElement y = x;
    for (int i = 0; i < std::abs(j); ++i) y = mul(y, u);
    return y;
}

RingElement NumberField::reduce_mod_units(const RingElement& x) const {
    if (kind != FieldKind::RealQuadratic) return x;
    // normal form in the cone 0 <= log(x_1 / sqrt(Nx)) < log(eps_plus_1);
    // float estimate first, then exact fix-up
    double n = std::abs(x.emb1 * x.emb2);
    double t = std::log(std::abs(x.emb1) / std::sqrt(n)) / log_eps_plus;
    int j = (int)std::floor(t);
    RingElement y = mul_unit_pow(x, -2 * j);  // eps_plus = eps0^2
    auto too_low = [&](const RingElement& v) {
        // v1^2 < |Nv|  <=>  v1 < v2 in magnitude
        RingElement sq = mul(v, v);
        Rational nv = norm(v);
        RingElement nrm = element(std::abs(nv.num), 0, nv.den);
        return compare_first_embedding(sq, nrm) < 0;
    };
    auto too_high = [&](const RingElement& v) {
        RingElement sq = mul(v, v);
        Rational nv = norm(v);
        RingElement bound = mul(element(std::abs(nv.num), 0, nv.den), mul(eps_plus, eps_plus));
        return compare_first_embedding(sq, bound) >= 0;
    };
    int guard = 0;
    while (too_low(y) && guard++ < 64) y = mul_unit_pow(y, 2);
    while (too_high(y) && guard++ < 64) y = mul_unit_pow(y, -2);
    return y;
}

RingElement NumberField::canonical_torsion(const RingElement& x) const {
    std::vector<RingElement> orbit{x, neg(x)};
    if (kind == FieldKind::ImaginaryQuadratic && (d == -1 || d == -3)) {
        RingElement w = element(0, 1);  // i for d=-1; primitive 6th root for d=-3
        RingElement y = x;
        int extra = d == -1 ? 1 : 2;
        for (int i = 0; i < extra; ++i) {
            y = mul(y, w);
            orbit.push_back(y);
            orbit.push_back(neg(y));
        }
    }
    RingElement best = orbit[0];
    for (const auto& o : orbit)
        if (std::pair{o.a, o.b} > std::pair{best.a, best.b}) best = o;
    return best;
}

RingElement NumberField::tp_generator(const RingElement& x) const {
    if (x.is_zero()) throw std::invalid_argument("zero element");
    switch (kind) {
        case FieldKind::Rational:
            return element(std::abs(x.a), 0, x.den);
        case FieldKind::ImaginaryQuadratic:
            return canonical_torsion(x);
        case FieldKind::RealQuadratic: {
            RingElement y = x;
            if (norm(y).num < 0) y = mul(y, eps0);
            if (sign_at(y, 0) < 0) y = neg(y);
            return reduce_mod_units(y);
        }
    }
    return x;
}

double NumberField::beta_coeff(int place) const {
    // e_p^1: the second row of A^{-1} (real quadratic only)
    if (kind != FieldKind::RealQuadratic) return 0.0;
    return (place == 0 ? 1.0 : -1.0) / (2.0 * log_eps_plus);
}

cplx NumberField::lambda_char(const std::vector<int>& m, const std::vector<double>& y) const {
    if ((int)m.size() != r - 1)
        throw DimensionMismatch("character index has length " + std::to_string(m.size()) +
                                ", expected " + std::to_string(r - 1));
    if ((int)y.size() != r)
        throw DimensionMismatch("y has wrong number of places");
    if (r == 1 || m[0] == 0) return cplx(1.0, 0.0);
    double arg = M_PI * m[0] * std::log(y[0] / y[1]) / log_eps_plus;
    return std::polar(1.0, arg);
}

cplx NumberField::lambda_ideal(int m, const RingElement& g) const {
    if (kind != FieldKind::RealQuadratic || m == 0) return cplx(1.0, 0.0);
    double arg = M_PI * m * std::log(g.emb1 / g.emb2) / log_eps_plus;
    return std::polar(1.0, arg);
}

std::vector<RingElement> NumberField::enumerate_totally_positive(const std::vector<double>& x) const {
    if ((int)x.size() != r) throw DimensionMismatch("region has wrong number of places");
    double Nx = 1.0;
    for (int i = 0; i < r; ++i) {
        if (x[i] <= 0) return {};
        Nx *= (i < r1) ? x[i] : x[i] * x[i];
    }
    if (Nx > 1e8) throw RegionTooLarge("region norm exceeds 1e8");
    std::vector<RingElement> out;
    if (kind == FieldKind::Rational) {
        for (long long a = 1; a <= (long long)std::floor(x[0] + 1e-12); ++a)
            out.push_back(element(a));
        return out;
    }
    if (kind == FieldKind::RealQuadratic) {
        double sq = omega1 - omega2;  // sqrt(d)
        long long blo = (long long)std::floor(-x[1] / sq) - 1;
        long long bhi = (long long)std::ceil(x[0] / sq) + 1;
        for (long long b = blo; b <= bhi; ++b) {
            double alo = std::max(-b * omega1, -b * omega2);
            double ahi = std::min(x[0] - b * omega1, x[1] - b * omega2);
            long long a0 = (long long)std::floor(alo) - 1;
            long long a1b = (long long)std::ceil(ahi) + 1;
            for (long long a = a0; a <= a1b; ++a) {
                RingElement e = element(a, b);
                if (!totally_positive(e)) continue;
                if (e.emb1 > x[0] + 1e-12 || e.emb2 > x[1] + 1e-12) continue;
                out.push_back(e);
            }
        }
    } else {
        double lim = x[0];
        long long bmax = (long long)std::ceil(lim / std::abs(omega_c.imag())) + 1;
        for (long long b = -bmax; b <= bmax; ++b) {
            for (long long a = (long long)std::floor(-lim - std::abs(b * omega_c.real())) - 1;
                 a <= (long long)std::ceil(lim + std::abs(b * omega_c.real())) + 1; ++a) {
                if (a == 0 && b == 0) continue;
                RingElement e = element(a, b);
                if (std::hypot(e.emb_re, e.emb_im) > lim + 1e-12) continue;
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const RingElement& u, const RingElement& v) {
        long long nu = std::abs(norm(u).num), nv = std::abs(norm(v).num);
        if (nu != nv) return nu < nv;
        return std::pair{u.a, u.b} < std::pair{v.a, v.b};
    });
    return out;
}

namespace {

std::vector<long long> sieve_primes(long long z) {
    std::vector<long long> primes;
    if (z < 2) return primes;
    std::vector<bool> comp(z + 1, false);
    for (long long i = 2; i <= z; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (long long j = i * i; j <= z; j += i) comp[j] = true;
        }
    }
    return primes;
}

// Tonelli-Shanks square root mod odd prime p; -1 if not a residue
long long sqrt_mod(long long a, long long p) {
    a %= p; if (a < 0) a += p;
    if (a == 0) return 0;
    auto powmod = [&](long long b, long long e) {
        i128 r = 1, bb = b % p;
        while (e) { if (e & 1) r = r * bb % p; bb = bb * bb % p; e >>= 1; }
        return (long long)r;
    };
    if (p == 2) return a % 2;
    if (powmod(a, (p - 1) / 2) != 1) return -1;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4);
    long long q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long long zq = 2;
    while (powmod(zq, (p - 1) / 2) != p - 1) ++zq;
    long long m = s, c = powmod(zq, q), t = powmod(a, q), rr = powmod(a, (q + 1) / 2);
    while (t != 1) {
        long long t2 = t, i = 0;
        while (t2 != 1) { t2 = (long long)((i128)t2 * t2 % p); ++i; }
        long long b = c;
        for (long long j = 0; j < m - i - 1; ++j) b = (long long)((i128)b * b % p);
        m = i;
        c = (long long)((i128)b * b % p);
        t = (long long)((i128)t * c % p);
        rr = (long long)((i128)rr * b % p);
    }
    return rr;
}

}  // namespace

RingElement NumberField::prime_generator(long long p, Splitting s) const {
    if (kind == FieldKind::Rational) return element(p);
    if (s == Splitting::Inert) return element(p);
    // search b = 0, 1, ... for a with |N(a + b omega)| = p
    for (long long b = 0; b < 4 * isqrt_ll(p) + 8; ++b) {
        if (omega_half) {
            // a^2 + a b - b^2 (d-1)/4 = +-p  => a = (-b +- sqrt(b^2 d +- 4p))/2
            for (int sg = -1; sg <= 1; sg += 2) {
                long long disc2 = b * b * d + 4 * sg * p;
                if (disc2 < 0) continue;
                long long rt = isqrt_ll(disc2);
                if (rt * rt != disc2) continue;
                for (int s2 = -1; s2 <= 1; s2 += 2) {
                    long long num = -b + s2 * rt;
                    if (num % 2 != 0) continue;
                    RingElement g = element(num / 2, b);
                    if (std::abs(norm(g).num) == p) return tp_generator(g);
                }
            }
        } else {
            // a^2 - d b^2 = +-p
            for (int sg = -1; sg <= 1; sg += 2) {
                long long rhs = sg * p + d * b * b;
                if (rhs < 0) continue;
                long long rt = isqrt_ll(rhs);
                if (rt * rt != rhs) continue;
                RingElement g = element(rt, b);
                if (std::abs(norm(g).num) == p) return tp_generator(g);
            }
        }
    }
    throw std::runtime_error("no generator of norm " + std::to_string(p) +
                             " found (class number one violated?)");
}

std::vector<PrimeIdeal> NumberField::primes_up_to(double z, bool with_generators) const {
    if (z > 1e7) throw RegionTooLarge("prime bound exceeds 1e7");
    std::vector<PrimeIdeal> out;
    long long zl = (long long)std::floor(z);
    if (zl < 2) return out;
    auto primes = sieve_primes(zl);
    for (long long p : primes) {
        if (kind != FieldKind::Rational && kronecker(disc, p) == -1) {
            if ((double)p * p > z) continue;
            PrimeIdeal pi;
            pi.p = p; pi.norm = p * p; pi.residue_degree = 2; pi.splitting = Splitting::Inert;
            pi.gen = element(p);
            out.push_back(pi);
            continue;
        }
        if (with_generators) {
            for (auto& pi : primes_above(p)) out.push_back(pi);
        } else {
            // splitting data only (fast path for prime-counting uses)
            if (kind == FieldKind::Rational) {
                PrimeIdeal pi;
                pi.p = p; pi.norm = p; pi.splitting = Splitting::Split; pi.has_root = true;
                out.push_back(pi);
            } else if (kronecker(disc, p) == 0) {
                PrimeIdeal pi;
                pi.p = p; pi.norm = p; pi.splitting = Splitting::Ramified;
                out.push_back(pi);
            } else {
                for (int which = 0; which < 2; ++which) {
                    PrimeIdeal pi;
                    pi.p = p; pi.norm = p; pi.splitting = Splitting::Split;
                    pi.omega_root = which;
                    out.push_back(pi);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.omega_root < b.omega_root;
    });
    return out;
}

std::vector<NumberField::Ideal> NumberField::ideals_up_to(double X) const {
    if (X > 1e7) throw RegionTooLarge("ideal bound exceeds 1e7");
    std::vector<Ideal> out;
    out.push_back({1, element(1)});
    auto primes = primes_up_to(X, true);
    // DFS over prime ideals in order
    std::function<void(size_t, long long, RingElement)> rec =
        [&](size_t i, long long n, RingElement g) {
            for (size_t j = i; j < primes.size(); ++j) {
                if ((double)n * primes[j].norm > X) continue;
                long long nn = n * primes[j].norm;
                RingElement gg = tp_generator(mul(g, primes[j].gen));
                out.push_back({nn, gg});
                rec(j + 1, nn, gg);
                // higher powers of the same prime
                long long nk = nn;
                RingElement gk = gg;
                while ((double)nk * primes[j].norm <= X) {
                    nk *= primes[j].norm;
                    gk = tp_generator(mul(gk, primes[j].gen));
                    out.push_back({nk, gk});
                    rec(j + 1, nk, gk);
                }
            }
        };
    rec(0, 1, element(1));
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return std::pair{a.gen.a, a.gen.b} < std::pair{b.gen.a, b.gen.b};
    });
    return out;
}

namespace {

std::optional<RingElement> exact_divide(const NumberField& F, const RingElement& x,
                                        const RingElement& g) {
    // x / g if it lies in O
    RingElement num = F.mul(x, F.conj(g));
    long long ng = F.norm(g).num;  // g integral
    if (ng == 0) return std::nullopt;
    if (num.den != 1) return std::nullopt;
    if (num.a % ng || num.b % ng) return std::nullopt;
    return F.element(num.a / ng, num.b / ng);
}

}  // namespace

std::vector<PrimeIdeal> NumberField::primes_above(long long p) const {
    std::vector<PrimeIdeal> out;
    if (kind == FieldKind::Rational) {
        PrimeIdeal pi; pi.p = p; pi.norm = p; pi.splitting = Splitting::Split;
        pi.gen = element(p); pi.has_root = true;
        out.push_back(pi);
        return out;
    }
    long long chi = kronecker(disc, p);
    if (chi == -1) {
        PrimeIdeal pi; pi.p = p; pi.norm = p * p; pi.residue_degree = 2;
        pi.splitting = Splitting::Inert; pi.gen = element(p);
        out.push_back(pi);
        return out;
    }
    if (chi == 0) {
        PrimeIdeal pi; pi.p = p; pi.norm = p; pi.splitting = Splitting::Ramified;
        if (omega_half) pi.omega_root = (p + 1) / 2;
        else pi.omega_root = (p == 2 && d % 2 != 0) ? 1 : 0;
        pi.has_root = true;
        pi.gen = prime_generator(p, Splitting::Ramified);
        out.push_back(pi);
        return out;
    }
    long long rt;
    if (p == 2) {
        rt = (((d - 1) / 4) % 2 == 0) ? 0 : 1;
    } else if (omega_half) {
        long long sd = sqrt_mod(((d % p) + p) % p, p);
        rt = (long long)((i128)(1 + sd) % p * ((p + 1) / 2) % p);
    } else {
        rt = sqrt_mod(((d % p) + p) % p, p);
    }
    for (int which = 0; which < 2; ++which) {
        PrimeIdeal pi;
        pi.p = p; pi.norm = p; pi.residue_degree = 1; pi.splitting = Splitting::Split;
        long long root = which == 0 ? rt : (omega_half ? ((1 - rt) % p + p) % p : (p - rt) % p);
        pi.omega_root = root; pi.has_root = true;
        pi.gen = prime_generator(p, Splitting::Split);
        long long val = (long long)((((pi.gen.a + (i128)pi.gen.b * root) % p) + p) % p);
        if (val != 0) pi.gen = tp_generator(conj(pi.gen));
        out.push_back(pi);
    }
    return out;
}

std::vector<std::pair<PrimeIdeal, int>> NumberField::factor_ideal(const RingElement& x) const {
    if (x.is_zero() || x.den != 1) throw std::invalid_argument("need a nonzero integral element");
    std::vector<std::pair<PrimeIdeal, int>> out;
    long long n = std::abs(norm(x).num);
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) { ps.push_back(p); while (n % p == 0) n /= p; }
    if (n > 1) ps.push_back(n);
    for (long long p : ps) {
        for (const auto& pi : primes_above(p)) {
            int v = 0;
            RingElement y = x;
            while (true) {
                auto q = exact_divide(*this, y, pi.gen);
                if (!q) break;
                y = *q; ++v;
            }
            if (v > 0) out.push_back({pi, v});
        }
    }
    return out;
}

std::vector<NumberField::Ideal> NumberField::divisor_ideals(const RingElement& x) const {
    auto fac = factor_ideal(x);
    std::vector<Ideal> out{{1, element(1)}};
    for (auto& [pi, e] : fac) {
        std::vector<Ideal> next;
        for (const auto& dvr : out) {
            long long n = dvr.norm;
            RingElement g = dvr.gen;
            next.push_back(dvr);
            for (int k = 1; k <= e; ++k) {
                n *= pi.norm;
                g = tp_generator(mul(g, pi.gen));
                next.push_back({n, g});
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return std::pair{a.gen.a, a.gen.b} < std::pair{b.gen.a, b.gen.b};
    });
    return out;
}

long long NumberField::tau_ideal(const RingElement& x) const {
    long long t = 1;
    for (auto& [pi, e] : factor_ideal(x)) t *= (e + 1);
    return t;
}

long long NumberField::pair_ideal_norm(const RingElement& u, const RingElement& v) const {
    if (u.den != 1 || v.den != 1) throw std::invalid_argument("need integral elements");
    if (kind == FieldKind::Rational) return ll_gcd(u.a, v.a);
    RingElement wu = mul(element(0, 1), u), wv = mul(element(0, 1), v);
    long long rows[4][2] = {{u.a, u.b}, {wu.a, wu.b}, {v.a, v.b}, {wv.a, wv.b}};
    long long g = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            i128 det = (i128)rows[i][0] * rows[j][1] - (i128)rows[i][1] * rows[j][0];
            long long dl = (long long)(det < 0 ? -det : det);
            g = ll_gcd(g, dl);
        }
    return g;
}

NumberField make_field(FieldKind kind, long long d) {
    NumberField F;
    F.kind = kind;
    switch (kind) {
        case FieldKind::Rational: {
            F.d = 1; F.degree = 1; F.r1 = 1; F.r2 = 0; F.r = 1;
            F.disc = 1; F.regulator = 1.0; F.mu_plus = 1;
            F.A = {{1.0}};
            F.A_inv = {{1.0}};
            F.kappa = F.element(1);
            F.eps0 = F.element(1);
            F.eps_plus = F.element(1);
            F.log_eps_plus = 0.0;
            return F;
        }
        case FieldKind::RealQuadratic: {
            static const long long allow[] = {2, 5, 13, 17, 29};
            if (std::find(std::begin(allow), std::end(allow), d) == std::end(allow))
                throw UnsupportedField("real quadratic d=" + std::to_string(d) +
                                       " not in the narrow-class-number-one allowlist");
            F.d = d; F.degree = 2; F.r1 = 2; F.r2 = 0; F.r = 2;
            F.omega_half = (d % 4 == 1);
            F.disc = F.omega_half ? d : 4 * d;
            double sq = std::sqrt((double)d);
            F.omega1 = F.omega_half ? (1 + sq) / 2 : sq;
            F.omega2 = F.omega_half ? (1 - sq) / 2 : -sq;
            // fundamental unit: smallest unit > 1 (allowlist guarantees norm -1)
            bool found = false;
            for (long long b = 1; b < 1000000 && !found; ++b) {
                double alo = -b * F.omega2;  // want both coords giving unit
                for (long long a = (long long)std::floor(alo - 2); a <= (long long)std::ceil(alo + 2);
                     ++a) {
                    RingElement u = F.element(a, b);
                    long long nu = F.norm(u).num;
                    if (nu != 1 && nu != -1) continue;
                    if (u.emb1 <= 1.0) continue;
                    F.eps0 = u;
                    found = true;
                    break;
                }
            }
            if (!found) throw UnsupportedField("fundamental unit search failed");
            if (F.norm(F.eps0).num != -1)
                throw UnsupportedField("narrow class number one requires N(eps0) = -1");
            F.regulator = std::log(F.eps0.emb1);
            F.eps_plus = F.mul(F.eps0, F.eps0);
            F.log_eps_plus = std::log(F.eps_plus.emb1);
            F.mu_plus = 1;
            double L = F.log_eps_plus;
            F.A = {{0.5, L}, {0.5, -L}};
            F.A_inv = {{1.0, 1.0}, {1.0 / (2 * L), -1.0 / (2 * L)}};
            // codifferent: different is (sqrt d) for d=1 mod 4, (2 sqrt d) otherwise
            // kappa = totally positive unit multiple of 1/sqrt(disc-part)
            RingElement sqrt_d = F.omega_half ? F.element(-1, 2) : F.element(0, 1);  // 2w-1 or w
            RingElement diff_gen = F.omega_half ? sqrt_d : F.mul(F.element(2), sqrt_d);
            // kappa = tp_generator-style normalized 1/diff_gen
            RingElement cg = F.conj(diff_gen);
            long long nd = F.norm(diff_gen).num;  // negative here
            RingElement inv = F.element(cg.a, cg.b, nd);  // 1/diff_gen
            // make totally positive, then reduce
            if (F.norm(inv).num < 0) inv = F.mul(inv, F.eps0);
            if (F.sign_at(inv, 0) < 0) inv = F.neg(inv);
            F.kappa = F.reduce_mod_units(inv);
            return F;
        }
        case FieldKind::ImaginaryQuadratic: {
            static const long long allow[] = {-1, -2, -3, -7, -11};
            if (std::find(std::begin(allow), std::end(allow), d) == std::end(allow))
                throw UnsupportedField("imaginary quadratic d=" + std::to_string(d) +
                                       " not in the class-number-one allowlist");
            F.d = d; F.degree = 2; F.r1 = 0; F.r2 = 1; F.r = 1;
            F.omega_half = ((d - 1) % 4 == 0);  // d = -3, -7, -11
            F.disc = F.omega_half ? d : 4 * d;
            double sq = std::sqrt((double)-d);
            F.omega_c = F.omega_half ? cplx(0.5, sq / 2) : cplx(0.0, sq);
            F.regulator = 1.0;
            F.mu_plus = (d == -1) ? 4 : (d == -3 ? 6 : 2);
            F.A = {{0.5}};
            F.A_inv = {{2.0}};
            F.eps0 = F.element(1);
            F.eps_plus = F.element(1);
            F.log_eps_plus = 0.0;
            // different: (sqrt d) for d=1 mod 4 else (2 sqrt d)
            RingElement sqrt_d = F.omega_half ? F.element(-1, 2) : F.element(0, 1);
            RingElement diff_gen = F.omega_half ? sqrt_d : F.mul(F.element(2), sqrt_d);
            RingElement cg = F.conj(diff_gen);
            long long nd = F.norm(diff_gen).num;
            RingElement inv = F.element(cg.a, cg.b, nd);
            F.kappa = F.canonical_torsion(inv);
            return F;
        }
    }
    throw UnsupportedField("unknown field kind");
}

}  // namespace quelab
