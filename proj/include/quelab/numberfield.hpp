#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quelab/util.hpp"

namespace quelab {

struct UnsupportedField : std::runtime_error {
    explicit UnsupportedField(const std::string& m) : std::runtime_error(m) {}
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct RegionTooLarge : std::runtime_error {
    explicit RegionTooLarge(const std::string& m) : std::runtime_error(m) {}
};

enum class FieldKind { Rational, RealQuadratic, ImaginaryQuadratic };

class NumberField;

// Element of O (or of O tensor Q when den != 1) in the integral basis (1, omega).
// Coordinates are the source of truth; embeddings are cached doubles.
struct RingElement {
    long long a = 0, b = 0;
    long long den = 1;
    double emb1 = 0.0, emb2 = 0.0;    // real embeddings (rational: emb1 only)
    double emb_re = 0.0, emb_im = 0.0; // complex embedding (imaginary quadratic)

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const RingElement& o) const {
        return a * o.den == o.a * den && b * o.den == o.b * den;
    }
};

struct Rational {
    long long num = 0, den = 1;
    double value() const { return double(num) / double(den); }
};

enum class Splitting { Split, Inert, Ramified };

struct PrimeIdeal {
    long long p = 0;        // residue characteristic
    long long norm = 0;     // Np = p^f
    int residue_degree = 1;
    Splitting splitting = Splitting::Inert;
    RingElement gen;        // totally positive generator (class number one)
    // For degree-1 primes over a quadratic field: omega = root mod p, so that
    // a + b*omega == a + b*root (mod p) detects divisibility by this ideal.
    long long omega_root = 0;
    bool has_root = false;
};

// A narrow-class-number-one field of degree <= 2 with unit, regulator and
// codifferent data attached.
class NumberField {
public:
    FieldKind kind;
    long long d = 1;          // squarefree defining integer (1 for Q)
    int degree = 1;           // n
    int r1 = 1, r2 = 0;       // signature
    int r = 1;                // infinite places
    long long disc = 1;       // discriminant D
    bool omega_half = false;  // omega = (1+sqrt d)/2 if true, else sqrt d
    double omega1 = 0.0, omega2 = 0.0;  // real-quadratic embeddings of omega
    cplx omega_c;                        // imaginary-quadratic embedding

    double regulator = 1.0;       // R (1 by convention for Q and imaginary)
    RingElement eps0;             // fundamental unit (real quadratic)
    RingElement eps_plus;         // fundamental totally positive unit (= eps0^2)
    double log_eps_plus = 0.0;    // L = log eps_plus at first embedding
    int mu_plus = 1;              // omega_+ = |mu_+|
    RingElement kappa;            // totally positive generator of the codifferent

    std::vector<std::vector<double>> A, A_inv;  // r x r regulator matrices

    // ---- element arithmetic ----
    RingElement element(long long a, long long b = 0, long long den = 1) const;
    RingElement add(const RingElement& x, const RingElement& y) const;
    RingElement sub(const RingElement& x, const RingElement& y) const;
    RingElement mul(const RingElement& x, const RingElement& y) const;
    RingElement neg(const RingElement& x) const;
    RingElement conj(const RingElement& x) const;  // nontrivial automorphism
    Rational norm(const RingElement& x) const;
    Rational trace(const RingElement& x) const;
    // exact sign of x at real embedding i (0-based); 0 for x == 0
    int sign_at(const RingElement& x, int place) const;
    bool totally_positive(const RingElement& x) const;
    // exact comparison of embeddings: sign of (x - y) at the first embedding
    int compare_first_embedding(const RingElement& x, const RingElement& y) const;

    std::vector<double> embeddings_abs(const RingElement& x) const;  // |x_i| per place

    // ---- unit action ----
    RingElement mul_unit_pow(const RingElement& x, int j) const;  // x * eps0^j
    RingElement reduce_mod_units(const RingElement& x) const;
    // canonical associate under the torsion units (lexicographically largest coords)
    RingElement canonical_torsion(const RingElement& x) const;
    // totally positive generator of the principal ideal (x), in reduce_mod_units form
    RingElement tp_generator(const RingElement& x) const;

    // ---- Hecke characters ----
    // lambda_m on a positive vector y (length r); m has length r-1
    cplx lambda_char(const std::vector<int>& m, const std::vector<double>& y) const;
    double beta_coeff(int place) const;  // e_p^1 entries scaled: beta(m,p) = 2*pi*i*m*e_p^1
    cplx lambda_ideal(int m, const RingElement& tp_gen) const;

    // ---- enumeration ----
    std::vector<RingElement> enumerate_totally_positive(const std::vector<double>& x) const;
    std::vector<PrimeIdeal> primes_up_to(double z, bool with_generators = true) const;

    // ideal machinery (class number one: ideals as canonical TP generators)
    struct Ideal {
        long long norm = 1;
        RingElement gen;  // canonical totally positive generator
    };
    // all integral ideals of norm <= X (sorted by norm, deterministic order)
    std::vector<Ideal> ideals_up_to(double X) const;
    // prime ideals above a rational prime p
    std::vector<PrimeIdeal> primes_above(long long p) const;
    // prime factorization of the ideal (x); x integral, nonzero
    std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const RingElement& x) const;
    std::vector<Ideal> divisor_ideals(const RingElement& x) const;
    long long tau_ideal(const RingElement& x) const;  // number of ideal divisors

    // index of the O-module generated by u and v inside O (0 if not finite);
    // equals the absolute norm of the ideal (u, v)
    long long pair_ideal_norm(const RingElement& u, const RingElement& v) const;
    bool coprime(const RingElement& u, const RingElement& v) const { return pair_ideal_norm(u, v) == 1; }

    // generator search for a prime ideal above p of the given splitting type
    RingElement prime_generator(long long p, Splitting s) const;

    static long long kronecker(long long a, long long n);
};

NumberField make_field(FieldKind kind, long long d = 1);

}  // namespace quelab
