#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quelab {

using cplx = std::complex<double>;

struct QuadratureBudgetExceeded : std::runtime_error {
    explicit QuadratureBudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};

// log Gamma(z) for complex z, principal branch (Lanczos; reflection for Re z < 1/2).
cplx log_gamma(cplx z);
cplx gamma_c(cplx z);

// Adaptive Gauss-Kronrod 15(7) on [a,b].  Relative target with absolute floor.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_floor = 1e-15, int max_splits = 4000);
cplx integrate_c(const std::function<cplx(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_floor = 1e-15, int max_splits = 4000);

// Semi-infinite [a, inf): maps through t -> a + u/(1-u).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double rel_tol = 1e-10, double abs_floor = 1e-15);

// Adaptive 2-D quadrature of f over [x0,x1]x[y0,y1] restricted to where
// inside(x,y) is true (boundary cells are refined until small).
double integrate2d(const std::function<double(double, double)>& f,
                   const std::function<bool(double, double)>& inside,
                   double x0, double x1, double y0, double y1,
                   double abs_tol, int max_depth = 14);

// Compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
private:
    double sum_ = 0.0, comp_ = 0.0;
};

// Spearman rank correlation (average ranks on ties).
double spearman_rho(const std::vector<double>& a, const std::vector<double>& b);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

// Deterministic parallel reduction: the index range is cut into a fixed number
// of chunks and per-chunk partials are combined in chunk order, so the result
// does not depend on the thread count.
double parallel_sum(std::int64_t n, const std::function<double(std::int64_t, std::int64_t)>& chunk_sum,
                    int chunks = 64);
void parallel_for_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t, int)>& body,
                         int chunks = 64);

int hardware_threads();
void set_max_threads(int n);

// Portable deterministic RNG (splitmix64 core).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }
    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }
private:
    std::uint64_t state_;
};

}  // namespace quelab
