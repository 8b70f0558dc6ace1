#include "quelab/util.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <thread>

namespace quelab {

namespace {

// Lanczos coefficients (g = 7, n = 9).
const double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,  12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_pos(cplx z) {
    // valid for Re z > 1/2
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma_pos(1.0 - z);
    }
    return log_gamma_pos(z);
}

cplx gamma_c(cplx z) { return std::exp(log_gamma(z)); }

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] (7-point Gauss embedded).
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& kron, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T resg = kWg[3] * fc;
    T resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        T f1 = f(c - x), f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    kron = resk * h;
    err = std::abs(resk - resg) * h;
}

template <typename T>
T adapt(const std::function<T(double)>& f, double a, double b, double rel_tol,
        double abs_floor, int max_splits) {
    struct Seg { double a, b; T val; double err; };
    T v0; double e0;
    gk15(f, a, b, v0, e0);
    std::vector<Seg> segs{{a, b, v0, e0}};
    double total_err = e0;
    T total = v0;
    int iter = 0;
    double last_check = std::numeric_limits<double>::infinity();
    while (total_err > std::max(abs_floor, rel_tol * std::abs(total)) && iter < max_splits) {
        // stop at the roundoff plateau: no real progress over a window of splits
        if ((iter & 63) == 63) {
            if (total_err > 0.97 * last_check) break;
            last_check = total_err;
        }
        // split worst segment
        size_t wi = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[wi].err) wi = i;
        Seg s = segs[wi];
        segs.erase(segs.begin() + wi);
        double m = 0.5 * (s.a + s.b);
        Seg l{s.a, m, T{}, 0.0}, r{m, s.b, T{}, 0.0};
        gk15(f, l.a, l.b, l.val, l.err);
        gk15(f, r.a, r.b, r.val, r.err);
        segs.push_back(l);
        segs.push_back(r);
        total = T{};
        total_err = 0.0;
        for (auto& sg : segs) { total += sg.val; total_err += sg.err; }
        ++iter;
    }
    if (iter >= max_splits)
        throw QuadratureBudgetExceeded("adaptive quadrature did not converge");
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor, int max_splits) {
    if (a == b) return 0.0;
    return adapt<double>(f, a, b, rel_tol, abs_floor, max_splits);
}

cplx integrate_c(const std::function<cplx(double)>& f, double a, double b,
                 double rel_tol, double abs_floor, int max_splits) {
    if (a == b) return 0.0;
    return adapt<cplx>(f, a, b, rel_tol, abs_floor, max_splits);
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double rel_tol, double abs_floor) {
    auto g = [&](double u) {
        double om = 1.0 - u;
        double t = a + u / om;
        return f(t) / (om * om);
    };
    return integrate(g, 0.0, 1.0, rel_tol, abs_floor);
}

namespace {

struct Cell { double x0, x1, y0, y1; int depth; };

}  // namespace

double integrate2d(const std::function<double(double, double)>& f,
                   const std::function<bool(double, double)>& inside,
                   double x0, double x1, double y0, double y1,
                   double abs_tol, int max_depth) {
    // midpoint rule with recursive refinement; cells straddling the region
    // boundary are always refined until max_depth.
    std::vector<Cell> stack{{x0, x1, y0, y1, 0}};
    KahanSum acc;
    long budget = 40'000'000;
    while (!stack.empty()) {
        if (--budget < 0) throw QuadratureBudgetExceeded("2-D quadrature budget exceeded");
        Cell c = stack.back();
        stack.pop_back();
        double xm = 0.5 * (c.x0 + c.x1), ym = 0.5 * (c.y0 + c.y1);
        bool in[4] = {inside(c.x0, c.y0), inside(c.x1, c.y0), inside(c.x0, c.y1),
                      inside(c.x1, c.y1)};
        int nin = in[0] + in[1] + in[2] + in[3];
        double area = (c.x1 - c.x0) * (c.y1 - c.y0);
        if (nin == 0 && !inside(xm, ym)) continue;
        bool boundary = nin != 4;
        if (c.depth >= max_depth) {
            if (inside(xm, ym)) acc.add(f(xm, ym) * area);
            continue;
        }
        if (boundary) {
            // refine
        } else {
            // compare 1-point vs 4-point estimate
            double v1 = f(xm, ym) * area;
            double xq = 0.25 * (c.x1 - c.x0), yq = 0.25 * (c.y1 - c.y0);
            double v4 = 0.25 * area *
                        (f(xm - xq, ym - yq) + f(xm + xq, ym - yq) +
                         f(xm - xq, ym + yq) + f(xm + xq, ym + yq));
            if (std::abs(v4 - v1) < abs_tol * area || c.depth >= max_depth) {
                acc.add(v4);
                continue;
            }
        }
        stack.push_back({c.x0, xm, c.y0, ym, c.depth + 1});
        stack.push_back({xm, c.x1, c.y0, ym, c.depth + 1});
        stack.push_back({c.x0, xm, ym, c.y1, c.depth + 1});
        stack.push_back({xm, c.x1, ym, c.y1, c.depth + 1});
    }
    return acc.value();
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
    size_t n = v.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return v[i] < v[j]; });
    std::vector<double> r(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        double avg = 0.5 * (i + j) + 1.0;
        for (size_t t = i; t <= j; ++t) r[idx[t]] = avg;
        i = j + 1;
    }
    return r;
}

}  // namespace

double spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
    auto ra = ranks(a), rb = ranks(b);
    size_t n = a.size();
    double ma = 0, mb = 0;
    for (size_t i = 0; i < n; ++i) { ma += ra[i]; mb += rb[i]; }
    ma /= n; mb /= n;
    double num = 0, da = 0, db = 0;
    for (size_t i = 0; i < n; ++i) {
        num += (ra[i] - ma) * (rb[i] - mb);
        da += (ra[i] - ma) * (ra[i] - ma);
        db += (rb[i] - mb) * (rb[i] - mb);
    }
    return num / std::sqrt(da * db);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    size_t n = x.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= n; my /= n;
    double num = 0, den = 0;
    for (size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

namespace {
std::atomic<int> g_max_threads{0};
}

int hardware_threads() {
    int m = g_max_threads.load();
    if (m > 0) return m;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}

void set_max_threads(int n) { g_max_threads.store(n); }

double parallel_sum(std::int64_t n,
                    const std::function<double(std::int64_t, std::int64_t)>& chunk_sum,
                    int chunks) {
    if (n <= 0) return 0.0;
    chunks = std::min<std::int64_t>(chunks, n);
    std::vector<double> partial(chunks, 0.0);
    int nthreads = std::min(hardware_threads(), chunks);
    std::atomic<int> next{0};
    auto worker = [&]() {
        int c;
        while ((c = next.fetch_add(1)) < chunks) {
            std::int64_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
            partial[c] = chunk_sum(lo, hi);
        }
    };
    std::vector<std::thread> ts;
    for (int t = 1; t < nthreads; ++t) ts.emplace_back(worker);
    worker();
    for (auto& t : ts) t.join();
    KahanSum acc;
    for (double p : partial) acc.add(p);
    return acc.value();
}

void parallel_for_chunks(std::int64_t n,
                         const std::function<void(std::int64_t, std::int64_t, int)>& body,
                         int chunks) {
    if (n <= 0) return;
    chunks = int(std::min<std::int64_t>(chunks, n));
    int nthreads = std::min(hardware_threads(), chunks);
    std::atomic<int> next{0};
    auto worker = [&]() {
        int c;
        while ((c = next.fetch_add(1)) < chunks) {
            std::int64_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
            body(lo, hi, c);
        }
    };
    std::vector<std::thread> ts;
    for (int t = 1; t < nthreads; ++t) ts.emplace_back(worker);
    worker();
    for (auto& t : ts) t.join();
}

}  // namespace quelab
