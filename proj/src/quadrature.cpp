#include "lagspread/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace lagspread {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
const double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b;
    double value;
    double error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);

    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const double sum = fv1[j] + fv2[j];
        resk += wgk[j] * sum;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j & 1) resg += wg[j / 2] * sum;
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(h);
    resabs *= std::abs(h);

    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);

    return Interval{a, b, resk * h, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    std::priority_queue<Interval> heap;
    Interval whole = gk15(f, a, b);
    res.evals = 15;
    double total = whole.value;
    double toterr = whole.error;
    heap.push(whole);

    int count = 1;
    auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
    while (toterr > target() && count < max_intervals && !heap.empty()) {
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) continue;  // interval at roundoff limit
        Interval left = gk15(f, worst.a, mid);
        Interval right = gk15(f, mid, worst.b);
        res.evals += 30;
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }

    res.value = total;
    res.error = toterr;
    res.converged = toterr <= target();
    return res;
}

QuadResult integrate_piecewise(const std::function<double(double)>& f,
                               const std::vector<double>& points,
                               double abs_tol, double rel_tol) {
    QuadResult res;
    res.converged = true;
    if (points.size() < 2) return res;
    const double seg_abs = abs_tol / static_cast<double>(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        QuadResult part = integrate(f, points[i], points[i + 1], seg_abs, rel_tol);
        res.value += part.value;
        res.error += part.error;
        res.evals += part.evals;
        res.converged = res.converged && part.converged;
    }
    return res;
}

std::vector<double> density_breakpoints(const PolySpec& spec, double upper) {
    std::vector<double> pts{0.0};
    for (double r : roots(spec))
        if (r > pts.back() && r < upper) pts.push_back(r);
    if (upper > pts.back()) pts.push_back(upper);
    return pts;
}

double log_tail_bound(double s, double c, double X) {
    if (c <= 0.0 || X <= 0.0 || c * X <= s)
        return std::numeric_limits<double>::infinity();
    // integral over [X, inf) of x^s e^{-cx} <= X^s e^{-cX} / (c (1 - s/(cX)))
    return s * std::log(X) - c * X - std::log(c) - std::log1p(-s / (c * X));
}

QuadResult integrate_density(const PolySpec& spec,
                             const std::function<double(double)>& f,
                             double tail_s, double tail_c, double tail_log_k,
                             double abs_tol, double rel_tol) {
    double X = x_max(spec);
    const double log_target = std::log(0.1 * abs_tol);
    while (tail_log_k + log_tail_bound(tail_s, tail_c, X) > log_target && X < 5000.0)
        X += 25.0;

    QuadResult res = integrate_piecewise(f, density_breakpoints(spec, X),
                                         abs_tol, rel_tol);
    const double tail = std::exp(tail_log_k + log_tail_bound(tail_s, tail_c, X));
    if (std::isfinite(tail)) res.error += tail;
    return res;
}

}  // namespace lagspread
