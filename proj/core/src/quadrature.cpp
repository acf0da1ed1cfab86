#include "plates/quadrature.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "plates/errors.hpp"

namespace plates::quadrature {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights for the
// 7-point Gauss / 15-point Kronrod pair.  Gauss nodes are the odd entries.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const Integrand& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kWgk[static_cast<std::size_t>(j)] * pair;
        if (j % 2 == 1) {
            gauss += kWg[static_cast<std::size_t>(j / 2)] * pair;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

Result gauss_kronrod(const Integrand& f, double a, double b, const AdaptiveOptions& options) {
    std::vector<Segment> heap{kronrod15(f, a, b)};
    double total = heap.front().value;
    double error = heap.front().error;
    int evaluations = 15;

    auto converged = [&] {
        return error <= std::max(options.absolute_tolerance,
                                 options.relative_tolerance * std::abs(total));
    };

    while (!converged()) {
        if (static_cast<int>(heap.size()) >= options.max_intervals) {
            throw QuadratureError("gauss_kronrod: tolerance not reached after " +
                                  std::to_string(heap.size()) + " intervals");
        }
        std::pop_heap(heap.begin(), heap.end());
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = kronrod15(f, worst.a, mid);
        const Segment right = kronrod15(f, mid, worst.b);
        evaluations += 30;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
        // Re-sum rather than update incrementally to avoid drift.
        total = 0.0;
        error = 0.0;
        for (const Segment& s : heap) {
            total += s.value;
            error += s.error;
        }
    }
    return {total, error, evaluations};
}

Result semi_infinite(const Integrand& f, double a, double scale, const AdaptiveOptions& options) {
    if (!(scale > 0.0)) {
        throw std::invalid_argument("semi_infinite: scale must be positive");
    }
    const Integrand mapped = [&](double t) {
        if (t >= 1.0) {
            return 0.0;
        }
        const double u = 1.0 - t;
        const double x = a + scale * t / u;
        const double value = f(x) * scale / (u * u);
        return std::isfinite(value) ? value : 0.0;
    };
    return gauss_kronrod(mapped, 0.0, 1.0, options);
}

double simpson(const Integrand& f, double a, double b, int panels) {
    if (panels < 2) {
        throw std::invalid_argument("simpson: need at least 2 panels");
    }
    const auto n = std::bit_ceil(static_cast<unsigned>(panels));
    const double h = (b - a) / n;
    double odd = 0.0;
    double even = 0.0;
    for (unsigned i = 1; i < n; ++i) {
        const double x = a + h * i;
        (i % 2 == 1 ? odd : even) += f(x);
    }
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

} // namespace plates::quadrature
