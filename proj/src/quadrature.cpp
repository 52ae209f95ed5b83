#include "hyppl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace hyppl {

namespace {

// Gauss-Kronrod 15-7 rule on [-1,1] (positive-half abscissae).
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Segment {
    double a, b;
    Complex value;
    double error;
};

Segment gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex sum15 = kWgk[7] * fc;
    Complex sum7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const Complex f1 = f(c - h * kXgk[i]);
        const Complex f2 = f(c + h * kXgk[i]);
        sum15 += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) sum7 += kWg[i / 2] * (f1 + f2);
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = h * sum15;
    s.error = std::abs(h) * std::abs(sum15 - sum7);
    return s;
}

struct Piece {
    std::function<Complex(double)> g;
    double a, b;
};

// transformed pieces with all declared endpoint singularities removed
std::vector<Piece> build_pieces(const std::function<Complex(double)>& f, double A, double B,
                                double s_lo, double s_hi) {
    std::vector<Piece> out;
    auto add_plain = [&](double a, double b) {
        if (b > a) out.push_back({f, a, b});
    };
    auto add_lo = [&](double x0, double a, double b) {
        // singular at x0 = a: x = x0 + u^p
        double p = 1.0 / (1.0 - s_lo);
        double u1 = std::pow(b - x0, 1.0 / p);
        out.push_back({[f, x0, p](double u) {
                           double up = std::pow(u, p);
                           return f(x0 + up) * (p * up / u);
                       },
                       0.0, u1});
        (void)a;
    };
    auto add_hi = [&](double x0, double a, double b) {
        double p = 1.0 / (1.0 - s_hi);
        double u1 = std::pow(x0 - a, 1.0 / p);
        out.push_back({[f, x0, p](double u) {
                           double up = std::pow(u, p);
                           return f(x0 - up) * (p * up / u);
                       },
                       0.0, u1});
        (void)b;
    };
    const bool lo_sing = s_lo > 0.0;
    const bool hi_sing = s_hi > 0.0;
    if (lo_sing && hi_sing) {
        double mid = 0.5 * (A + B);
        add_lo(A, A, mid);
        add_hi(B, mid, B);
    } else if (lo_sing) {
        add_lo(A, A, B);
    } else if (hi_sing) {
        add_hi(B, A, B);
    } else {
        add_plain(A, B);
    }
    return out;
}

// crude decay-based bound on the discarded tail beyond x = R
double tail_bound(const std::function<Complex(double)>& f, double R, double direction) {
    double fR = std::abs(f(direction * R));
    if (fR == 0.0) return 0.0;
    double fI = std::abs(f(direction * (R - 1.0)));
    if (fI > 0.0 && fR < 0.95 * fI) {
        double r = fR / fI;  // assume |f| ~ r^x beyond R
        return fR * (-1.0 / std::log(r));
    }
    return fR * R;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, Interval iv,
                                    const QuadratureSpec& spec) {
    double A = iv.lo_infinite ? -spec.truncation_radius : iv.lo;
    double B = iv.hi_infinite ? spec.truncation_radius : iv.hi;
    double tail = 0.0;
    if (iv.lo_infinite) tail += tail_bound(f, spec.truncation_radius, -1.0);
    if (iv.hi_infinite) tail += tail_bound(f, spec.truncation_radius, +1.0);

    auto pieces = build_pieces(f, A, B, iv.lo_infinite ? 0.0 : iv.lo_singularity,
                               iv.hi_infinite ? 0.0 : iv.hi_singularity);

    auto cmp = [](const std::pair<Segment, const Piece*>& x, const std::pair<Segment, const Piece*>& y) {
        return x.first.error < y.first.error;
    };
    std::priority_queue<std::pair<Segment, const Piece*>, std::vector<std::pair<Segment, const Piece*>>,
                        decltype(cmp)>
        heap(cmp);

    Complex total{0.0, 0.0};
    double errsum = 0.0;
    for (const auto& p : pieces) {
        Segment s = gk15(p.g, p.a, p.b);
        total += s.value;
        errsum += s.error;
        heap.push({s, &p});
    }

    int used = 0;
    while (errsum + tail > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (used >= spec.max_subdivisions || heap.empty()) {
            QuadratureResult best{total, errsum + tail, used};
            if (errsum + tail <= 1e3 * std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
                // close enough that callers asking for a rough value can proceed
                return best;
            }
            std::ostringstream os;
            os << "integrate_adaptive: subdivision budget exhausted (err = " << errsum + tail << ")";
            throw NumericError(os.str(), total, errsum + tail);
        }
        auto [worst, piece] = heap.top();
        heap.pop();
        total -= worst.value;
        errsum -= worst.error;
        double m = 0.5 * (worst.a + worst.b);
        for (Segment s : {gk15(piece->g, worst.a, m), gk15(piece->g, m, worst.b)}) {
            total += s.value;
            errsum += s.error;
            heap.push({s, piece});
        }
        ++used;
    }
    return {total, errsum + tail, used};
}

}  // namespace hyppl
