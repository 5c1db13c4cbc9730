#pragma once

#include <cmath>

namespace racah {

template <class F>
double golden_max(F&& fn, double lo, double hi, double tol) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = fn(c), fd = fn(d);
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = fn(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = fn(c);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace racah
