#include "diffpath/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace diffpath {

double erf(double z) {
    if (!std::isfinite(z)) {
        throw std::domain_error("erf: argument must be finite");
    }
    if (z == 0.0) {
        return 0.0;  // the rational fit leaves a 1e-9 residue at the origin
    }

    // Abramowitz & Stegun 7.1.26, |error| <= 1.5e-7.
    constexpr double p = 0.3275911;
    constexpr double a1 = 0.254829592;
    constexpr double a2 = -0.284496736;
    constexpr double a3 = 1.421413741;
    constexpr double a4 = -1.453152027;
    constexpr double a5 = 1.061405429;

    const double x = std::fabs(z);
    const double t = 1.0 / (1.0 + p * x);
    const double poly = t * (a1 + t * (a2 + t * (a3 + t * (a4 + t * a5))));
    double value = 1.0 - poly * std::exp(-x * x);

    if (value > 1.0) value = 1.0;
    if (value < 0.0) value = 0.0;
    return z < 0.0 ? -value : value;
}

double erf_series_oracle(double z, double tol) {
    if (!std::isfinite(z)) {
        throw std::domain_error("erf_series_oracle: argument must be finite");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("erf_series_oracle: tol must be positive");
    }
    if (std::fabs(z) > 4.0) {
        throw std::out_of_range("erf_series_oracle: certified for |z| <= 4 only");
    }

    // two_over_sqrt_pi * sum (-1)^n z^(2n+1) / (n! (2n+1))
    constexpr double two_over_sqrt_pi = 1.1283791670955126;
    const double z2 = z * z;
    double term = z;  // n = 0 term before the prefactor
    double sum = 0.0;
    for (int n = 0; n < 200; ++n) {
        sum += term / (2.0 * n + 1.0);
        term *= -z2 / (n + 1.0);
        if (std::fabs(term) < tol) {
            break;
        }
    }
    return two_over_sqrt_pi * sum;
}

}  // namespace diffpath
