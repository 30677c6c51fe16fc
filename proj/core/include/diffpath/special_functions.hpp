#ifndef DIFFPATH_SPECIAL_FUNCTIONS_HPP
#define DIFFPATH_SPECIAL_FUNCTIONS_HPP

/**
 * @file special_functions.hpp
 * @brief In-repo error function plus its Maclaurin-series test oracle.
 */

namespace diffpath {

/**
 * @brief Error function by rational approximation.
 *
 * Uses the classical five-term rational fit (Abramowitz & Stegun 7.1.26)
 * with |error| <= 1.5e-7 absolute for all arguments. Odd symmetry is exact
 * by construction and the result is clamped to [-1, 1].
 *
 * @throws std::domain_error for non-finite input.
 */
double erf(double z);

/**
 * @brief Maclaurin-series error function, the test-time ground truth.
 *
 * erf(z) = (2/sqrt(pi)) * sum_n (-1)^n z^(2n+1) / (n! (2n+1)),
 * truncated once the next term's magnitude drops below @p tol.
 * Certified for |z| <= 4 only.
 *
 * @throws std::out_of_range for |z| > 4, std::domain_error for tol <= 0
 *         or non-finite input.
 */
double erf_series_oracle(double z, double tol);

}  // namespace diffpath

#endif  // DIFFPATH_SPECIAL_FUNCTIONS_HPP
