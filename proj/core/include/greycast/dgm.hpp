#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace greycast::dgm {

/// Discrete grey model DGM(1,1): x1(k+1) = beta1 * x1(k) + beta2.
struct Dgm11Params {
	double beta1 = 1.0; // development coefficient
	double beta2 = 0.0; // grey constant
};

struct Dgm11Fit {
	Dgm11Params params;
	double x1_initial = 0.0;
	std::size_t n = 0;
	std::vector<double> fitted_accumulated;
	std::vector<double> fitted;
	std::vector<double> residuals;
};

inline constexpr std::size_t kMinLength = 3;

/// Values must be strictly positive. Throws InsufficientDataError below
/// kMinLength and SingularDesignError on a degenerate design.
Dgm11Fit fit(std::span<const double> values);

/// Observations n+1..n+horizon continuing the recursion from x1(n).
std::vector<double> forecast(const Dgm11Params &params, double x1_initial, std::size_t n, std::size_t horizon);
std::vector<double> forecast(const Dgm11Fit &fit, std::size_t horizon);

/// Time response x1(k+1) = beta1^k x0(1) + (1 - beta1^k)/(1 - beta1) beta2.
/// Requires beta1 != 1; k is 0-based here (k = 0 returns x0(1)).
double closed_form_accumulated(const Dgm11Params &params, double x1_initial, std::size_t k);

/// Restored response x0(k+1) = (beta1 - 1)(x0(1) - beta2/(1 - beta1)) beta1^(k-1), k >= 1.
double closed_form_restored(const Dgm11Params &params, double x1_initial, std::size_t k);

} // namespace greycast::dgm
