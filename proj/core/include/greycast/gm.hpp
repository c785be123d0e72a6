#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace greycast::gm {

/// Continuous grey model GM(1,1): x0(k) + a z1(k) = b, with background value
/// z1(k) = (x1(k) + x1(k-1)) / 2.
struct Gm11Params {
	double a = 0.0; // development coefficient
	double b = 0.0; // grey input
};

struct Gm11Fit {
	Gm11Params params;
	double x1_initial = 0.0;
	std::size_t n = 0;
	std::vector<double> fitted;
	std::vector<double> residuals;
};

inline constexpr std::size_t kMinLength = 4;

Gm11Fit fit(std::span<const double> values);

/// Time response x1(k+1) = x0(1) e^{-ak} + b (1 - e^{-ak}) / a, with the
/// linear limit x0(1) + b k at a = 0. k is 0-based.
double time_response(const Gm11Params &params, double x1_initial, std::size_t k);

std::vector<double> forecast(const Gm11Fit &fit, std::size_t horizon);

} // namespace greycast::gm
