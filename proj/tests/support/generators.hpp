#pragma once

// Seeded generators for property-style tests.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace greycast::support {

using Rng = std::mt19937_64;

inline double uniform(Rng &rng, double lo, double hi) {
	return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_size(Rng &rng, std::size_t lo, std::size_t hi) {
	return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Trend x seasonal x noise, strictly positive.
inline std::vector<double> seasonal_series(Rng &rng, std::size_t n, int period, double noise = 0.05) {
	const double level = uniform(rng, 10.0, 1000.0);
	const double growth = uniform(rng, -0.01, 0.02);
	std::vector<double> shape(static_cast<std::size_t>(period));
	for (auto &s : shape) {
		s = uniform(rng, 0.6, 1.4);
	}
	std::vector<double> out(n);
	for (std::size_t k = 0; k < n; ++k) {
		const double trend = level * std::exp(growth * static_cast<double>(k));
		out[k] = trend * shape[k % shape.size()] * (1.0 + uniform(rng, -noise, noise));
	}
	return out;
}

/// x(k + s) = x(k) with random positive cycle values.
inline std::vector<double> periodic_series(Rng &rng, std::size_t n, int period) {
	std::vector<double> cycle(static_cast<std::size_t>(period));
	for (auto &c : cycle) {
		c = uniform(rng, 1.0, 500.0);
	}
	std::vector<double> out(n);
	for (std::size_t k = 0; k < n; ++k) {
		out[k] = cycle[k % cycle.size()];
	}
	return out;
}

/// Observations generated by running x1(k+1) = alpha x1(k) + beta_{season(k+1)}
/// from x1(1) = x0_first and differencing. Season of observation k is
/// ((k + phase0 - 2) mod s) + 1.
inline std::vector<double> recursion_series(double alpha, const std::vector<double> &betas, double x0_first,
                                            std::size_t n, int phase0 = 1) {
	const std::size_t s = betas.size();
	std::vector<double> x1{x0_first};
	for (std::size_t k = 2; k <= n; ++k) {
		const std::size_t season = (k + static_cast<std::size_t>(phase0) - 2) % s;
		x1.push_back(alpha * x1.back() + betas[season]);
	}
	std::vector<double> x0(n);
	x0[0] = x1[0];
	for (std::size_t k = 1; k < n; ++k) {
		x0[k] = x1[k] - x1[k - 1];
	}
	return x0;
}

/// Relative closeness against a caller-supplied scale.
inline bool close_rel(double a, double b, double tol, double scale) {
	return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

} // namespace greycast::support
