#include "greycast/gm.hpp"

#include "greycast/errors.hpp"
#include "greycast/least_squares.hpp"
#include "greycast/series.hpp"

#include <cmath>

namespace greycast::gm {

Gm11Fit fit(std::span<const double> values) {
	const std::size_t n = values.size();
	if (n < kMinLength) {
		throw InsufficientDataError(kMinLength, n, "GM(1,1)");
	}
	for (std::size_t i = 0; i < n; ++i) {
		if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
			throw Error(ErrorCode::InvalidSeries, "observation " + std::to_string(i + 1) + " is not strictly positive");
		}
	}

	const auto acc = cumulative_sum(values);
	DesignMatrix design(n - 1, 2);
	std::vector<double> y(n - 1);
	for (std::size_t k = 1; k < n; ++k) {
		design(k - 1, 0) = -0.5 * (acc[k] + acc[k - 1]);
		design(k - 1, 1) = 1.0;
		y[k - 1] = values[k];
	}
	const auto solution = solve_least_squares(design, y);

	Gm11Fit out;
	out.params = {solution.coefficients[0], solution.coefficients[1]};
	out.x1_initial = values.front();
	out.n = n;
	std::vector<double> response(n);
	for (std::size_t k = 0; k < n; ++k) {
		response[k] = time_response(out.params, out.x1_initial, k);
	}
	out.fitted = first_difference(response);
	out.residuals.resize(n);
	for (std::size_t i = 0; i < n; ++i) {
		out.residuals[i] = values[i] - out.fitted[i];
	}
	return out;
}

double time_response(const Gm11Params &params, double x1_initial, std::size_t k) {
	const double t = static_cast<double>(k);
	if (params.a == 0.0) {
		return x1_initial + params.b * t;
	}
	// expm1 keeps (1 - e^{-at}) / a accurate as a -> 0.
	const double decay = std::exp(-params.a * t);
	return x1_initial * decay - params.b * std::expm1(-params.a * t) / params.a;
}

std::vector<double> forecast(const Gm11Fit &fit, std::size_t horizon) {
	if (horizon < 1) {
		throw Error(ErrorCode::InvalidHorizon, "forecast horizon must be >= 1");
	}
	std::vector<double> out(horizon);
	double previous = time_response(fit.params, fit.x1_initial, fit.n - 1);
	for (std::size_t i = 0; i < horizon; ++i) {
		const double next = time_response(fit.params, fit.x1_initial, fit.n + i);
		out[i] = next - previous;
		previous = next;
	}
	return out;
}

} // namespace greycast::gm
