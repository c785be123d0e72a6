#include "greycast/dgm.hpp"

#include "greycast/errors.hpp"
#include "greycast/least_squares.hpp"
#include "greycast/series.hpp"

#include <cmath>

namespace greycast::dgm {

namespace {

void require_positive(std::span<const double> values) {
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
			throw Error(ErrorCode::InvalidSeries, "observation " + std::to_string(i + 1) + " is not strictly positive");
		}
	}
}

std::vector<double> simulate(const Dgm11Params &p, double x1_initial, std::size_t count) {
	std::vector<double> out;
	out.reserve(count);
	if (count == 0) {
		return out;
	}
	out.push_back(x1_initial);
	while (out.size() < count) {
		out.push_back(p.beta1 * out.back() + p.beta2);
	}
	return out;
}

} // namespace

Dgm11Fit fit(std::span<const double> values) {
	const std::size_t n = values.size();
	if (n < kMinLength) {
		throw InsufficientDataError(kMinLength, n, "DGM(1,1)");
	}
	require_positive(values);

	const auto acc = cumulative_sum(values);
	DesignMatrix c(n - 1, 2);
	std::vector<double> y(n - 1);
	for (std::size_t row = 0; row + 1 < n; ++row) {
		c(row, 0) = acc[row];
		c(row, 1) = 1.0;
		y[row] = acc[row + 1];
	}
	const auto solution = solve_least_squares(c, y);

	Dgm11Fit out;
	out.params = {solution.coefficients[0], solution.coefficients[1]};
	out.x1_initial = values.front();
	out.n = n;
	out.fitted_accumulated = simulate(out.params, out.x1_initial, n);
	out.fitted = first_difference(out.fitted_accumulated);
	out.residuals.resize(n);
	for (std::size_t i = 0; i < n; ++i) {
		out.residuals[i] = values[i] - out.fitted[i];
	}
	return out;
}

std::vector<double> forecast(const Dgm11Params &params, double x1_initial, std::size_t n, std::size_t horizon) {
	if (horizon < 1) {
		throw Error(ErrorCode::InvalidHorizon, "forecast horizon must be >= 1");
	}
	const auto path = simulate(params, x1_initial, n + horizon);
	std::vector<double> out(horizon);
	for (std::size_t i = 0; i < horizon; ++i) {
		out[i] = path[n + i] - path[n + i - 1];
	}
	return out;
}

std::vector<double> forecast(const Dgm11Fit &fit, std::size_t horizon) {
	return forecast(fit.params, fit.x1_initial, fit.n, horizon);
}

double closed_form_accumulated(const Dgm11Params &params, double x1_initial, std::size_t k) {
	const double growth = std::pow(params.beta1, static_cast<double>(k));
	return growth * x1_initial + (1.0 - growth) / (1.0 - params.beta1) * params.beta2;
}

double closed_form_restored(const Dgm11Params &params, double x1_initial, std::size_t k) {
	if (k == 0) {
		return x1_initial;
	}
	const double b1 = params.beta1;
	return (b1 - 1.0) * (x1_initial - params.beta2 / (1.0 - b1)) * std::pow(b1, static_cast<double>(k - 1));
}

} // namespace greycast::dgm
