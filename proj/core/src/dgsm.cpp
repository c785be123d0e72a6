#include "greycast/dgsm.hpp"

#include "greycast/errors.hpp"

#include <algorithm>
#include <cmath>

namespace greycast::dgsm {

std::size_t min_length(int period) noexcept {
	const auto s = static_cast<std::size_t>(period);
	return std::max(2 * s, s + 2);
}

DgsmDesign build_design(const SeasonalSeries &series) {
	const std::size_t n = series.size();
	const int s = series.period();
	const std::size_t required = min_length(s);
	if (n < required) {
		throw InsufficientDataError(required, n, "DGSM(1,1) with period " + std::to_string(s));
	}

	const auto acc = ago(series);
	DgsmDesign design{DesignMatrix(n - 1, static_cast<std::size_t>(s) + 1), std::vector<double>(n - 1)};
	for (std::size_t k = 1; k < n; ++k) {
		const std::size_t row = k - 1;
		design.matrix(row, 0) = acc.at(k);
		design.matrix(row, static_cast<std::size_t>(series.season(k + 1))) = 1.0;
		design.target[row] = acc.at(k + 1);
	}
	return design;
}

namespace {

struct Estimate {
	DgsmParams params;
	double condition = 0.0;
};

Estimate estimate_impl(const SeasonalSeries &series) {
	const auto design = build_design(series);
	auto solution = solve_least_squares(design.matrix, design.target);
	Estimate out;
	out.params.alpha = solution.coefficients.front();
	out.params.betas.assign(solution.coefficients.begin() + 1, solution.coefficients.end());
	out.params.period = series.period();
	out.params.phase0 = series.phase0();
	out.condition = solution.condition_estimate;
	return out;
}

} // namespace

DgsmParams estimate(const SeasonalSeries &series) {
	return estimate_impl(series).params;
}

std::vector<double> simulate_accumulated(const DgsmParams &params, double x1_initial, std::size_t k_max) {
	std::vector<double> out;
	out.reserve(k_max);
	if (k_max == 0) {
		return out;
	}
	out.push_back(x1_initial);
	for (std::size_t k = 1; k < k_max; ++k) {
		out.push_back(params.alpha * out.back() + params.beta_at(k + 1));
	}
	return out;
}

std::vector<double> restore(std::span<const double> accumulated) {
	return first_difference(accumulated);
}

double closed_form_accumulated(const DgsmParams &params, double x1_initial, std::size_t k) {
	// alpha^(k-1) x0(1) + sum_{j=2}^{k} alpha^(k-j) beta_{season(j)}
	double value = std::pow(params.alpha, static_cast<double>(k - 1)) * x1_initial;
	for (std::size_t j = 2; j <= k; ++j) {
		value += std::pow(params.alpha, static_cast<double>(k - j)) * params.beta_at(j);
	}
	return value;
}

double closed_form_restored(const DgsmParams &params, double x1_initial, std::size_t k) {
	if (k <= 1) {
		return x1_initial;
	}
	const double a = params.alpha;
	const double lead = std::pow(a, static_cast<double>(k - 2));
	double value = lead * (a - 1.0) * x1_initial + lead * params.beta_at(2);
	for (std::size_t j = 3; j <= k; ++j) {
		value += std::pow(a, static_cast<double>(k - j)) * (params.beta_at(j) - params.beta_at(j - 1));
	}
	return value;
}

DgsmFit fit(const SeasonalSeries &series) {
	auto est = estimate_impl(series);
	auto accumulated = simulate_accumulated(est.params, series.at(1), series.size());
	auto restored = restore(accumulated);
	std::vector<double> residuals(series.size());
	for (std::size_t i = 0; i < series.size(); ++i) {
		residuals[i] = series[i] - restored[i];
	}
	return DgsmFit{std::move(est.params), series, std::move(accumulated), std::move(restored), std::move(residuals),
	               est.condition};
}

std::vector<double> forecast(const DgsmFit &fit, std::size_t horizon) {
	if (horizon < 1) {
		throw Error(ErrorCode::InvalidHorizon, "forecast horizon must be >= 1");
	}
	const std::size_t n = fit.source.size();
	std::vector<double> out;
	out.reserve(horizon);
	double previous = fit.fitted_accumulated.back();
	for (std::size_t step = 1; step <= horizon; ++step) {
		const double next = fit.params.alpha * previous + fit.params.beta_at(n + step);
		out.push_back(next - previous);
		previous = next;
	}
	return out;
}

CycleCoefficients cycle_coefficients(const DgsmParams &params) {
	// psi_i = (1 - a^(s-1)) beta_i + sum_{m=1}^{s-1} (a^(s-m) - a^(s-m-1)) beta_{i+m},
	// season indices taken cyclically.
	const int s = params.period;
	const double a = params.alpha;
	CycleCoefficients out;
	out.psi.assign(static_cast<std::size_t>(s), 0.0);
	for (int i = 1; i <= s; ++i) {
		double psi = (1.0 - std::pow(a, s - 1)) * params.beta(i);
		for (int m = 1; m <= s - 1; ++m) {
			const int season = (i - 1 + m) % s + 1;
			psi += (std::pow(a, s - m) - std::pow(a, s - m - 1)) * params.beta(season);
		}
		out.psi[static_cast<std::size_t>(i - 1)] = psi;
	}
	return out;
}

} // namespace greycast::dgsm
