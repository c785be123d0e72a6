#include "greycast/metrics.hpp"

#include "greycast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace greycast::metrics {

double ape(double actual, double predicted) {
	if (!(actual > 0.0) || !std::isfinite(actual)) {
		throw Error(ErrorCode::InvalidActual, "APE requires a strictly positive actual value, got " +
		                                          std::to_string(actual));
	}
	return std::abs(predicted - actual) / actual * 100.0;
}

namespace {

void require_aligned(std::span<const double> a, std::span<const double> b) {
	if (a.size() != b.size() || a.empty()) {
		throw Error(ErrorCode::AlignmentError, "sequences must be non-empty and of equal length (" +
		                                           std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
		                                           ")");
	}
}

} // namespace

double mape(std::span<const double> actual, std::span<const double> predicted) {
	require_aligned(actual, predicted);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		sum += ape(actual[i], predicted[i]);
	}
	return sum / static_cast<double>(actual.size());
}

double rmse(std::span<const double> actual, std::span<const double> predicted) {
	require_aligned(actual, predicted);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		const double e = predicted[i] - actual[i];
		sum += e * e;
	}
	return std::sqrt(sum / static_cast<double>(actual.size()));
}

std::optional<double> EvalReport::max_ape_test() const {
	if (n_test == 0) {
		return std::nullopt;
	}
	return *std::max_element(ape.begin() + static_cast<std::ptrdiff_t>(n_fit), ape.end());
}

EvalReport evaluate(std::span<const double> actual, std::span<const double> fitted,
                    std::span<const double> predicted) {
	if (actual.size() != fitted.size() + predicted.size() || actual.empty()) {
		throw Error(ErrorCode::AlignmentError,
		            "expected " + std::to_string(fitted.size() + predicted.size()) + " actual values (" +
		                std::to_string(fitted.size()) + " fitted + " + std::to_string(predicted.size()) +
		                " predicted), got " + std::to_string(actual.size()));
	}
	EvalReport report;
	report.n_fit = fitted.size();
	report.n_test = predicted.size();
	report.ape.reserve(actual.size());
	for (std::size_t i = 0; i < fitted.size(); ++i) {
		report.ape.push_back(ape(actual[i], fitted[i]));
	}
	for (std::size_t i = 0; i < predicted.size(); ++i) {
		report.ape.push_back(ape(actual[fitted.size() + i], predicted[i]));
	}
	const auto fit_actual = actual.first(fitted.size());
	const auto test_actual = actual.last(predicted.size());
	if (!fitted.empty()) {
		report.mapes = mape(fit_actual, fitted);
		report.rmses = rmse(fit_actual, fitted);
	}
	if (!predicted.empty()) {
		report.mapep = mape(test_actual, predicted);
		report.rmsep = rmse(test_actual, predicted);
	}
	return report;
}

double round2(double value) {
	return std::round(value * 100.0) / 100.0;
}

} // namespace greycast::metrics
