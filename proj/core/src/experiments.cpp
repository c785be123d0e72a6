#include "greycast/experiments.hpp"

#include <algorithm>
#include <limits>

namespace greycast::experiments {

SplitSpec SplitSpec::resolve(std::size_t series_length, std::optional<std::size_t> n_train,
                             std::optional<std::size_t> horizon) {
	SplitSpec split;
	if (n_train && horizon) {
		split = {*n_train, *horizon};
	} else if (n_train) {
		split = {*n_train, series_length >= *n_train ? series_length - *n_train : 0};
	} else if (horizon) {
		split = {series_length >= *horizon ? series_length - *horizon : 0, *horizon};
	} else {
		throw Error(ErrorCode::AlignmentError, "a training length or a horizon is required");
	}
	if (split.n_train + split.horizon != series_length) {
		throw Error(ErrorCode::AlignmentError, "training (" + std::to_string(split.n_train) + ") + horizon (" +
		                                           std::to_string(split.horizon) + ") must equal series length " +
		                                           std::to_string(series_length));
	}
	if (split.horizon == 0) {
		throw Error(ErrorCode::AlignmentError, "test window is empty");
	}
	if (split.n_train == 0) {
		throw Error(ErrorCode::AlignmentError, "training window is empty");
	}
	return split;
}

namespace {

struct WindowRun {
	ModelFit fit;
	std::vector<double> forecast;
};

WindowRun fit_and_forecast(ModelKind kind, const SeasonalSeries &train, std::size_t horizon) {
	auto fit = fit_model(kind, train);
	auto fc = fit.forecast(horizon);
	return {std::move(fit), std::move(fc)};
}

} // namespace

ComparisonResult run_comparison(const SeasonalSeries &series, const SplitSpec &split,
                                std::span<const ModelKind> models) {
	const auto checked = SplitSpec::resolve(series.size(), split.n_train, split.horizon);
	const auto train = series.head(checked.n_train);

	ComparisonResult result;
	result.split = checked;
	for (auto kind : models) {
		ModelOutcome outcome;
		outcome.model = kind;
		try {
			auto run = fit_and_forecast(kind, train, checked.horizon);
			outcome.parameters = run.fit.parameters();
			outcome.fitted = run.fit.fitted();
			outcome.forecast = std::move(run.forecast);
			outcome.report = metrics::evaluate(series.values(), outcome.fitted, outcome.forecast);
		} catch (const Error &e) {
			outcome.failure = Failure{e.code(), e.what()};
		}
		result.outcomes.push_back(std::move(outcome));
	}
	return result;
}

RobustnessResult run_robustness(const SeasonalSeries &series, std::size_t horizon,
                                std::span<const ModelKind> models) {
	if (horizon < 1) {
		throw Error(ErrorCode::InvalidHorizon, "robustness horizon must be >= 1");
	}
	const std::size_t n = series.size();
	std::size_t smallest = std::numeric_limits<std::size_t>::max();
	for (auto kind : models) {
		smallest = std::min(smallest, min_length(kind, series.period()));
	}
	if (models.empty() || n < horizon || n - horizon < smallest) {
		throw InsufficientDataError(models.empty() ? horizon : smallest + horizon, n, "robustness experiment");
	}

	const std::size_t max_window = n - horizon;
	const auto test_actual = series.values().last(horizon);

	RobustnessResult result;
	result.series_length = n;
	result.horizon = horizon;
	result.test_first = max_window + 1;
	for (auto kind : models) {
		ModelCurve curve;
		curve.model = kind;
		curve.min_window = min_length(kind, series.period());
		curve.max_window = max_window;
		for (std::size_t len = curve.min_window; len <= max_window; ++len) {
			WindowRecord record;
			record.window_len = len;
			record.first_index = max_window - len + 1;
			record.phase0 = series.season(record.first_index);
			try {
				const auto run = fit_and_forecast(kind, series.slice(record.first_index, len), horizon);
				const auto report = metrics::evaluate(test_actual, {}, run.forecast);
				record.mapep = report.mapep;
				record.max_ape = report.max_ape_test();
			} catch (const Error &e) {
				record.failure = Failure{e.code(), e.what()};
			}
			curve.records.push_back(std::move(record));
		}
		result.curves.push_back(std::move(curve));
	}
	return result;
}

} // namespace greycast::experiments
