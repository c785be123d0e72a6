#pragma once

#include "greycast/errors.hpp"
#include "greycast/metrics.hpp"
#include "greycast/models.hpp"
#include "greycast/series.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace greycast::experiments {

/// Training prefix followed by a held-out tail of `horizon` observations.
struct SplitSpec {
	std::size_t n_train = 0;
	std::size_t horizon = 0;

	/// Resolves whichever of n_train / horizon is missing against the series
	/// length. Throws Error(AlignmentError) unless n_train + horizon equals the
	/// length and both windows are non-empty.
	static SplitSpec resolve(std::size_t series_length, std::optional<std::size_t> n_train,
	                         std::optional<std::size_t> horizon);
};

struct Failure {
	ErrorCode code = ErrorCode::InvalidArgument;
	std::string message;
};

struct ModelOutcome {
	ModelKind model = ModelKind::Dgsm;
	std::optional<metrics::EvalReport> report;
	std::vector<NamedValue> parameters;
	std::vector<double> fitted;
	std::vector<double> forecast;
	std::optional<Failure> failure;

	bool ok() const noexcept { return !failure.has_value(); }
};

struct ComparisonResult {
	SplitSpec split;
	std::vector<ModelOutcome> outcomes;
};

/// Fits each model on the first n_train observations and scores its forecasts
/// against the held-out tail. A model that cannot be fitted is reported as a
/// failure without affecting the others.
ComparisonResult run_comparison(const SeasonalSeries &series, const SplitSpec &split,
                                std::span<const ModelKind> models);

struct WindowRecord {
	std::size_t window_len = 0;
	std::size_t first_index = 0; // 1-based position of the window's oldest observation
	int phase0 = 1;              // season of that observation
	std::optional<double> mapep;
	std::optional<double> max_ape;
	std::optional<Failure> failure;
};

struct ModelCurve {
	ModelKind model = ModelKind::Dgsm;
	std::size_t min_window = 0;
	std::size_t max_window = 0;
	std::vector<WindowRecord> records; // window_len strictly increasing
};

struct RobustnessResult {
	std::size_t series_length = 0;
	std::size_t horizon = 0;
	std::size_t test_first = 0; // 1-based index of the first held-out observation
	std::vector<ModelCurve> curves;
};

/// For every admissible training length L (model minimum .. n - horizon), fits
/// on the L observations immediately preceding the final `horizon` points and
/// scores the forecast of those points. The test window is identical for all
/// runs. Failed fits are kept as records without metrics.
RobustnessResult run_robustness(const SeasonalSeries &series, std::size_t horizon,
                                std::span<const ModelKind> models);

} // namespace greycast::experiments
