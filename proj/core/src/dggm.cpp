#include "greycast/dggm.hpp"

#include "greycast/errors.hpp"

#include <algorithm>

namespace greycast::dggm {

std::size_t min_length(int period) noexcept {
	return gm::kMinLength * static_cast<std::size_t>(period);
}

DggmModel fit(const SeasonalSeries &series) {
	const auto s = static_cast<std::size_t>(series.period());
	std::vector<std::vector<double>> groups(s);
	for (std::size_t k = 1; k <= series.size(); ++k) {
		groups[static_cast<std::size_t>(series.season(k) - 1)].push_back(series.at(k));
	}
	std::vector<std::size_t> counts(s);
	std::transform(groups.begin(), groups.end(), counts.begin(), [](const auto &g) { return g.size(); });

	const std::size_t required = min_length(series.period());
	if (series.size() < required) {
		throw InsufficientDataError(required, series.size(), "DGGM(1,1) with period " + std::to_string(s), counts);
	}

	DggmModel model;
	model.period = series.period();
	model.phase0 = series.phase0();
	model.n = series.size();
	model.group_lengths = counts;
	model.groups.reserve(s);
	for (const auto &g : groups) {
		model.groups.push_back(gm::fit(g));
	}

	model.fitted.resize(model.n);
	model.residuals.resize(model.n);
	std::vector<std::size_t> position(s, 0);
	for (std::size_t k = 1; k <= model.n; ++k) {
		const auto idx = static_cast<std::size_t>(series.season(k) - 1);
		model.fitted[k - 1] = model.groups[idx].fitted[position[idx]++];
		model.residuals[k - 1] = series.at(k) - model.fitted[k - 1];
	}
	return model;
}

std::vector<double> forecast(const DggmModel &model, std::size_t horizon) {
	if (horizon < 1) {
		throw Error(ErrorCode::InvalidHorizon, "forecast horizon must be >= 1");
	}
	const auto s = static_cast<std::size_t>(model.period);
	// Each group needs at most ceil(horizon / s) steps ahead.
	const std::size_t steps = (horizon + s - 1) / s;
	std::vector<std::vector<double>> group_forecasts;
	group_forecasts.reserve(s);
	for (const auto &g : model.groups) {
		group_forecasts.push_back(gm::forecast(g, steps));
	}

	std::vector<double> out(horizon);
	std::vector<std::size_t> taken(s, 0);
	for (std::size_t step = 1; step <= horizon; ++step) {
		const auto idx = static_cast<std::size_t>(season_of(model.n + step, model.period, model.phase0) - 1);
		out[step - 1] = group_forecasts[idx][taken[idx]++];
	}
	return out;
}

} // namespace greycast::dggm
