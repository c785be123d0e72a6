#include "greycast/series.hpp"

#include "greycast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace greycast {

int season_of(std::size_t k, int period, int phase0) {
	// M(k + phase0 - 1, s) == ((k + phase0 - 2) mod s) + 1
	const auto s = static_cast<std::size_t>(period);
	return static_cast<int>((k + static_cast<std::size_t>(phase0) - 2) % s) + 1;
}

namespace {

void require_series(bool ok, const std::string &message) {
	if (!ok) {
		throw Error(ErrorCode::InvalidSeries, message);
	}
}

} // namespace

SeasonalSeries::SeasonalSeries(std::vector<double> values, int period, int phase0, std::vector<std::string> labels)
    : values_(std::move(values)), period_(period), phase0_(phase0), labels_(std::move(labels)) {
	require_series(!values_.empty(), "series must contain at least one observation");
	require_series(period_ >= 1, "seasonal period must be >= 1, got " + std::to_string(period_));
	require_series(phase0_ >= 1 && phase0_ <= period_,
	               "phase0 must lie in [1, " + std::to_string(period_) + "], got " + std::to_string(phase0_));
	for (std::size_t i = 0; i < values_.size(); ++i) {
		require_series(std::isfinite(values_[i]) && values_[i] > 0.0,
		               "observation " + std::to_string(i + 1) + " is not strictly positive");
	}
	require_series(labels_.empty() || labels_.size() == values_.size(),
	               "labels must have exactly one entry per observation");
}

SeasonalSeries SeasonalSeries::slice(std::size_t first, std::size_t count) const {
	if (first < 1 || count < 1 || first - 1 + count > values_.size()) {
		throw Error(ErrorCode::InvalidArgument, "slice [" + std::to_string(first) + ", +" + std::to_string(count) +
		                                            ") out of range for series of length " +
		                                            std::to_string(values_.size()));
	}
	const auto begin = static_cast<std::ptrdiff_t>(first - 1);
	const auto end = begin + static_cast<std::ptrdiff_t>(count);
	std::vector<double> values(values_.begin() + begin, values_.begin() + end);
	std::vector<std::string> labels;
	if (has_labels()) {
		labels.assign(labels_.begin() + begin, labels_.begin() + end);
	}
	return SeasonalSeries(std::move(values), period_, season(first), std::move(labels));
}

SeasonalSeries SeasonalSeries::with_period(int period, int phase0) const {
	return SeasonalSeries(values_, period, phase0, labels_);
}

AccumulatedSeries::AccumulatedSeries(std::vector<double> values, int period, int phase0)
    : values_(std::move(values)), period_(period), phase0_(phase0) {
	if (values_.empty()) {
		throw Error(ErrorCode::InvalidAccumulation, "accumulated series is empty");
	}
	if (period_ < 1 || phase0_ < 1 || phase0_ > period_) {
		throw Error(ErrorCode::InvalidAccumulation, "invalid period/phase metadata");
	}
	if (!(values_.front() > 0.0) || !std::isfinite(values_.front())) {
		throw Error(ErrorCode::InvalidAccumulation, "first accumulated value must be positive");
	}
	for (std::size_t i = 1; i < values_.size(); ++i) {
		if (!(values_[i] > values_[i - 1]) || !std::isfinite(values_[i])) {
			throw Error(ErrorCode::InvalidAccumulation,
			            "accumulated series not strictly increasing at k=" + std::to_string(i + 1));
		}
	}
}

std::vector<double> cumulative_sum(std::span<const double> values) {
	std::vector<double> out(values.size());
	double running = 0.0;
	for (std::size_t i = 0; i < values.size(); ++i) {
		running += values[i];
		out[i] = running;
	}
	return out;
}

std::vector<double> first_difference(std::span<const double> values) {
	std::vector<double> out(values.size());
	if (values.empty()) {
		return out;
	}
	out[0] = values[0];
	for (std::size_t i = 1; i < values.size(); ++i) {
		out[i] = values[i] - values[i - 1];
	}
	return out;
}

AccumulatedSeries ago(const SeasonalSeries &series) {
	return AccumulatedSeries(cumulative_sum(series.values()), series.period(), series.phase0());
}

SeasonalSeries iago(const AccumulatedSeries &acc) {
	return SeasonalSeries(first_difference(acc.values()), acc.period(), acc.phase0());
}

} // namespace greycast
