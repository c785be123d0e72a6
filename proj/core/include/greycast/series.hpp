#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace greycast {

/// Season index of the k-th observation (1-based) for a series with period s
/// whose first observation falls in season phase0. Always in [1, s].
///
/// With phase0 = 1 this is the cycle-index function M(k, s): s when k is a
/// multiple of s, k mod s otherwise.
int season_of(std::size_t k, int period, int phase0 = 1);

/// Positive observations with a seasonal period and the season of the first
/// observation. Immutable once constructed.
class SeasonalSeries {
public:
	/// Throws Error(InvalidSeries) when any invariant is violated.
	SeasonalSeries(std::vector<double> values, int period, int phase0 = 1, std::vector<std::string> labels = {});

	std::span<const double> values() const noexcept { return values_; }
	double operator[](std::size_t i) const { return values_[i]; }
	/// 1-based access, matching the modelling formulas.
	double at(std::size_t k) const { return values_.at(k - 1); }
	std::size_t size() const noexcept { return values_.size(); }
	int period() const noexcept { return period_; }
	int phase0() const noexcept { return phase0_; }
	bool has_labels() const noexcept { return !labels_.empty(); }
	const std::vector<std::string> &labels() const noexcept { return labels_; }

	/// Season of the k-th observation (1-based).
	int season(std::size_t k) const { return season_of(k, period_, phase0_); }

	/// Contiguous sub-series of `count` observations starting at 1-based
	/// index `first`. phase0 advances so calendar seasons are preserved.
	SeasonalSeries slice(std::size_t first, std::size_t count) const;
	SeasonalSeries head(std::size_t count) const { return slice(1, count); }

	/// Same observations under a different period (phase0 resets unless given).
	SeasonalSeries with_period(int period, int phase0 = 1) const;

private:
	std::vector<double> values_;
	int period_;
	int phase0_;
	std::vector<std::string> labels_;
};

/// Running sums of a SeasonalSeries; strictly increasing.
class AccumulatedSeries {
public:
	/// Throws Error(InvalidAccumulation) unless values are positive and
	/// strictly increasing.
	AccumulatedSeries(std::vector<double> values, int period, int phase0 = 1);

	std::span<const double> values() const noexcept { return values_; }
	double operator[](std::size_t i) const { return values_[i]; }
	double at(std::size_t k) const { return values_.at(k - 1); }
	std::size_t size() const noexcept { return values_.size(); }
	int period() const noexcept { return period_; }
	int phase0() const noexcept { return phase0_; }

private:
	std::vector<double> values_;
	int period_;
	int phase0_;
};

/// First-order accumulating generation (running sum).
AccumulatedSeries ago(const SeasonalSeries &series);

/// Inverse accumulation: first element kept, later elements differenced.
SeasonalSeries iago(const AccumulatedSeries &acc);

/// Running sum of an arbitrary sequence.
std::vector<double> cumulative_sum(std::span<const double> values);

/// First differences with the first element preserved.
std::vector<double> first_difference(std::span<const double> values);

} // namespace greycast
