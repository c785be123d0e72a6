#pragma once

#include "greycast/gm.hpp"
#include "greycast/series.hpp"

#include <cstddef>
#include <vector>

namespace greycast::dggm {

/// Data-grouping grey model: one GM(1,1) per season subsequence, with
/// forecasts interleaved back into calendar order.
struct DggmModel {
	int period = 1;
	int phase0 = 1;
	std::size_t n = 0;
	std::vector<gm::Gm11Fit> groups; // groups[i-1] fits season i
	std::vector<std::size_t> group_lengths;
	std::vector<double> fitted;
	std::vector<double> residuals;
};

/// Four observations per season.
std::size_t min_length(int period) noexcept;

/// Throws InsufficientDataError (with per-season counts) when
/// series.size() < min_length(period).
DggmModel fit(const SeasonalSeries &series);

std::vector<double> forecast(const DggmModel &model, std::size_t horizon);

} // namespace greycast::dggm
