#pragma once

// Dataset files are delimiter-separated text:
//
//   # period=4        (optional directives)
//   # phase0=1
//   label,value
//   2016-Q1,474.2
//   2016-Q2,573.8
//
// Quarterly labels are YYYY-Qn, monthly labels YYYY-MM or YYYY-Mm. Labels must
// be consecutive periods of a single style.

#include "greycast/series.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace greycast::io {

enum class LabelStyle { Quarterly, Monthly };

struct PeriodLabel {
	int year = 0;
	int sub = 1; // quarter 1..4 or month 1..12
	LabelStyle style = LabelStyle::Quarterly;
	bool month_prefix = false; // "2009-M2" rather than "2009-02"

	int natural_period() const noexcept { return style == LabelStyle::Quarterly ? 4 : 12; }
	long ordinal() const noexcept;
	PeriodLabel advanced(long steps) const;
	std::string to_string() const;
};

std::optional<PeriodLabel> parse_label(std::string_view text);

struct DatasetOptions {
	std::optional<int> period;
	std::optional<int> phase0;
};

SeasonalSeries parse_dataset(std::istream &in, const DatasetOptions &options = {});
SeasonalSeries read_dataset(const std::filesystem::path &path, const DatasetOptions &options = {});

/// Writes the series back in dataset format; values use the shortest
/// round-trip decimal form. Unlabelled series get synthetic "k" labels and are
/// not readable back.
void write_dataset(const SeasonalSeries &series, std::ostream &out);
void write_dataset(const SeasonalSeries &series, const std::filesystem::path &path);

/// Labels of the `horizon` periods following the series, or "t+1".. when the
/// series carries no parseable labels.
std::vector<std::string> future_labels(const SeasonalSeries &series, std::size_t horizon);

/// Multi-column table of actuals and per-model predictions:
///   label,actual,<model>,<model>,...
struct ForecastTable {
	std::vector<std::string> labels;
	std::vector<double> actual;
	std::vector<std::string> columns;
	std::vector<std::vector<double>> predictions; // predictions[c][row]

	/// Case-insensitive column lookup; throws Error(UnknownModel).
	const std::vector<double> &column(std::string_view name) const;
};

ForecastTable parse_forecast_table(std::istream &in);
ForecastTable read_forecast_table(const std::filesystem::path &path);

} // namespace greycast::io
