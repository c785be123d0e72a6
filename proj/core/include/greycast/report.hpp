#pragma once

// Machine-readable renderings of fits, forecasts, evaluations and experiment
// results. JSON carries full-precision numbers plus a "display" block rounded
// to two decimals; CSV has one row per point or window. Output is a pure
// function of the inputs, so identical inputs give identical bytes.

#include "greycast/experiments.hpp"
#include "greycast/metrics.hpp"
#include "greycast/models.hpp"
#include "greycast/series.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace greycast::report {

enum class Format { Json, Csv };

/// "json" or "csv"; throws Error(InvalidArgument).
Format parse_format(std::string_view name);

std::string render_fit(const SeasonalSeries &series, const ModelFit &fit, Format format);

std::string render_forecast(ModelKind model, std::span<const std::string> labels, std::span<const double> values,
                            Format format);

/// `labels` and `actual` cover fit and test windows; the first report.n_fit
/// belong to the fit window.
std::string render_evaluation(std::string_view model, std::span<const std::string> labels,
                              std::span<const double> actual, std::span<const double> fitted,
                              std::span<const double> predicted, const metrics::EvalReport &report, Format format);

std::string render_comparison(const SeasonalSeries &series, const experiments::ComparisonResult &result,
                              Format format);

std::string render_robustness(const experiments::RobustnessResult &result, Format format);

/// Throws Error(IoError) naming the path on failure.
void write_report(const std::string &content, const std::filesystem::path &path);

} // namespace greycast::report
