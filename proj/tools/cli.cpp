#include "cli.hpp"

#include "greycast/dataset.hpp"
#include "greycast/errors.hpp"
#include "greycast/experiments.hpp"
#include "greycast/metrics.hpp"
#include "greycast/models.hpp"
#include "greycast/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

namespace greycast::cli {

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
	std::string data;
	std::optional<int> period;
	std::optional<int> phase;
	std::string out;
	std::string format;
};

struct Options {
	CommonOptions common;
	std::vector<std::string> models;
	std::optional<std::size_t> train;
	std::optional<std::size_t> horizon;
	std::string predicted;
	std::string fitted;
};

void add_common(CLI::App *cmd, CommonOptions &o, bool with_period = true) {
	cmd->add_option("data", o.data, "Dataset file (label,value)")->required();
	if (with_period) {
		cmd->add_option("--period", o.period, "Seasonal period override")->check(CLI::PositiveNumber);
		cmd->add_option("--phase", o.phase, "Season index of the first observation")->check(CLI::PositiveNumber);
	}
	cmd->add_option("--out", o.out, "Write the report to this file");
	cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
}

int exit_code_for(ErrorCode code) {
	switch (code) {
	case ErrorCode::InvalidArgument:
	case ErrorCode::UnknownModel:
	case ErrorCode::InvalidHorizon:
	case ErrorCode::AlignmentError: return kUsage;
	case ErrorCode::InvalidSeries:
	case ErrorCode::InvalidActual:
	case ErrorCode::IncompleteCycleCoverage:
	case ErrorCode::ParseError:
	case ErrorCode::OrderError:
	case ErrorCode::FormatError: return kDataError;
	case ErrorCode::InsufficientData:
	case ErrorCode::SingularDesign:
	case ErrorCode::InvalidAccumulation: return kModelError;
	case ErrorCode::IoError: return kIoError;
	}
	return kUsage;
}

int report_error(std::ostream &err, std::string_view code, const std::string &message, int exit_code) {
	nlohmann::ordered_json j;
	j["error"] = {{"code", code}, {"message", message}, {"exit_code", exit_code}};
	err << j.dump() << '\n';
	return exit_code;
}

io::DatasetOptions dataset_options(const CommonOptions &o) {
	return io::DatasetOptions{o.period, o.phase};
}

std::vector<ModelKind> resolve_models(const std::vector<std::string> &names, std::vector<ModelKind> fallback) {
	if (names.empty()) {
		return fallback;
	}
	std::vector<ModelKind> out;
	for (const auto &n : names) {
		out.push_back(parse_model(n));
	}
	return out;
}

report::Format resolve_format(const CommonOptions &o) {
	return report::parse_format(o.format.empty() ? "json" : o.format);
}

void require_not_text(const CommonOptions &o, std::string_view command) {
	if (o.format == "text") {
		throw Error(ErrorCode::InvalidArgument, "--format text is only available for 'fit', not '" +
		                                            std::string(command) + "'");
	}
}

/// Sends a rendered report to --out (resolved against the output-directory
/// environment variable when relative) or to the output stream.
void emit(const std::string &content, const CommonOptions &o, std::string_view command, std::ostream &out) {
	const char *env_dir = std::getenv(kOutputDirEnv);
	fs::path target;
	if (!o.out.empty()) {
		target = o.out;
		if (env_dir && *env_dir && target.is_relative()) {
			target = fs::path(env_dir) / target;
		}
	} else if (env_dir && *env_dir) {
		const std::string ext = o.format == "csv" ? ".csv" : o.format == "text" ? ".txt" : ".json";
		target = fs::path(env_dir) / (std::string(command) + ext);
	}
	if (target.empty()) {
		out << content;
	} else {
		report::write_report(content, target);
	}
}

SeasonalSeries training_prefix(const SeasonalSeries &series, const std::optional<std::size_t> &train) {
	if (!train) {
		return series;
	}
	if (*train < 1 || *train > series.size()) {
		throw Error(ErrorCode::AlignmentError, "--train " + std::to_string(*train) + " outside [1, " +
		                                           std::to_string(series.size()) + "]");
	}
	return series.head(*train);
}

ModelKind single_model(const Options &o) {
	if (o.models.size() > 1) {
		throw Error(ErrorCode::InvalidArgument, "this command takes a single --model");
	}
	return o.models.empty() ? ModelKind::Dgsm : parse_model(o.models.front());
}

void cmd_fit(const Options &o, std::ostream &out) {
	const auto series = training_prefix(io::read_dataset(o.common.data, dataset_options(o.common)), o.train);
	const auto fit = fit_model(single_model(o), series);
	if (o.common.format.empty() || o.common.format == "text") {
		emit(fit.parameter_summary() + "\n", o.common, "fit", out);
		return;
	}
	emit(report::render_fit(series, fit, resolve_format(o.common)), o.common, "fit", out);
}

void cmd_forecast(const Options &o, std::ostream &out) {
	require_not_text(o.common, "forecast");
	const auto series = training_prefix(io::read_dataset(o.common.data, dataset_options(o.common)), o.train);
	const auto kind = single_model(o);
	const auto fit = fit_model(kind, series);
	const auto values = fit.forecast(*o.horizon);
	const auto labels = io::future_labels(series, values.size());
	emit(report::render_forecast(kind, labels, values, resolve_format(o.common)), o.common, "forecast", out);
}

void cmd_evaluate(const Options &o, std::ostream &out) {
	require_not_text(o.common, "evaluate");
	const auto format = resolve_format(o.common);

	if (o.predicted.empty()) {
		// Wide table: label,actual,<model>,...
		const auto table = io::read_forecast_table(o.common.data);
		std::vector<std::string> columns;
		if (o.models.empty()) {
			columns = table.columns;
		} else {
			columns = o.models;
		}
		std::string content;
		if (columns.size() == 1 || format == report::Format::Csv) {
			for (const auto &c : columns) {
				const auto &pred = table.column(c);
				const auto rep = metrics::evaluate(table.actual, {}, pred);
				content += report::render_evaluation(c, table.labels, table.actual, {}, pred, rep, format);
			}
		} else {
			auto all = nlohmann::ordered_json::array();
			for (const auto &c : columns) {
				const auto &pred = table.column(c);
				const auto rep = metrics::evaluate(table.actual, {}, pred);
				all.push_back(nlohmann::ordered_json::parse(
				    report::render_evaluation(c, table.labels, table.actual, {}, pred, rep, format)));
			}
			content = nlohmann::ordered_json{{"evaluations", all}}.dump(2) + "\n";
		}
		emit(content, o.common, "evaluate", out);
		return;
	}

	// Actual series plus separate fitted/predicted files aligned to its head/tail.
	const auto actual = io::read_dataset(o.common.data, dataset_options(o.common));
	const auto predicted = io::read_dataset(o.predicted, dataset_options(o.common));
	std::vector<double> fitted;
	if (!o.fitted.empty()) {
		const auto f = io::read_dataset(o.fitted, dataset_options(o.common));
		fitted.assign(f.values().begin(), f.values().end());
	}
	const std::size_t n_fit = fitted.size();
	if (n_fit + predicted.size() != actual.size()) {
		throw Error(ErrorCode::AlignmentError, "fitted (" + std::to_string(n_fit) + ") + predicted (" +
		                                           std::to_string(predicted.size()) + ") must cover the " +
		                                           std::to_string(actual.size()) + " actual values");
	}
	for (std::size_t i = 0; i < predicted.size(); ++i) {
		if (predicted.labels()[i] != actual.labels()[n_fit + i]) {
			throw Error(ErrorCode::AlignmentError, "predicted label " + predicted.labels()[i] +
			                                           " does not match actual label " +
			                                           actual.labels()[n_fit + i]);
		}
	}
	const auto rep = metrics::evaluate(actual.values(), fitted, predicted.values());
	const std::string name = o.models.empty() ? "predicted" : o.models.front();
	emit(report::render_evaluation(name, actual.labels(), actual.values(), fitted, predicted.values(), rep, format),
	     o.common, "evaluate", out);
}

void cmd_compare(const Options &o, std::ostream &out) {
	require_not_text(o.common, "compare");
	const auto series = io::read_dataset(o.common.data, dataset_options(o.common));
	const auto split = experiments::SplitSpec::resolve(series.size(), o.train, o.horizon);
	const auto models =
	    resolve_models(o.models, {ModelKind::Dgsm, ModelKind::Sfgm, ModelKind::Sgm, ModelKind::Dggm});
	const auto result = experiments::run_comparison(series, split, models);
	emit(report::render_comparison(series, result, resolve_format(o.common)), o.common, "compare", out);
}

void cmd_robustness(const Options &o, std::ostream &out) {
	require_not_text(o.common, "robustness");
	const auto series = io::read_dataset(o.common.data, dataset_options(o.common));
	const auto models = resolve_models(o.models, {ModelKind::Dgsm, ModelKind::Sfgm, ModelKind::Dggm});
	const auto result = experiments::run_robustness(series, *o.horizon, models);
	emit(report::render_robustness(result, resolve_format(o.common)), o.common, "robustness", out);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
	CLI::App app{"Grey seasonal forecasting: DGSM(1,1) and grey baselines", "greycast"};
	app.require_subcommand(1);

	Options o;
	auto *fit = app.add_subcommand("fit", "Estimate model parameters");
	add_common(fit, o.common);
	fit->add_option("--model", o.models, "Model name");
	fit->add_option("--train", o.train, "Use only the first N observations");

	auto *forecast = app.add_subcommand("forecast", "Fit and forecast ahead");
	add_common(forecast, o.common);
	forecast->add_option("--model", o.models, "Model name");
	forecast->add_option("--train", o.train, "Use only the first N observations");
	forecast->add_option("--horizon", o.horizon, "Forecast horizon")->required()->check(CLI::PositiveNumber);

	auto *evaluate = app.add_subcommand("evaluate", "Score predictions against actuals");
	add_common(evaluate, o.common);
	evaluate->add_option("--model", o.models, "Prediction column(s) to evaluate")->delimiter(',');
	evaluate->add_option("--predicted", o.predicted, "Predicted values aligned with the actual tail");
	evaluate->add_option("--fitted", o.fitted, "Fitted values aligned with the actual head");

	auto *compare = app.add_subcommand("compare", "Split-sample comparison of models");
	add_common(compare, o.common);
	compare->add_option("--model", o.models, "Models to compare")->delimiter(',');
	compare->add_option("--train", o.train, "Training length");
	compare->add_option("--horizon", o.horizon, "Test length")->check(CLI::PositiveNumber);

	auto *robustness = app.add_subcommand("robustness", "Shrinking training window experiment");
	add_common(robustness, o.common);
	robustness->add_option("--model", o.models, "Models to run")->delimiter(',');
	robustness->add_option("--horizon", o.horizon, "Fixed test length")->required()->check(CLI::PositiveNumber);

	std::vector<const char *> argv{"greycast"};
	for (const auto &a : args) {
		argv.push_back(a.c_str());
	}
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError &e) {
		if (e.get_exit_code() == 0) {
			return app.exit(e, out, err);
		}
		return report_error(err, "InvalidArgument", e.what(), kUsage);
	}

	try {
		if (fit->parsed()) {
			cmd_fit(o, out);
		} else if (forecast->parsed()) {
			cmd_forecast(o, out);
		} else if (evaluate->parsed()) {
			cmd_evaluate(o, out);
		} else if (compare->parsed()) {
			cmd_compare(o, out);
		} else if (robustness->parsed()) {
			cmd_robustness(o, out);
		}
	} catch (const Error &e) {
		return report_error(err, to_string(e.code()), e.what(), exit_code_for(e.code()));
	}
	return kOk;
}

} // namespace greycast::cli
