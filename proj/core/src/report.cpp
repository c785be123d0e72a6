#include "greycast/report.hpp"

#include "greycast/errors.hpp"
#include "greycast/format.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace greycast::report {

using json = nlohmann::ordered_json;

namespace {

json optional_number(const std::optional<double> &v) {
	return v ? json(*v) : json(nullptr);
}

json optional_display(const std::optional<double> &v) {
	return v ? json(metrics::round2(*v)) : json(nullptr);
}

json eval_json(const metrics::EvalReport &r) {
	json j;
	j["n_fit"] = r.n_fit;
	j["n_test"] = r.n_test;
	j["mapes"] = optional_number(r.mapes);
	j["mapep"] = optional_number(r.mapep);
	j["rmses"] = optional_number(r.rmses);
	j["rmsep"] = optional_number(r.rmsep);
	j["max_ape_test"] = optional_number(r.max_ape_test());
	j["ape"] = r.ape;
	json display;
	display["mapes"] = optional_display(r.mapes);
	display["mapep"] = optional_display(r.mapep);
	display["rmses"] = optional_display(r.rmses);
	display["rmsep"] = optional_display(r.rmsep);
	display["ape"] = json::array();
	for (double a : r.ape) {
		display["ape"].push_back(metrics::round2(a));
	}
	j["display"] = std::move(display);
	return j;
}

json parameters_json(const std::vector<NamedValue> &params) {
	json j = json::object();
	for (const auto &p : params) {
		j[p.name] = p.value;
	}
	return j;
}

std::string csv_field(std::string_view s) {
	if (s.find_first_of(",\"\n") == std::string_view::npos) {
		return std::string(s);
	}
	std::string out = "\"";
	for (char c : s) {
		out += c;
		if (c == '"') {
			out += '"';
		}
	}
	return out + "\"";
}

std::string opt_csv(const std::optional<double> &v) {
	return v ? format_shortest(*v) : std::string();
}

std::string dump(const json &j) {
	return j.dump(2) + "\n";
}

} // namespace

Format parse_format(std::string_view name) {
	if (name == "json") {
		return Format::Json;
	}
	if (name == "csv") {
		return Format::Csv;
	}
	throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::string render_fit(const SeasonalSeries &series, const ModelFit &fit, Format format) {
	const auto params = fit.parameters();
	if (format == Format::Csv) {
		std::ostringstream os;
		os << "parameter,value\n";
		for (const auto &p : params) {
			os << p.name << ',' << format_shortest(p.value) << '\n';
		}
		return os.str();
	}
	json j;
	j["model"] = model_name(fit.kind());
	j["n"] = series.size();
	j["period"] = series.period();
	j["phase0"] = series.phase0();
	j["parameters"] = parameters_json(params);
	j["summary"] = fit.parameter_summary();
	j["fitted"] = fit.fitted();
	j["residuals"] = fit.residuals();
	return dump(j);
}

std::string render_forecast(ModelKind model, std::span<const std::string> labels, std::span<const double> values,
                            Format format) {
	if (format == Format::Csv) {
		std::ostringstream os;
		os << "label,forecast\n";
		for (std::size_t i = 0; i < values.size(); ++i) {
			os << csv_field(labels[i]) << ',' << format_shortest(values[i]) << '\n';
		}
		return os.str();
	}
	json j;
	j["model"] = model_name(model);
	j["horizon"] = values.size();
	j["labels"] = std::vector<std::string>(labels.begin(), labels.end());
	j["forecast"] = std::vector<double>(values.begin(), values.end());
	return dump(j);
}

std::string render_evaluation(std::string_view model, std::span<const std::string> labels,
                              std::span<const double> actual, std::span<const double> fitted,
                              std::span<const double> predicted, const metrics::EvalReport &report, Format format) {
	if (format == Format::Csv) {
		std::ostringstream os;
		os << "label,window,actual,predicted,ape\n";
		for (std::size_t i = 0; i < actual.size(); ++i) {
			const bool in_fit = i < report.n_fit;
			const double value = in_fit ? fitted[i] : predicted[i - report.n_fit];
			os << csv_field(labels[i]) << ',' << (in_fit ? "fit" : "test") << ',' << format_shortest(actual[i])
			   << ',' << format_shortest(value) << ',' << format_shortest(report.ape[i]) << '\n';
		}
		return os.str();
	}
	json j;
	j["model"] = model;
	j["labels"] = std::vector<std::string>(labels.begin(), labels.end());
	j.update(eval_json(report));
	return dump(j);
}

std::string render_comparison(const SeasonalSeries &series, const experiments::ComparisonResult &result,
                              Format format) {
	const auto &split = result.split;
	std::vector<std::string> labels = series.has_labels() ? series.labels() : std::vector<std::string>{};
	if (labels.empty()) {
		for (std::size_t k = 1; k <= series.size(); ++k) {
			labels.push_back(std::to_string(k));
		}
	}

	if (format == Format::Csv) {
		std::ostringstream os;
		os << "model,label,window,actual,predicted,ape\n";
		for (const auto &o : result.outcomes) {
			const auto name = model_name(o.model);
			if (!o.ok()) {
				os << name << ",,failed:" << to_string(o.failure->code) << ",,,\n";
				continue;
			}
			for (std::size_t i = 0; i < series.size(); ++i) {
				const bool in_fit = i < split.n_train;
				const double value = in_fit ? o.fitted[i] : o.forecast[i - split.n_train];
				os << name << ',' << csv_field(labels[i]) << ',' << (in_fit ? "fit" : "test") << ','
				   << format_shortest(series[i]) << ',' << format_shortest(value) << ','
				   << format_shortest(o.report->ape[i]) << '\n';
			}
		}
		return os.str();
	}

	json j;
	j["series"] = {{"n", series.size()}, {"period", series.period()}, {"phase0", series.phase0()}};
	j["split"] = {{"n_train", split.n_train}, {"horizon", split.horizon}};
	j["labels"] = labels;
	j["actual"] = std::vector<double>(series.values().begin(), series.values().end());
	json models = json::array();
	for (const auto &o : result.outcomes) {
		json m;
		m["model"] = model_name(o.model);
		if (o.ok()) {
			m["status"] = "ok";
			m["parameters"] = parameters_json(o.parameters);
			m["fitted"] = o.fitted;
			m["forecast"] = o.forecast;
			m["report"] = eval_json(*o.report);
		} else {
			m["status"] = "error";
			m["error"] = {{"code", to_string(o.failure->code)}, {"message", o.failure->message}};
		}
		models.push_back(std::move(m));
	}
	j["models"] = std::move(models);
	return dump(j);
}

std::string render_robustness(const experiments::RobustnessResult &result, Format format) {
	if (format == Format::Csv) {
		std::ostringstream os;
		os << "model,window_len,mapep,max_ape\n";
		for (const auto &curve : result.curves) {
			for (const auto &r : curve.records) {
				os << model_name(curve.model) << ',' << r.window_len << ',' << opt_csv(r.mapep) << ','
				   << opt_csv(r.max_ape) << '\n';
			}
		}
		return os.str();
	}
	json j;
	j["series_length"] = result.series_length;
	j["horizon"] = result.horizon;
	j["test_first"] = result.test_first;
	json curves = json::array();
	for (const auto &curve : result.curves) {
		json c;
		c["model"] = model_name(curve.model);
		c["min_window"] = curve.min_window;
		c["max_window"] = curve.max_window;
		json records = json::array();
		for (const auto &r : curve.records) {
			json rec;
			rec["window_len"] = r.window_len;
			rec["first_index"] = r.first_index;
			rec["phase0"] = r.phase0;
			rec["mapep"] = optional_number(r.mapep);
			rec["max_ape"] = optional_number(r.max_ape);
			if (r.failure) {
				rec["error"] = {{"code", to_string(r.failure->code)}, {"message", r.failure->message}};
			}
			records.push_back(std::move(rec));
		}
		c["records"] = std::move(records);
		curves.push_back(std::move(c));
	}
	j["curves"] = std::move(curves);
	return dump(j);
}

void write_report(const std::string &content, const std::filesystem::path &path) {
	std::ofstream out(path, std::ios::binary);
	if (!out) {
		throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
	}
	out << content;
	out.flush();
	if (!out) {
		throw Error(ErrorCode::IoError, "failed writing " + path.string());
	}
}

} // namespace greycast::report
