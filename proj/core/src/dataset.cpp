#include "greycast/dataset.hpp"

#include "greycast/errors.hpp"
#include "greycast/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace greycast::io {

namespace {

std::string_view trim(std::string_view s) {
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
		s.remove_prefix(1);
	}
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
		s.remove_suffix(1);
	}
	return s;
}

std::string lower(std::string_view s) {
	std::string out(s);
	std::transform(out.begin(), out.end(), out.begin(),
	               [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
	return out;
}

std::optional<int> parse_int(std::string_view s) {
	int value = 0;
	const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (ec != std::errc{} || ptr != s.data() + s.size()) {
		return std::nullopt;
	}
	return value;
}

std::optional<double> parse_double(std::string_view s) {
	s = trim(s);
	if (!s.empty() && s.front() == '+') {
		s.remove_prefix(1);
	}
	double value = 0.0;
	const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
		return std::nullopt;
	}
	return value;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
	std::vector<std::string_view> out;
	std::size_t start = 0;
	while (true) {
		const auto pos = line.find(delim, start);
		out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
		if (pos == std::string_view::npos) {
			break;
		}
		start = pos + 1;
	}
	return out;
}

long floor_div(long a, long b) {
	return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
}

/// Line reader shared by both file layouts: strips CR, skips blanks, collects
/// "# key=value" directives and returns the header split on its delimiter.
struct TableReader {
	explicit TableReader(std::istream &stream) : in(stream) {}

	std::istream &in;
	std::size_t line_no = 0;
	char delim = ',';
	std::vector<std::pair<std::string, std::string>> directives;

	std::optional<std::string> next_line() {
		std::string line;
		while (std::getline(in, line)) {
			++line_no;
			if (!line.empty() && line.back() == '\r') {
				line.pop_back();
			}
			const auto t = trim(line);
			if (t.empty()) {
				continue;
			}
			if (t.front() == '#') {
				record_directive(t.substr(1));
				continue;
			}
			return std::string(t);
		}
		return std::nullopt;
	}

	void record_directive(std::string_view body) {
		const auto pos = body.find_first_of("=:");
		if (pos == std::string_view::npos) {
			return; // plain comment
		}
		directives.emplace_back(lower(trim(body.substr(0, pos))), std::string(trim(body.substr(pos + 1))));
	}

	std::optional<int> directive_int(std::initializer_list<std::string_view> keys) const {
		for (const auto &[k, v] : directives) {
			if (std::find(keys.begin(), keys.end(), k) != keys.end()) {
				const auto parsed = parse_int(v);
				if (!parsed) {
					throw DatasetError(ErrorCode::FormatError, 0, "directive '" + k + "' is not an integer");
				}
				return parsed;
			}
		}
		return std::nullopt;
	}

	std::vector<std::string> header() {
		const auto line = next_line();
		if (!line) {
			throw DatasetError(ErrorCode::FormatError, line_no, "missing header row");
		}
		for (char d : {',', ';', '\t'}) {
			if (line->find(d) != std::string::npos) {
				delim = d;
				break;
			}
		}
		std::vector<std::string> cols;
		for (auto c : split(*line, delim)) {
			cols.push_back(lower(c));
		}
		return cols;
	}
};

PeriodLabel parse_label_or_throw(std::string_view text, std::size_t line_no) {
	const auto label = parse_label(text);
	if (!label) {
		throw DatasetError(ErrorCode::FormatError, line_no,
		                   "unrecognised label '" + std::string(text) + "' (expected YYYY-Qn or YYYY-MM)");
	}
	return *label;
}

/// Enforces one label style and consecutive periods.
struct LabelSequence {
	std::optional<PeriodLabel> first;
	std::optional<PeriodLabel> last;

	void push(const PeriodLabel &label, std::size_t line_no) {
		if (last) {
			if (label.style != last->style) {
				throw DatasetError(ErrorCode::FormatError, line_no, "mixed quarterly and monthly labels");
			}
			if (label.ordinal() <= last->ordinal()) {
				throw DatasetError(ErrorCode::OrderError, line_no,
				                   "label " + label.to_string() + " is not after " + last->to_string());
			}
			if (label.ordinal() != last->ordinal() + 1) {
				throw DatasetError(ErrorCode::OrderError, line_no,
				                   "gap between " + last->to_string() + " and " + label.to_string());
			}
		} else {
			first = label;
		}
		last = label;
	}
};

} // namespace

long PeriodLabel::ordinal() const noexcept {
	return static_cast<long>(year) * natural_period() + (sub - 1);
}

PeriodLabel PeriodLabel::advanced(long steps) const {
	const long p = natural_period();
	const long ord = ordinal() + steps;
	PeriodLabel out = *this;
	out.year = static_cast<int>(floor_div(ord, p));
	out.sub = static_cast<int>(ord - static_cast<long>(out.year) * p) + 1;
	return out;
}

std::string PeriodLabel::to_string() const {
	std::ostringstream os;
	os << year << '-';
	if (style == LabelStyle::Quarterly) {
		os << 'Q' << sub;
	} else if (month_prefix) {
		os << 'M' << sub;
	} else {
		os << (sub < 10 ? "0" : "") << sub;
	}
	return os.str();
}

std::optional<PeriodLabel> parse_label(std::string_view text) {
	text = trim(text);
	const auto dash = text.find('-');
	if (dash != 4) {
		return std::nullopt;
	}
	const auto year = parse_int(text.substr(0, dash));
	auto rest = text.substr(dash + 1);
	if (!year || rest.empty()) {
		return std::nullopt;
	}
	PeriodLabel label;
	label.year = *year;
	if (rest.front() == 'Q' || rest.front() == 'q') {
		const auto q = parse_int(rest.substr(1));
		if (!q || *q < 1 || *q > 4 || rest.size() != 2) {
			return std::nullopt;
		}
		label.style = LabelStyle::Quarterly;
		label.sub = *q;
		return label;
	}
	label.style = LabelStyle::Monthly;
	if (rest.front() == 'M' || rest.front() == 'm') {
		label.month_prefix = true;
		rest.remove_prefix(1);
	} else if (rest.size() != 2) {
		return std::nullopt;
	}
	const auto m = parse_int(rest);
	if (!m || *m < 1 || *m > 12 || rest.empty() || rest.size() > 2) {
		return std::nullopt;
	}
	label.sub = *m;
	return label;
}

SeasonalSeries parse_dataset(std::istream &in, const DatasetOptions &options) {
	TableReader reader(in);
	const auto cols = reader.header();
	if (cols.size() != 2 || cols[0] != "label" || cols[1] != "value") {
		throw DatasetError(ErrorCode::FormatError, reader.line_no, "header must be 'label,value'");
	}

	std::vector<double> values;
	std::vector<std::string> labels;
	LabelSequence sequence;
	while (const auto line = reader.next_line()) {
		const auto fields = split(*line, reader.delim);
		if (fields.size() != 2) {
			throw DatasetError(ErrorCode::FormatError, reader.line_no, "expected 2 fields, got " +
			                                                                std::to_string(fields.size()));
		}
		const auto label = parse_label_or_throw(fields[0], reader.line_no);
		const auto value = parse_double(fields[1]);
		if (!value) {
			throw DatasetError(ErrorCode::ParseError, reader.line_no,
			                   "value '" + std::string(fields[1]) + "' is not a number");
		}
		if (!(*value > 0.0)) {
			throw DatasetError(ErrorCode::ParseError, reader.line_no,
			                   "value " + std::string(fields[1]) + " is not strictly positive");
		}
		sequence.push(label, reader.line_no);
		values.push_back(*value);
		labels.emplace_back(fields[0]);
	}
	if (values.empty()) {
		throw DatasetError(ErrorCode::FormatError, reader.line_no, "dataset has no observations");
	}

	const auto &first = *sequence.first;
	const int period = options.period.value_or(reader.directive_int({"period", "s"}).value_or(first.natural_period()));
	if (period < 1) {
		throw DatasetError(ErrorCode::FormatError, 0, "period must be >= 1");
	}
	const auto explicit_phase = options.phase0 ? options.phase0 : reader.directive_int({"phase0", "phase"});
	const int phase0 =
	    explicit_phase.value_or(static_cast<int>(((first.ordinal() % period) + period) % period) + 1);
	if (phase0 < 1 || phase0 > period) {
		throw DatasetError(ErrorCode::FormatError, 0,
		                   "phase0 " + std::to_string(phase0) + " outside [1, " + std::to_string(period) + "]");
	}
	return SeasonalSeries(std::move(values), period, phase0, std::move(labels));
}

SeasonalSeries read_dataset(const std::filesystem::path &path, const DatasetOptions &options) {
	std::ifstream in(path);
	if (!in) {
		throw Error(ErrorCode::IoError, "cannot open dataset " + path.string());
	}
	return parse_dataset(in, options);
}

void write_dataset(const SeasonalSeries &series, std::ostream &out) {
	out << "# period=" << series.period() << "\n# phase0=" << series.phase0() << "\nlabel,value\n";
	for (std::size_t i = 0; i < series.size(); ++i) {
		if (series.has_labels()) {
			out << series.labels()[i];
		} else {
			out << i + 1;
		}
		out << ',' << format_shortest(series[i]) << '\n';
	}
}

void write_dataset(const SeasonalSeries &series, const std::filesystem::path &path) {
	std::ofstream out(path, std::ios::binary);
	if (!out) {
		throw Error(ErrorCode::IoError, "cannot write dataset " + path.string());
	}
	write_dataset(series, out);
	if (!out) {
		throw Error(ErrorCode::IoError, "failed writing dataset " + path.string());
	}
}

std::vector<std::string> future_labels(const SeasonalSeries &series, std::size_t horizon) {
	std::vector<std::string> out;
	out.reserve(horizon);
	const auto last = series.has_labels() ? parse_label(series.labels().back()) : std::nullopt;
	for (std::size_t step = 1; step <= horizon; ++step) {
		if (last) {
			out.push_back(last->advanced(static_cast<long>(step)).to_string());
		} else {
			out.push_back("t+" + std::to_string(step));
		}
	}
	return out;
}

const std::vector<double> &ForecastTable::column(std::string_view name) const {
	const auto key = lower(name);
	for (std::size_t c = 0; c < columns.size(); ++c) {
		if (columns[c] == key) {
			return predictions[c];
		}
	}
	throw Error(ErrorCode::UnknownModel, "table has no column '" + std::string(name) + "'");
}

ForecastTable parse_forecast_table(std::istream &in) {
	TableReader reader(in);
	const auto cols = reader.header();
	if (cols.size() < 3 || cols[0] != "label" || cols[1] != "actual") {
		throw DatasetError(ErrorCode::FormatError, reader.line_no,
		                   "header must be 'label,actual,<model>[,<model>...]'");
	}
	ForecastTable table;
	table.columns.assign(cols.begin() + 2, cols.end());
	table.predictions.resize(table.columns.size());
	LabelSequence sequence;
	while (const auto line = reader.next_line()) {
		const auto fields = split(*line, reader.delim);
		if (fields.size() != cols.size()) {
			throw DatasetError(ErrorCode::FormatError, reader.line_no,
			                   "expected " + std::to_string(cols.size()) + " fields, got " +
			                       std::to_string(fields.size()));
		}
		sequence.push(parse_label_or_throw(fields[0], reader.line_no), reader.line_no);
		table.labels.emplace_back(fields[0]);
		const auto actual = parse_double(fields[1]);
		if (!actual || !(*actual > 0.0)) {
			throw DatasetError(ErrorCode::ParseError, reader.line_no, "actual value must be strictly positive");
		}
		table.actual.push_back(*actual);
		for (std::size_t c = 2; c < fields.size(); ++c) {
			const auto v = parse_double(fields[c]);
			if (!v) {
				throw DatasetError(ErrorCode::ParseError, reader.line_no,
				                   "value '" + std::string(fields[c]) + "' is not a number");
			}
			table.predictions[c - 2].push_back(*v);
		}
	}
	if (table.actual.empty()) {
		throw DatasetError(ErrorCode::FormatError, reader.line_no, "table has no rows");
	}
	return table;
}

ForecastTable read_forecast_table(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw Error(ErrorCode::IoError, "cannot open table " + path.string());
	}
	return parse_forecast_table(in);
}

} // namespace greycast::io
