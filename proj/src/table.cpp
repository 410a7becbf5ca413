#include <jspec/table.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace jspec {

void SweepSpec::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw std::invalid_argument("sweep " + variable + ": need finite min < max");
  }
  if (count < 2) {
    throw std::invalid_argument("sweep " + variable + ": count must be >= 2");
  }
  if (scale == SweepScale::logarithmic && !(min > 0.0)) {
    throw std::invalid_argument("sweep " + variable + ": logarithmic scale requires min > 0");
  }
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(count));
  const double last = static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / last;
    if (scale == SweepScale::linear) {
      out[static_cast<std::size_t>(i)] = min + (max - min) * f;
    } else {
      out[static_cast<std::size_t>(i)] = min * std::pow(max / min, f);
    }
  }
  // Pin the end points exactly.
  out.front() = min;
  out.back() = max;
  return out;
}

namespace {

double parse_double(const std::string& variable, const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("axis " + variable + ": cannot parse '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(v)) {
    throw std::invalid_argument("axis " + variable + ": cannot parse '" + token + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    parts.push_back(part);
  }
  if (!text.empty() && text.back() == sep) {
    parts.emplace_back();
  }
  return parts;
}

}  // namespace

std::vector<double> parse_axis(const std::string& variable, const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("axis " + variable + ": empty axis");
  }
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) {
      throw std::invalid_argument("axis " + variable + ": expected min:max:count[:lin|log]");
    }
    SweepSpec spec;
    spec.variable = variable;
    spec.min = parse_double(variable, parts[0]);
    spec.max = parse_double(variable, parts[1]);
    const double count = parse_double(variable, parts[2]);
    if (count != std::floor(count) || count > 1e7) {
      throw std::invalid_argument("axis " + variable + ": count must be an integer");
    }
    spec.count = static_cast<int>(count);
    if (parts.size() == 4) {
      if (parts[3] == "log") {
        spec.scale = SweepScale::logarithmic;
      } else if (parts[3] != "lin") {
        throw std::invalid_argument("axis " + variable + ": scale must be lin or log");
      }
    }
    return spec.values();
  }
  std::vector<double> out;
  for (const std::string& token : split(text, ',')) {
    out.push_back(parse_double(variable, token));
  }
  return out;
}

std::string format_number(double value, int precision) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

TableWriter::TableWriter(std::ostream& out, std::vector<std::string> columns, OutputFormat format,
                         int precision)
    : out_(out), columns_(std::move(columns)), format_(format), precision_(precision) {
  if (precision_ < 1 || precision_ > 17) {
    throw std::invalid_argument("precision must be in [1, 17]");
  }
  if (format_ == OutputFormat::csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out_ << (i ? "," : "") << columns_[i];
    }
    out_ << '\n';
  }
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("table row has " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(columns_.size()));
  }
  auto render = [&](const Cell& c, bool json) -> std::string {
    if (const double* d = std::get_if<double>(&c)) {
      if (json && !std::isfinite(*d)) {
        return "null";
      }
      return format_number(*d, precision_);
    }
    if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) {
      return std::to_string(*i);
    }
    const std::string& s = std::get<std::string>(c);
    return json ? "\"" + s + "\"" : s;
  };
  if (format_ == OutputFormat::csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << render(cells[i], false);
    }
  } else {
    out_ << '{';
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << '"' << columns_[i] << "\":" << render(cells[i], true);
    }
    out_ << '}';
  }
  out_ << '\n';
  ++rows_;
}

}  // namespace jspec
