#include "powerlaw/grid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace powerlaw {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token) {
  const std::string s(trim(token));
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid: cannot parse '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("grid: cannot parse '" + s + "'");
  return v;
}

Length parse_length(std::string_view token) {
  const double v = parse_real(token);
  if (!(v >= 0.0) || v != std::floor(v) || v > 9.0e15) {
    throw std::invalid_argument("grid: '" + std::string(trim(token)) +
                                "' is not a non-negative integer");
  }
  return static_cast<Length>(v);
}

std::vector<double> log_points(double lo, double hi, unsigned per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || per_decade == 0) {
    throw std::invalid_argument("grid: log spacing needs 0 < lo <= hi and a positive density");
  }
  std::vector<double> out;
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  const auto steps = static_cast<long>(std::floor((b - a) * per_decade + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    out.push_back(std::pow(10.0, a + static_cast<double>(i) / per_decade));
  }
  if (out.back() < hi * (1.0 - 1e-12)) out.push_back(hi);
  out.front() = lo;
  return out;
}

template <class T>
void require_increasing(const std::vector<T>& g) {
  if (g.empty()) throw std::invalid_argument("grid: empty");
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(g[i] > g[i - 1])) throw std::invalid_argument("grid: values must be strictly increasing");
  }
}

}  // namespace

std::vector<Length> log_grid(Length lo, Length hi, unsigned per_decade) {
  std::vector<Length> out;
  for (double x : log_points(static_cast<double>(lo), static_cast<double>(hi), per_decade)) {
    const auto v = static_cast<Length>(std::llround(x));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  if (out.back() != hi) out.push_back(hi);
  return out;
}

std::vector<Length> linear_grid(Length lo, Length hi) {
  if (hi < lo) throw std::invalid_argument("grid: hi < lo");
  std::vector<Length> out;
  for (Length t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

std::vector<Length> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<Length> out;
  if (text.starts_with("log:")) {
    const auto parts = split(text.substr(4), ':');
    if (parts.size() < 2 || parts.size() > 3) {
      throw std::invalid_argument("grid: expected log:lo:hi[:per_decade]");
    }
    const unsigned density = parts.size() == 3 ? static_cast<unsigned>(parse_length(parts[2])) : 4;
    out = log_grid(parse_length(parts[0]), parse_length(parts[1]), density);
  } else if (text.starts_with("range:")) {
    const auto parts = split(text.substr(6), ':');
    if (parts.size() != 2) throw std::invalid_argument("grid: expected range:lo:hi");
    out = linear_grid(parse_length(parts[0]), parse_length(parts[1]));
  } else {
    for (auto token : split(text, ',')) out.push_back(parse_length(token));
  }
  require_increasing(out);
  return out;
}

std::vector<double> parse_real_grid(std::string_view text) {
  text = trim(text);
  std::vector<double> out;
  if (text.starts_with("log:")) {
    const auto parts = split(text.substr(4), ':');
    if (parts.size() < 2 || parts.size() > 3) {
      throw std::invalid_argument("grid: expected log:lo:hi[:per_decade]");
    }
    const unsigned density = parts.size() == 3 ? static_cast<unsigned>(parse_length(parts[2])) : 4;
    out = log_points(parse_real(parts[0]), parse_real(parts[1]), density);
  } else {
    for (auto token : split(text, ',')) out.push_back(parse_real(token));
  }
  require_increasing(out);
  for (double v : out) {
    if (!(v > 0.0)) throw std::invalid_argument("grid: budgets must be positive");
  }
  return out;
}

}  // namespace powerlaw
