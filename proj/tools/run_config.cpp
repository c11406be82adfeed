#include "run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace kirchhoff::cli {

namespace {

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw DomainError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

std::vector<double> parse_a_grid(const std::string& spec) {
  if (spec.empty()) return {};
  const auto parts = split(spec, ':');
  if (parts.size() == 4 && (parts[0] == "log" || parts[0] == "lin")) {
    const double lo = to_double(parts[1]);
    const double hi = to_double(parts[2]);
    const double nd = to_double(parts[3]);
    if (nd < 1 || nd != std::floor(nd)) throw DomainError("grid size must be a positive integer");
    const int n = static_cast<int>(nd);
    if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("grid needs 0 < lo <= hi");
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
      const double s = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      g.push_back(parts[0] == "log" ? std::exp(std::log(lo) + s * (std::log(hi) - std::log(lo)))
                                    : lo + s * (hi - lo));
    }
    return g;
  }
  if (parts.size() != 1) throw DomainError("bad grid spec '" + spec + "'");
  std::vector<double> g;
  for (const std::string& x : split(spec, ',')) g.push_back(to_double(x));
  return g;
}

std::optional<double> parse_coupling(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  return to_double(text);
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "both") return Format::Both;
  throw DomainError("format must be json, csv or both");
}

bool writes_json(Format f) { return f != Format::Csv; }
bool writes_csv(Format f) { return f != Format::Json; }

std::string default_out_dir() {
  const char* env = std::getenv("KIRCHHOFF_OUT");
  return env && *env ? env : ".";
}

}  // namespace kirchhoff::cli
