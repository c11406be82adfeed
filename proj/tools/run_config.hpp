#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/params.hpp"

namespace kirchhoff::cli {

enum class Format { Json, Csv, Both };

struct RunConfig {
  std::string command;
  ProblemParams params;
  std::optional<double> a;  ///< empty means "auto"
  bool n_given = false;
  bool f_min_given = false;
  bool f_max_given = false;
  double tol = 1e-12;
  std::string out_dir = ".";
  Format format = Format::Both;
  std::vector<double> a_grid;
  unsigned long long seed = 0;
  std::string theorem = "t0-1";
  bool from_ground_state = false;
  double dir_sq = 1.0, mass = 1.0, fp = 1.0;
  std::string profile = "gaussian";
  double eps = 0.2;
  double sigma = 1.0;
  double h = 0.01;
  double L = 30.0;
};

/// "log:lo:hi:n", "lin:lo:hi:n" or a comma-separated list.
std::vector<double> parse_a_grid(const std::string& spec);

/// "auto" maps to nullopt.
std::optional<double> parse_coupling(const std::string& text);

Format parse_format(const std::string& text);

bool writes_json(Format f);
bool writes_csv(Format f);

/// Output directory default when --out is absent.
std::string default_out_dir();

}  // namespace kirchhoff::cli
