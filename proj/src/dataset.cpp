#include "qboost/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qboost/rng.hpp"

namespace qboost {
namespace {

bool parse_double(const std::string& cell, double& out) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

bool parse_index(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = first + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool has_both_classes(const std::vector<int>& labels) {
  bool zero = false, one = false;
  for (int y : labels) (y == 0 ? zero : one) = true;
  return zero && one;
}

}  // namespace

void Dataset::validate() const {
  if (n < 2) throw std::invalid_argument("dataset: need at least 2 samples, got " + std::to_string(n));
  if (dim == 0) throw std::invalid_argument("dataset: zero feature columns");
  if (features.size() != n * dim || labels.size() != n)
    throw std::invalid_argument("dataset: inconsistent storage sizes");
  for (double v : features)
    if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite feature value");
  for (int y : labels)
    if (y != 0 && y != 1) throw std::invalid_argument("dataset: label outside {0,1}");
  if (!has_both_classes(labels))
    throw std::invalid_argument("dataset: only one class present; AUC is undefined");
}

Dataset load_csv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_csv: cannot open file: " + path);

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_line(line));
  }
  if (rows.empty()) throw std::runtime_error("load_csv: empty file: " + path);

  const std::size_t cols = rows[0].size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != cols)
      throw std::runtime_error("load_csv: row " + std::to_string(r + 1) + " has " +
                               std::to_string(rows[r].size()) + " cells, expected " +
                               std::to_string(cols));
  if (cols < 2) throw std::runtime_error("load_csv: need at least 2 columns (features + label)");

  // Header iff any first-row cell is non-numeric.
  double ignored;
  bool header = false;
  for (const auto& cell : rows[0])
    if (!parse_double(cell, ignored)) { header = true; break; }

  std::size_t label_idx = cols - 1;
  if (!label_column.empty()) {
    std::size_t idx;
    if (parse_index(label_column, idx)) {
      if (idx >= cols)
        throw std::runtime_error("load_csv: label column index " + label_column +
                                 " out of range (file has " + std::to_string(cols) + " columns)");
      label_idx = idx;
    } else {
      if (!header)
        throw std::runtime_error("load_csv: label column named '" + label_column +
                                 "' requested but the file has no header row");
      auto it = std::find(rows[0].begin(), rows[0].end(), label_column);
      if (it == rows[0].end())
        throw std::runtime_error("load_csv: no column named '" + label_column + "' in header");
      label_idx = static_cast<std::size_t>(it - rows[0].begin());
    }
  }

  Dataset ds;
  ds.dim = cols - 1;
  const std::size_t first_data = header ? 1 : 0;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double v;
      if (!parse_double(rows[r][c], v))
        throw std::runtime_error("load_csv: non-numeric cell '" + rows[r][c] + "' at row " +
                                 std::to_string(r + 1) + ", column " + std::to_string(c + 1));
      if (c == label_idx) {
        if (v != 0.0 && v != 1.0)
          throw std::runtime_error("load_csv: label '" + rows[r][c] + "' at row " +
                                   std::to_string(r + 1) + " is not 0 or 1");
        ds.labels.push_back(static_cast<int>(v));
      } else {
        ds.features.push_back(v);
      }
    }
  }
  ds.n = ds.labels.size();
  ds.validate();
  return ds;
}

void save_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_csv: cannot open file for writing: " + path);
  for (std::size_t c = 0; c < ds.dim; ++c) out << 'f' << c << ',';
  out << "label\n";
  char buf[40];
  for (std::size_t i = 0; i < ds.n; ++i) {
    for (std::size_t c = 0; c < ds.dim; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", ds.features[i * ds.dim + c]);
      out << buf << ',';
    }
    out << ds.labels[i] << '\n';
  }
  if (!out) throw std::runtime_error("save_csv: write failed: " + path);
}

Dataset subset(const Dataset& ds, const std::vector<std::size_t>& indices) {
  Dataset out;
  out.dim = ds.dim;
  out.n = indices.size();
  out.features.reserve(out.n * out.dim);
  out.labels.reserve(out.n);
  for (std::size_t i : indices) {
    auto r = ds.row(i);
    out.features.insert(out.features.end(), r.begin(), r.end());
    out.labels.push_back(ds.labels[i]);
  }
  return out;
}

SplitPair split(const Dataset& ds, double valid_fraction, std::uint64_t seed) {
  ds.validate();
  if (!(valid_fraction > 0.0 && valid_fraction < 1.0))
    throw std::invalid_argument("split: valid_fraction must be in (0,1)");
  const std::size_t n_valid = static_cast<std::size_t>(
      std::floor(valid_fraction * static_cast<double>(ds.n)));
  const std::size_t n_train = ds.n - n_valid;
  if (n_valid == 0 || n_train == 0)
    throw std::invalid_argument("split: fraction " + std::to_string(valid_fraction) +
                                " leaves an empty side for n=" + std::to_string(ds.n));

  SeededRng rng(seed);
  std::vector<std::size_t> perm(ds.n);
  const int max_retries = 100;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = ds.n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_index(i + 1)]);

    SplitPair sp;
    sp.seed = seed;
    sp.valid_indices.assign(perm.begin(), perm.begin() + n_valid);
    sp.train_indices.assign(perm.begin() + n_valid, perm.end());
    std::sort(sp.valid_indices.begin(), sp.valid_indices.end());
    std::sort(sp.train_indices.begin(), sp.train_indices.end());
    sp.train = subset(ds, sp.train_indices);
    sp.valid = subset(ds, sp.valid_indices);
    if (has_both_classes(sp.train.labels) && has_both_classes(sp.valid.labels)) return sp;
  }
  throw std::runtime_error("split: could not find a split with both classes on both sides after " +
                           std::to_string(max_retries) + " attempts");
}

}  // namespace qboost
