#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qboost {

// N labeled feature vectors in R^d with binary labels.
// Invariants: every row has exactly `dim` finite entries, every label is
// 0 or 1, N >= 2 and both classes are present (AUC is undefined otherwise).
struct Dataset {
  std::vector<double> features;  // row-major, n * dim
  std::vector<int> labels;       // entries in {0,1}
  std::size_t n = 0;
  std::size_t dim = 0;

  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * dim, dim};
  }

  // Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

struct SplitPair {
  Dataset train;
  Dataset valid;
  std::uint64_t seed = 0;
  // Source-row indices behind each side, ascending. Handy for the
  // partition checks and for re-running a single split in isolation.
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> valid_indices;
};

// Loads a comma-separated file. The first row is treated as a header iff
// any of its cells fails to parse as a number. `label_column` is either a
// 0-based column index (any string that parses as an integer) or a header
// name; empty string means "last column". Decimal point only, no
// locale-dependent parsing.
Dataset load_csv(const std::string& path, const std::string& label_column = "");

// Writes features plus a final "label" column with a header row. Feature
// values are printed with enough digits (17 significant) to reload
// bit-exactly.
void save_csv(const Dataset& ds, const std::string& path);

// Seeded split into train/valid. valid.n = floor(valid_fraction * n),
// indices drawn from a seeded uniform permutation. Both sides must end up
// with both classes; the permutation is redrawn (same stream) up to 100
// times before giving up.
SplitPair split(const Dataset& ds, double valid_fraction, std::uint64_t seed);

// Dataset restricted to the given source rows (in the given order; an
// index may repeat, which yields a multiset of rows).
Dataset subset(const Dataset& ds, const std::vector<std::size_t>& indices);

}  // namespace qboost
