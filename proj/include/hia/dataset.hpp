#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hia/space.hpp"

namespace hia {

/// One evaluated configuration.
struct Record {
  ConfigInstance instance;
  double performance = 0.0;
};

/// Immutable dataset of evaluated configuration instances. Construction
/// validates every record against the space, computes the observed ranges,
/// and caches a normalized feature column per hyperparameter so the
/// quadratic neighbor scans stay cheap. All accessors are const; instances
/// are safe for unrestricted concurrent use.
class HiaDataset {
public:
  HiaDataset(ConfigSpace space, std::vector<Record> records);

  const ConfigSpace& space() const { return space_; }
  std::span<const Record> records() const { return records_; }
  const Record& record(std::size_t i) const { return records_[i]; }
  std::size_t size() const { return records_.size(); }
  const ObservedRanges& ranges() const { return ranges_; }

  /// True when every hyperparameter is active in every record. Engine runs
  /// require this; datasets with dependent hyperparameters go through the
  /// conditional workflow first.
  bool fully_active() const { return fully_active_; }

  /// Name of some hyperparameter with an inactive value, for diagnostics.
  const std::string& first_inactive_name() const;

  /// diff between records i and j on hyperparameter k, from the cached
  /// feature columns. Throws DataError on inactive operands.
  double record_diff(std::size_t i, std::size_t j, std::size_t k) const;

  /// Distance between records i and j over their (identical) active sets.
  /// Throws DataError("incomparable instances") when the sets differ.
  double record_distance(std::size_t i, std::size_t j) const;

private:
  bool active(std::size_t i, std::size_t k) const {
    return active_[i * space_.size() + k] != 0;
  }
  double feature(std::size_t i, std::size_t k) const {
    return features_[i * space_.size() + k];
  }

  ConfigSpace space_;
  std::vector<Record> records_;
  ObservedRanges ranges_;
  // Row-major n x K: numeric values normalized by the observed range
  // (0 when degenerate), categorical values as category indices.
  std::vector<double> features_;
  std::vector<unsigned char> active_;
  bool fully_active_ = true;
  std::size_t first_inactive_hp_ = 0;
};

} // namespace hia
