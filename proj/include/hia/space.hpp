#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hia/value.hpp"

namespace hia {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Activation condition: the hyperparameter exists only when the named
/// parent takes one of the listed values.
struct ParentLink {
  std::string name;
  std::vector<Value> when;
};

struct HyperparameterDef {
  std::string name;
  Kind kind = Kind::NumericContinuous;
  Interval bounds;                      // numeric kinds
  std::vector<std::string> categories;  // categorical kind
  std::optional<Value> default_value;
  std::optional<ParentLink> parent;

  bool is_numeric() const { return kind != Kind::Categorical; }

  /// True when an active `value` is admissible for this definition.
  bool in_domain(const Value& value) const;
};

/// Ordered collection of hyperparameter definitions. A thin holder; use
/// validate_space() to check the structural invariants.
class ConfigSpace {
public:
  ConfigSpace() = default;
  explicit ConfigSpace(std::vector<HyperparameterDef> defs)
      : defs_(std::move(defs)) {}

  std::span<const HyperparameterDef> defs() const { return defs_; }
  const HyperparameterDef& def(std::size_t k) const { return defs_[k]; }
  std::size_t size() const { return defs_.size(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Index of the named hyperparameter, or npos.
  std::size_t index_of(const std::string& name) const;

private:
  std::vector<HyperparameterDef> defs_;
};

/// One configuration: a value per definition, in space order.
struct ConfigInstance {
  std::vector<Value> values;
};

/// Componentwise min/max observed in a dataset. Entries are absent for
/// categorical hyperparameters and for numeric ones with no active
/// observation.
struct ObservedRanges {
  std::vector<std::optional<Interval>> numeric;
  Interval performance;

  /// Observed width for hyperparameter k; 0 when absent or degenerate.
  double width(std::size_t k) const {
    return numeric[k] ? numeric[k]->width() : 0.0;
  }
};

/// Structural invariant check. Violations are data, not failures; an empty
/// result means the space is valid.
std::vector<std::string> validate_space(const ConfigSpace& space);

/// Throwing wrapper for call sites that require a valid space.
void require_valid_space(const ConfigSpace& space);

/// True when the parent condition of def k is met within `instance`
/// (parentless definitions are always active). Continuous parent values
/// match activation values within 1e-12; all other kinds match exactly.
bool parent_condition_met(const ConfigSpace& space,
                          const ConfigInstance& instance, std::size_t k);

/// Per-instance invariant check against the space; one message per
/// violation, empty when the instance is valid.
std::vector<std::string> validate_instance(const ConfigSpace& space,
                                           const ConfigInstance& instance);

/// Normalized per-hyperparameter dissimilarity: range-scaled absolute
/// difference for numeric kinds (0 when the observed range is degenerate
/// or unknown), 0/1 equality for categorical. Result is in [0, 1] and
/// symmetric. Throws DataError when either operand is inactive.
double diff_value(const HyperparameterDef& def, const Value& a,
                  const Value& b, const std::optional<Interval>& observed);

/// Euclidean distance over the per-hyperparameter diffs of all active
/// hyperparameters. Both instances must have identical active sets;
/// otherwise throws DataError("incomparable instances").
double distance(const ConfigSpace& space, const ConfigInstance& a,
                const ConfigInstance& b, const ObservedRanges& ranges);

} // namespace hia
