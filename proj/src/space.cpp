#include "hia/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hia/errors.hpp"

namespace hia {

namespace {

constexpr double kContinuousMatchTol = 1e-12;

bool values_match(Kind parent_kind, const Value& lhs, const Value& rhs) {
  if (lhs.is_inactive() || rhs.is_inactive()) return lhs == rhs;
  if (parent_kind == Kind::NumericContinuous && lhs.is_number() &&
      rhs.is_number()) {
    return std::abs(lhs.as_number() - rhs.as_number()) <= kContinuousMatchTol;
  }
  return lhs == rhs;
}

} // namespace

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::NumericContinuous: return "numeric-continuous";
    case Kind::NumericDiscrete: return "numeric-discrete";
    case Kind::Categorical: return "categorical";
  }
  return "?";
}

std::string Value::to_string() const {
  if (is_inactive()) return "<inactive>";
  if (is_number()) {
    std::ostringstream out;
    out << std::get<double>(v_);
    return out.str();
  }
  return std::get<std::string>(v_);
}

bool HyperparameterDef::in_domain(const Value& value) const {
  if (value.is_inactive()) return false;
  if (is_numeric()) {
    return value.is_number() && bounds.contains(value.as_number());
  }
  if (!value.is_category()) return false;
  return std::find(categories.begin(), categories.end(),
                   value.as_category()) != categories.end();
}

std::size_t ConfigSpace::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < defs_.size(); ++k) {
    if (defs_[k].name == name) return k;
  }
  return npos;
}

std::vector<std::string> validate_space(const ConfigSpace& space) {
  std::vector<std::string> violations;
  std::set<std::string> seen;

  for (const auto& def : space.defs()) {
    if (!seen.insert(def.name).second) {
      violations.push_back("duplicate name " + def.name);
    }
    if (def.name.empty()) {
      violations.push_back("empty hyperparameter name");
    }
    if (def.is_numeric()) {
      if (def.bounds.lo > def.bounds.hi) {
        violations.push_back("inverted domain for " + def.name);
      }
      if (!std::isfinite(def.bounds.lo) || !std::isfinite(def.bounds.hi)) {
        violations.push_back("non-finite domain for " + def.name);
      }
    } else {
      if (def.categories.empty()) {
        violations.push_back("empty categorical domain for " + def.name);
      }
      std::set<std::string> cats(def.categories.begin(),
                                 def.categories.end());
      if (cats.size() != def.categories.size()) {
        violations.push_back("duplicate category for " + def.name);
      }
    }
    if (def.default_value && !def.in_domain(*def.default_value)) {
      violations.push_back("default out of domain for " + def.name);
    }
    if (def.parent) {
      const std::size_t pidx = space.index_of(def.parent->name);
      if (pidx == ConfigSpace::npos) {
        violations.push_back("unknown parent " + def.parent->name + " for " +
                             def.name);
      } else if (space.def(pidx).name == def.name) {
        violations.push_back("self-referential parent for " + def.name);
      } else {
        if (def.parent->when.empty()) {
          violations.push_back("empty activation set for " + def.name);
        }
        for (const auto& v : def.parent->when) {
          if (!space.def(pidx).in_domain(v)) {
            violations.push_back("activation value " + v.to_string() +
                                 " outside domain of parent " +
                                 def.parent->name + " for " + def.name);
          }
        }
      }
    }
  }

  // Parent edges must be acyclic. Walk up from every node; a path longer
  // than the space has a cycle.
  for (std::size_t k = 0; k < space.size(); ++k) {
    std::size_t cur = k;
    std::size_t steps = 0;
    while (space.def(cur).parent) {
      const std::size_t pidx = space.index_of(space.def(cur).parent->name);
      if (pidx == ConfigSpace::npos || pidx == cur) break;
      cur = pidx;
      if (++steps > space.size()) {
        violations.push_back("dependency cycle involving " +
                             space.def(k).name);
        break;
      }
    }
  }

  return violations;
}

void require_valid_space(const ConfigSpace& space) {
  const auto violations = validate_space(space);
  if (violations.empty()) return;
  std::string msg = "invalid configuration space:";
  for (const auto& v : violations) msg += "\n  - " + v;
  throw ValidationError(msg);
}

bool parent_condition_met(const ConfigSpace& space,
                          const ConfigInstance& instance, std::size_t k) {
  const auto& def = space.def(k);
  if (!def.parent) return true;
  const std::size_t pidx = space.index_of(def.parent->name);
  if (pidx == ConfigSpace::npos) return false;
  const Value& parent_value = instance.values[pidx];
  if (parent_value.is_inactive()) return false;
  const Kind parent_kind = space.def(pidx).kind;
  return std::any_of(def.parent->when.begin(), def.parent->when.end(),
                     [&](const Value& w) {
                       return values_match(parent_kind, parent_value, w);
                     });
}

std::vector<std::string> validate_instance(const ConfigSpace& space,
                                           const ConfigInstance& instance) {
  std::vector<std::string> violations;
  if (instance.values.size() != space.size()) {
    violations.push_back("instance has " +
                         std::to_string(instance.values.size()) +
                         " values, space has " + std::to_string(space.size()));
    return violations;
  }
  for (std::size_t k = 0; k < space.size(); ++k) {
    const auto& def = space.def(k);
    const Value& value = instance.values[k];
    const bool active_expected = parent_condition_met(space, instance, k);
    if (value.is_inactive()) {
      if (active_expected) {
        violations.push_back("inactive value for " + def.name +
                             " whose parent condition is met");
      }
      continue;
    }
    if (!active_expected) {
      violations.push_back("active value for " + def.name +
                           " whose parent condition is not met");
      continue;
    }
    if (!def.in_domain(value)) {
      violations.push_back("value " + value.to_string() +
                           " outside domain of " + def.name);
    }
  }
  return violations;
}

double diff_value(const HyperparameterDef& def, const Value& a,
                  const Value& b, const std::optional<Interval>& observed) {
  if (a.is_inactive() || b.is_inactive()) {
    throw DataError("inactive value in diff for " + def.name);
  }
  if (def.is_numeric()) {
    const double w = observed ? observed->width() : 0.0;
    if (w <= 0.0) return 0.0;  // constant column carries no information
    return std::min(1.0, std::abs(a.as_number() - b.as_number()) / w);
  }
  return a.as_category() == b.as_category() ? 0.0 : 1.0;
}

double distance(const ConfigSpace& space, const ConfigInstance& a,
                const ConfigInstance& b, const ObservedRanges& ranges) {
  double sum = 0.0;
  for (std::size_t k = 0; k < space.size(); ++k) {
    const bool a_active = !a.values[k].is_inactive();
    const bool b_active = !b.values[k].is_inactive();
    if (a_active != b_active) {
      throw DataError("incomparable instances: active sets differ at " +
                      space.def(k).name);
    }
    if (!a_active) continue;
    const double d =
        diff_value(space.def(k), a.values[k], b.values[k], ranges.numeric[k]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

} // namespace hia
