#pragma once

#include <string>
#include <variant>

#include "hia/errors.hpp"

namespace hia {

/// How a hyperparameter's domain is interpreted.
enum class Kind {
  NumericContinuous,
  NumericDiscrete,
  Categorical,
};

std::string to_string(Kind kind);

/// One hyperparameter value inside a configuration instance: a number, a
/// category label, or Inactive for a hyperparameter whose parent condition
/// is not met.
class Value {
public:
  Value() : v_(Inactive{}) {}

  static Value inactive() { return Value(); }
  static Value number(double x) { return Value(x); }
  static Value category(std::string label) { return Value(std::move(label)); }

  bool is_inactive() const { return std::holds_alternative<Inactive>(v_); }
  bool is_number() const { return std::holds_alternative<double>(v_); }
  bool is_category() const { return std::holds_alternative<std::string>(v_); }

  double as_number() const {
    if (!is_number()) throw DataError("value is not numeric");
    return std::get<double>(v_);
  }

  const std::string& as_category() const {
    if (!is_category()) throw DataError("value is not categorical");
    return std::get<std::string>(v_);
  }

  bool operator==(const Value& other) const { return v_ == other.v_; }
  bool operator!=(const Value& other) const { return !(*this == other); }

  /// Display form: the number, the label, or "<inactive>".
  std::string to_string() const;

private:
  struct Inactive {
    bool operator==(const Inactive&) const { return true; }
  };

  explicit Value(double x) : v_(x) {}
  explicit Value(std::string s) : v_(std::move(s)) {}

  std::variant<Inactive, double, std::string> v_;
};

} // namespace hia
