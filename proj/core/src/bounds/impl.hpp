#pragma once

#include <string>

#include "solitonlab/bounds/bound_function.hpp"

namespace solitonlab::bounds {

struct BoundFunction::Impl {
  virtual ~Impl() = default;
  virtual BoundKind kind() const = 0;
  virtual std::string describe() const = 0;
  virtual double value(double r) const = 0;
  virtual double derivative(double r) const = 0;

  ConditionVerdicts verdicts;
};

std::string format_number(double v);

}  // namespace solitonlab::bounds
