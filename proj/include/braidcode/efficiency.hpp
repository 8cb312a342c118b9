#pragma once

#include <vector>

#include "braidcode/execution.hpp"

namespace braidcode {

/// Power-law cost f1(N) = N^exponent, exponent > 0.
class CostModel {
 public:
  /// Throws ValidationError unless exponent is finite and positive.
  explicit CostModel(double exponent);

  double exponent() const { return exponent_; }
  double cost(int alphabet_size) const;

 private:
  double exponent_;
};

/// Information gain per symbol, log2(N). Throws ValidationError for N < 2.
double gain(int alphabet_size);

/// Cost per unit of gain, N^i / log2(N).
double ratio(int alphabet_size, const CostModel& model);

/// N in [2, max_alphabet] minimizing ratio; ties go to the smaller N.
int argmin_integer(const CostModel& model, int max_alphabet,
                   Execution exec = Execution::Parallel);

struct EfficiencyRow {
  int alphabet_size;
  double cost;
  double gain;
  double ratio;
};

using EfficiencyCurve = std::vector<EfficiencyRow>;

EfficiencyCurve curve(const CostModel& model, int min_alphabet, int max_alphabet);

}  // namespace braidcode
