#include "braidcode/efficiency.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "braidcode/errors.hpp"

namespace braidcode {

CostModel::CostModel(double exponent) : exponent_(exponent) {
  if (!std::isfinite(exponent) || exponent <= 0.0) {
    throw ValidationError("cost exponent must be positive, got " + std::to_string(exponent));
  }
}

double CostModel::cost(int alphabet_size) const {
  return std::pow(static_cast<double>(alphabet_size), exponent_);
}

double gain(int alphabet_size) {
  if (alphabet_size < 2) {
    throw ValidationError("gain needs an alphabet of at least 2 symbols, got " +
                          std::to_string(alphabet_size));
  }
  return std::log2(static_cast<double>(alphabet_size));
}

double ratio(int alphabet_size, const CostModel& model) {
  return model.cost(alphabet_size) / gain(alphabet_size);
}

namespace {

struct Best {
  double value = std::numeric_limits<double>::infinity();
  int n = std::numeric_limits<int>::max();
};

bool better(const Best& a, const Best& b) {
  return a.value < b.value || (a.value == b.value && a.n < b.n);
}

}  // namespace

int argmin_integer(const CostModel& model, int max_alphabet, Execution exec) {
  if (max_alphabet < 2) throw ValidationError("max alphabet size must be at least 2");
  Best best;
  if (exec == Execution::Parallel) {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(static) nowait
      for (int n = 2; n <= max_alphabet; ++n) {
        const Best here{ratio(n, model), n};
        if (better(here, local)) local = here;
      }
#pragma omp critical(braidcode_argmin)
      if (better(local, best)) best = local;
    }
  } else {
    for (int n = 2; n <= max_alphabet; ++n) {
      const Best here{ratio(n, model), n};
      if (better(here, best)) best = here;
    }
  }
  return best.n;
}

EfficiencyCurve curve(const CostModel& model, int min_alphabet, int max_alphabet) {
  if (min_alphabet < 2 || min_alphabet > max_alphabet) {
    throw ValidationError("curve range must satisfy 2 <= min <= max");
  }
  EfficiencyCurve rows;
  rows.reserve(static_cast<std::size_t>(max_alphabet - min_alphabet + 1));
  for (int n = min_alphabet; n <= max_alphabet; ++n) {
    const double c = model.cost(n);
    const double g = gain(n);
    rows.push_back({n, c, g, c / g});
  }
  return rows;
}

}  // namespace braidcode
