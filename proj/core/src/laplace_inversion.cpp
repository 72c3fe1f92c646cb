#include "shc/laplace_inversion.hpp"

#include "shc/errors.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace shc {
namespace {

MpReal factorial(int n) {
  MpReal f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<MpReal> compute_stehfest_weights(int order) {
  const int half = order / 2;
  std::vector<MpReal> weights(order + 1);
  for (int k = 1; k <= order; ++k) {
    MpReal v = 0;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      MpReal num = boost::multiprecision::pow(MpReal(j), half) *
                   factorial(2 * j);
      MpReal den = factorial(half - j) * factorial(j) * factorial(j - 1) *
                   factorial(k - j) * factorial(2 * j - k);
      v += num / den;
    }
    weights[k] = ((k + half) % 2 == 0) ? v : MpReal(-v);
  }
  return weights;
}

const std::vector<MpReal>& stehfest_weights(int order) {
  static std::mutex mutex;
  static std::map<int, std::vector<MpReal>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, compute_stehfest_weights(order)).first;
  }
  return it->second;
}

}  // namespace

TransformFunction::TransformFunction(Evaluator f, double s_min, double s_max)
    : f_(std::move(f)), s_min_(s_min), s_max_(s_max) {
  if (!f_) throw DomainError("TransformFunction: empty evaluator");
  if (!(s_min_ < s_max_)) {
    throw DomainError("TransformFunction: empty domain");
  }
}

TransformFunction TransformFunction::from_double(
    std::function<double(double)> f, double s_min, double s_max) {
  return TransformFunction(
      [f = std::move(f)](const MpReal& s) {
        return MpReal(f(static_cast<double>(s)));
      },
      s_min, s_max);
}

MpReal TransformFunction::operator()(const MpReal& s) const {
  if (!(s > s_min_ && s < s_max_)) {
    throw DomainError("TransformFunction: s = " +
                      std::to_string(static_cast<double>(s)) +
                      " outside declared domain");
  }
  MpReal value = f_(s);
  if (!boost::multiprecision::isfinite(value)) {
    throw NumericalError("TransformFunction: non-finite value at s = " +
                         std::to_string(static_cast<double>(s)));
  }
  return value;
}

double TransformFunction::operator()(double s) const {
  return static_cast<double>((*this)(MpReal(s)));
}

double stehfest(const TransformFunction& F, double t, int order) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("stehfest: t must be positive and finite");
  }
  if (order < 2 || order % 2 != 0) {
    throw DomainError("stehfest: order must be a positive even integer");
  }
  const auto& weights = stehfest_weights(order);
  const MpReal scale = boost::multiprecision::log(MpReal(2)) / MpReal(t);
  MpReal acc = 0;
  for (int k = 1; k <= order; ++k) acc += weights[k] * F(scale * k);
  return static_cast<double>(acc * scale);
}

InversionResult laplace_invert(const TransformFunction& F, double t,
                               const InversionOptions& options) {
  if (options.initial_order < 2 || options.initial_order % 2 != 0 ||
      options.max_order < options.initial_order) {
    throw DomainError("laplace_invert: invalid order range");
  }
  if (!(options.tolerance > 0.0)) {
    throw DomainError("laplace_invert: tolerance must be positive");
  }
  int order = options.initial_order;
  double previous = stehfest(F, t, order);
  double discrepancy = std::numeric_limits<double>::infinity();
  while (order * 2 <= options.max_order) {
    order *= 2;
    const double current = stehfest(F, t, order);
    discrepancy = std::fabs(current - previous);
    if (discrepancy <= options.tolerance) {
      return {current, order, discrepancy};
    }
    previous = current;
  }
  char message[160];
  std::snprintf(message, sizeof message,
                "laplace_invert: orders %d and %d disagree by %.3g at t = %.6g", order / 2,
                order, discrepancy, t);
  throw IllConditionedError(message);
}

}  // namespace shc
