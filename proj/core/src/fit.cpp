#include "shc/fit.hpp"

#include "shc/errors.hpp"

#include <cmath>
#include <vector>

namespace shc {

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("fit_loglog: size mismatch");
  if (x.size() < 2) throw DomainError("fit_loglog: need at least two points");
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw DomainError("fit_loglog: abscissae and ordinates must be positive");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("fit_loglog: abscissae are all equal");

  LogLogFit fit;
  fit.points = n;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double sse = std::max(0.0, syy - fit.slope * sxy);
  fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  fit.low_confidence = n < 3;
  fit.slope_std_error =
      n > 2 ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
  return fit;
}

}  // namespace shc
