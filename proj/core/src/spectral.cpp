#include "shc/spectral.hpp"

#include "shc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace shc {

IntervalDomain::IntervalDomain(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("IntervalDomain: need finite a < b");
  }
}

EigenSystem::EigenSystem(std::vector<EigenPair> pairs, double total_mass)
    : pairs_(std::move(pairs)), total_mass_(total_mass) {
  if (pairs_.empty()) throw ValidationError("EigenSystem: no eigenpairs");
  if (!(total_mass_ > 0.0) || !std::isfinite(total_mass_)) {
    throw ValidationError("EigenSystem: declared mass must be positive");
  }
  const double slack = 1e-12 * total_mass_;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
      throw ValidationError("EigenSystem: eigenvalues must be positive");
    }
    if (!(p.mass_sq >= 0.0) || !std::isfinite(p.mass_sq)) {
      throw ValidationError("EigenSystem: masses must be nonnegative");
    }
    if (i == 1 && !(p.lambda > pairs_[0].lambda)) {
      throw ValidationError("EigenSystem: principal eigenvalue must be simple");
    }
    if (i > 1 && p.lambda < pairs_[i - 1].lambda) {
      throw ValidationError("EigenSystem: eigenvalues must be ascending");
    }
    captured_mass_ += p.mass_sq;
    if (captured_mass_ > total_mass_ + slack) {
      throw ValidationError("EigenSystem: partial mass exceeds declared mass");
    }
  }
}

double EigenSystem::missing_mass() const noexcept {
  return std::max(0.0, total_mass_ - captured_mass_);
}

EigenSystem bm_interval_eigensystem(const IntervalDomain& domain, std::size_t n) {
  if (n == 0) throw DomainError("bm_interval_eigensystem: need N >= 1");
  const double length = domain.length();
  const double pi = std::numbers::pi;
  std::vector<EigenPair> pairs;
  pairs.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double npi = static_cast<double>(k) * pi;
    const double lambda = (npi / length) * (npi / length);
    const double mass = (k % 2 == 1) ? 8.0 * length / (npi * npi) : 0.0;
    pairs.push_back({lambda, mass});
  }
  return EigenSystem(std::move(pairs), length);
}

EigenSystem read_eigen_table(std::istream& in) {
  std::vector<EigenPair> pairs;
  std::optional<double> mass;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream header(line.substr(first + 1));
      std::string key;
      header >> key;
      if (key == "mass") {
        double value = 0.0;
        if (!(header >> value)) {
          throw ValidationError("eigen table line " + std::to_string(line_no) +
                                ": malformed #mass header");
        }
        mass = value;
      }
      continue;
    }
    std::istringstream row(line.substr(0, line.find('#')));
    EigenPair p{};
    std::string extra;
    if (!(row >> p.lambda >> p.mass_sq) || (row >> extra)) {
      throw ValidationError("eigen table line " + std::to_string(line_no) +
                            ": expected 'lambda m_sq'");
    }
    pairs.push_back(p);
  }
  if (!mass) throw ValidationError("eigen table: missing '#mass <value>' header");
  return EigenSystem(std::move(pairs), *mass);
}

EigenSystem read_eigen_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open eigen table '" + path + "'");
  return read_eigen_table(in);
}

void write_eigen_table(std::ostream& out, const EigenSystem& eig) {
  out << "#mass " << std::setprecision(17) << eig.total_mass() << '\n';
  for (const auto& p : eig.pairs()) {
    out << std::setprecision(17) << p.lambda << ' ' << p.mass_sq << '\n';
  }
}

SeriesValue weighted_series(const EigenSystem& eig,
                            const std::function<double(double)>& w,
                            std::optional<SeriesTolerance> tolerance) {
  SeriesValue result;
  double captured = 0.0;
  double last_weight = 1.0;
  const auto& pairs = eig.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    captured += p.mass_sq;
    if (p.mass_sq > 0.0 || i == 0) {
      last_weight = w(p.lambda);
      if (!(last_weight >= 0.0 && last_weight <= 1.0 + 1e-12)) {
        throw NumericalError("weighted_series: weight outside [0, 1] at lambda = " +
                             std::to_string(p.lambda));
      }
      result.value += last_weight * p.mass_sq;
    }
    result.terms_used = i + 1;
    const double missing = std::max(0.0, eig.total_mass() - captured);
    result.tail_bound = last_weight * missing;
    if (tolerance) {
      const double target = std::max(tolerance->absolute,
                                     tolerance->relative * result.value);
      if (result.tail_bound <= target) return result;
    }
  }
  if (tolerance) {
    std::ostringstream os;
    os << "weighted_series: tail bound " << result.tail_bound
       << " above tolerance after " << pairs.size() << " terms";
    throw TruncationError(os.str());
  }
  return result;
}

}  // namespace shc
