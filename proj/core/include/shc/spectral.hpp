#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shc {

/// Bounded open interval (a, b): |Omega| = b - a and |dOmega| = 2.
class IntervalDomain {
 public:
  /// Throws DomainError unless a < b (both finite).
  IntervalDomain(double a, double b);

  double lower() const noexcept { return a_; }
  double upper() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  double volume() const noexcept { return length(); }
  static constexpr double boundary_measure() noexcept { return 2.0; }

 private:
  double a_;
  double b_;
};

/// One Dirichlet eigenvalue with the squared mass (int_Omega psi_n)^2 of its
/// eigenfunction.
struct EigenPair {
  double lambda;
  double mass_sq;
};

/// Truncated eigen data (lambda_n, m_n^2) with the declared total mass
/// |Omega| = sum_n m_n^2.
///
/// Construction checks 0 < lambda_1 < lambda_2 <= ..., m_n^2 >= 0 and that
/// partial sums of m_n^2 never exceed the declared mass (up to a relative
/// 1e-12 rounding slack). Violations throw ValidationError.
class EigenSystem {
 public:
  EigenSystem(std::vector<EigenPair> pairs, double total_mass);

  const std::vector<EigenPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  double total_mass() const noexcept { return total_mass_; }
  double lambda_max() const { return pairs_.back().lambda; }
  double lambda_min() const { return pairs_.front().lambda; }
  /// sum of all stored m_n^2.
  double captured_mass() const noexcept { return captured_mass_; }
  /// |Omega| - captured_mass(), clamped at 0.
  double missing_mass() const noexcept;

 private:
  std::vector<EigenPair> pairs_;
  double total_mass_;
  double captured_mass_ = 0.0;
};

/// Brownian (alpha = 2, generator Laplacian) eigenpairs on (a, b), L = b - a:
/// lambda_n = (n pi / L)^2, m_n^2 = 8L / (n pi)^2 for odd n and 0 for even n.
EigenSystem bm_interval_eigensystem(const IntervalDomain& domain, std::size_t n);

/// Eigen-table text format: one "lambda m_sq" pair per line in ascending
/// lambda, '#' comments, and a header line "#mass <value>" declaring |Omega|.
EigenSystem read_eigen_table(std::istream& in);
EigenSystem read_eigen_table_file(const std::string& path);
void write_eigen_table(std::ostream& out, const EigenSystem& eig);

struct SeriesValue {
  double value = 0.0;
  /// Certified bound on the omitted tail: w(lambda_last) * missing mass.
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
};

/// Stopping rule for weighted_series.
struct SeriesTolerance {
  double absolute = 0.0;
  double relative = 0.0;
};

/// sum_n w(lambda_n) m_n^2 for a weight w that is nonincreasing with
/// 0 < w <= 1, together with the tail certificate
///   tail <= w(lambda_last) * (|Omega| - sum_{n <= last} m_n^2).
///
/// Without a tolerance every stored term is summed. With one, summation
/// stops at the first term where the certificate is within
/// max(absolute, relative * partial sum); if the stored terms run out first,
/// TruncationError is thrown. Terms with m_n^2 = 0 skip the weight call.
SeriesValue weighted_series(const EigenSystem& eig,
                            const std::function<double(double)>& w,
                            std::optional<SeriesTolerance> tolerance = std::nullopt);

}  // namespace shc
