#include "shc/subordinator.hpp"

#include "shc/errors.hpp"
#include "shc/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace shc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_unit_open(double beta, const char* what) {
  if (!(beta > 0.0 && beta < 1.0)) {
    std::ostringstream os;
    os << what << " must lie in (0, 1), got " << beta;
    throw DomainError(os.str());
  }
}

}  // namespace

LaplaceExponent::LaplaceExponent(Variant v) : variant_(v) {
  std::visit(
      Overloaded{
          [this](const Stable& s) {
            require_unit_open(s.beta, "stable beta");
            index_at_zero_ = index_at_infinity_ = s.beta;
          },
          [this](const TemperedStable& s) {
            require_unit_open(s.beta, "tempered stable beta");
            if (!(s.kappa > 0.0) || !std::isfinite(s.kappa)) {
              throw DomainError("tempered stable kappa must be positive");
            }
            index_at_zero_ = 1.0;
            index_at_infinity_ = s.beta;
          },
          [this](const SumOfStables& s) {
            // a = 0 would make phi(0+) = 1, i.e. a killed subordinator.
            if (!(s.a > 0.0 && s.a < s.b && s.b <= 1.0)) {
              throw DomainError("sum of stables requires 0 < a < b <= 1");
            }
            index_at_zero_ = s.a;
            index_at_infinity_ = s.b;
          },
          [this](const Drift&) { index_at_zero_ = index_at_infinity_ = 1.0; },
      },
      variant_);
}

double LaplaceExponent::operator()(double lambda) const {
  return std::visit(
      Overloaded{
          [&](const Stable& s) { return std::pow(lambda, s.beta); },
          [&](const TemperedStable& s) {
            // (lambda + kappa)^beta - kappa^beta without cancellation:
            // kappa^beta * expm1(beta * log1p(lambda / kappa)).
            return std::pow(s.kappa, s.beta) *
                   std::expm1(s.beta * std::log1p(lambda / s.kappa));
          },
          [&](const SumOfStables& s) {
            return std::pow(lambda, s.a) + std::pow(lambda, s.b);
          },
          [&](const Drift&) { return lambda; },
      },
      variant_);
}

MpReal LaplaceExponent::operator()(const MpReal& lambda) const {
  using boost::multiprecision::pow;
  return std::visit(
      Overloaded{
          [&](const Stable& s) { return pow(lambda, MpReal(s.beta)); },
          [&](const TemperedStable& s) {
            return MpReal(pow(lambda + s.kappa, MpReal(s.beta)) -
                          pow(MpReal(s.kappa), MpReal(s.beta)));
          },
          [&](const SumOfStables& s) {
            return MpReal(pow(lambda, MpReal(s.a)) + pow(lambda, MpReal(s.b)));
          },
          [&](const Drift&) { return lambda; },
      },
      variant_);
}

std::string LaplaceExponent::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const Stable& s) { os << "stable(beta=" << s.beta << ")"; },
                 [&](const TemperedStable& s) {
                   os << "tempered_stable(beta=" << s.beta
                      << ",kappa=" << s.kappa << ")";
                 },
                 [&](const SumOfStables& s) {
                   os << "sum_of_stables(a=" << s.a << ",b=" << s.b << ")";
                 },
                 [&](const Drift&) { os << "drift"; },
             },
             variant_);
  return os.str();
}

double phi_eval(const LaplaceExponent& phi, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("phi_eval: lambda must be >= 0");
  return phi(lambda);
}

// ---------------------------------------------------------------------------

double sample_stable_subordinator_unit(double beta, Rng& rng) {
  require_unit_open(beta, "stable beta");
  const double u = std::numbers::pi * rng.uniform_open();
  const double w = rng.exponential();
  const double log_x = std::log(std::sin(beta * u)) -
                       std::log(std::sin(u)) / beta +
                       (1.0 - beta) / beta *
                           (std::log(std::sin((1.0 - beta) * u)) - std::log(w));
  return std::exp(log_x);
}

double sample_stable_subordinator_unit(double beta, std::uint64_t seed) {
  Rng rng(seed);
  return sample_stable_subordinator_unit(beta, rng);
}

double sample_increment(const LaplaceExponent& phi, double dt, Rng& rng,
                        long max_rejections) {
  if (!(dt > 0.0)) throw DomainError("sample_increment: dt must be positive");
  return std::visit(
      Overloaded{
          [&](const Stable& s) {
            return std::pow(dt, 1.0 / s.beta) *
                   sample_stable_subordinator_unit(s.beta, rng);
          },
          [&](const TemperedStable& s) {
            // Split so that every piece is accepted with probability >= 1/e.
            const double rate = std::pow(s.kappa, s.beta);
            const long pieces =
                std::max(1L, static_cast<long>(std::ceil(dt * rate)));
            const double piece_dt = dt / static_cast<double>(pieces);
            const double scale = std::pow(piece_dt, 1.0 / s.beta);
            double total = 0.0;
            for (long p = 0; p < pieces; ++p) {
              long tries = 0;
              for (;;) {
                const double x =
                    scale * sample_stable_subordinator_unit(s.beta, rng);
                if (rng.uniform_open() < std::exp(-s.kappa * x)) {
                  total += x;
                  break;
                }
                if (++tries >= max_rejections) {
                  throw NumericalError(
                      "tempered stable sampler: rejection cap exceeded");
                }
              }
            }
            return total;
          },
          [&](const SumOfStables& s) {
            const double first =
                std::pow(dt, 1.0 / s.a) *
                sample_stable_subordinator_unit(s.a, rng);
            const double second =
                s.b == 1.0 ? dt
                           : std::pow(dt, 1.0 / s.b) *
                                 sample_stable_subordinator_unit(s.b, rng);
            return first + second;
          },
          [&](const Drift&) { return dt; },
      },
      phi.variant());
}

double sample_subordinator_at(const LaplaceExponent& phi, double t, Rng& rng) {
  if (t == 0.0) return 0.0;
  return sample_increment(phi, t, rng);
}

PathSample sample_path(const LaplaceExponent& phi, double horizon,
                       double delta_u, std::uint64_t seed) {
  if (!(horizon > 0.0) || !(delta_u > 0.0)) {
    throw DomainError("sample_path: horizon and delta_u must be positive");
  }
  constexpr std::size_t kMaxSteps = 200'000'000;
  constexpr int kMaxTieRedraws = 1000;
  PathSample path;
  path.delta_u = delta_u;
  path.horizon = horizon;
  path.seed = seed;
  path.values.push_back(0.0);
  Rng rng(derive_seed(seed, stream::kPath));
  while (path.values.back() <= horizon) {
    if (path.values.size() >= kMaxSteps) {
      throw NumericalError("sample_path: step budget exhausted before horizon");
    }
    const double last = path.values.back();
    double next = last;
    for (int redraw = 0; next <= last; ++redraw) {
      if (redraw == kMaxTieRedraws) {
        throw NumericalError("sample_path: increments below floating-point resolution");
      }
      next = last + sample_increment(phi, delta_u, rng);
    }
    path.values.push_back(next);
  }
  return path;
}

InverseTimeSample inverse_at(const PathSample& path, double t) {
  if (!(t >= 0.0)) throw DomainError("inverse_at: t must be >= 0");
  if (path.values.empty() || t >= path.values.back()) {
    throw HorizonError("inverse_at: t beyond the sampled path");
  }
  const auto first_above =
      std::upper_bound(path.values.begin(), path.values.end(), t);
  const auto index = static_cast<double>(first_above - path.values.begin());
  return {t, index * path.delta_u, path.delta_u};
}

double sample_inverse_stable_exact(double beta, double t, Rng& rng) {
  require_unit_open(beta, "stable beta");
  if (!(t >= 0.0)) throw DomainError("sample_inverse_stable_exact: t must be >= 0");
  const double d1 = sample_stable_subordinator_unit(beta, rng);
  return std::pow(t / d1, beta);
}

double sample_inverse_stable_exact(double beta, double t, std::uint64_t seed) {
  Rng rng(seed);
  return sample_inverse_stable_exact(beta, t, rng);
}

// ---------------------------------------------------------------------------

double lt_inverse_time(const LaplaceExponent& phi, double a, double s) {
  if (!(a > 0.0) || !(s > 0.0)) {
    throw DomainError("lt_inverse_time: a and s must be positive");
  }
  const double p = phi(s);
  return p / (s * (p + a));
}

TransformFunction lt_inverse_time_transform(const LaplaceExponent& phi, double a) {
  if (!(a > 0.0)) throw DomainError("lt_inverse_time: a must be positive");
  return TransformFunction([phi, a](const MpReal& s) {
    const MpReal p = phi(s);
    return MpReal(p / (s * (p + a)));
  });
}

double expected_laplace(const LaplaceExponent& phi, double a, double t,
                        const InversionOptions& options) {
  if (!(a >= 0.0) || !(t > 0.0)) {
    throw DomainError("expected_laplace: need a >= 0 and t > 0");
  }
  if (a == 0.0) return 1.0;
  if (const auto* s = std::get_if<Stable>(&phi.variant())) {
    return mittag_leffler(s->beta, -a * std::pow(t, s->beta));
  }
  if (std::holds_alternative<Drift>(phi.variant())) return std::exp(-a * t);
  // The target is a probability-weighted mean in [0, 1]; inversion round-off
  // can leave values like -1e-21 where the true value underflows.
  const double v = laplace_invert(lt_inverse_time_transform(phi, a), t, options).value;
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace shc
