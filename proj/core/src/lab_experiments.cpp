#include "shc/asymptotics.hpp"
#include "shc/errors.hpp"
#include "shc/heat_content.hpp"
#include "shc/lab.hpp"
#include "shc/special_fn.hpp"
#include "shc/stable_motion.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace shc::lab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string at_t(double t) {
  std::ostringstream s;
  s.precision(6);
  s << "t = " << t << ": ";
  return s.str();
}

// Runs body(t) and rethrows any library error with the failing t prepended,
// keeping the exception type so the exit status stays meaningful.
template <class F>
auto for_row(double t, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const IllConditionedError& e) {
    throw IllConditionedError(at_t(t) + e.what());
  } catch (const TruncationError& e) {
    throw TruncationError(at_t(t) + e.what());
  } catch (const HorizonError& e) {
    throw HorizonError(at_t(t) + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(at_t(t) + e.what());
  } catch (const DomainError& e) {
    throw DomainError(at_t(t) + e.what());
  }
}

Row make_row(double t, double computed, double reference, double error_bound,
             std::string method) {
  const double ratio = reference != 0.0 ? computed / reference : kNaN;
  return {t, computed, reference, ratio, error_bound, std::move(method)};
}

double stable_beta(const Config& c, const char* experiment) {
  const auto phi = c.exponent();
  if (!phi.is_stable()) {
    throw ValidationError(std::string(experiment) + " needs phi = stable");
  }
  if (!(c.phi_beta < 1.0)) {
    throw ValidationError(std::string(experiment) + " needs phi.beta < 1");
  }
  return c.phi_beta;
}

EigenSystem eigen_system(const Config& c) {
  if (c.eigen_table) return read_eigen_table_file(*c.eigen_table);
  if (c.alpha != 2.0) {
    throw ValidationError(
        "eigenpairs are built in only for alpha = 2; supply eigen_table otherwise");
  }
  return bm_interval_eigensystem(IntervalDomain(c.domain_a, c.domain_b), c.truncation);
}

SeriesOptions series_options(const Config& c) {
  SeriesOptions o;
  o.tolerance = c.tolerance;
  return o;
}

void fit_rows(Summary& summary, const std::vector<double>& x,
              const std::vector<double>& y) {
  if (x.size() < 2) return;
  summary.fit = fit_loglog(x, y);
}

ExperimentResult large_time(const Config& c) {
  if (c.time_change != "inverse") {
    throw ValidationError("large_time needs time_change = inverse");
  }
  const auto eig = eigen_system(c);
  const auto phi = c.exponent();
  const auto options = series_options(c);
  ExperimentResult r;
  std::vector<double> ts, qs;
  for (double t : c.t_grid) {
    r.rows.push_back(for_row(t, [&] {
      const auto q = q_time_changed(eig, phi, t, options);
      return make_row(t, q.value, large_time_asymptote(eig, phi, t), q.error_bound,
                      std::string(to_string(q.method)));
    }));
    ts.push_back(t);
    qs.push_back(r.rows.back().computed);
  }
  fit_rows(r.summary, ts, qs);
  r.summary.expected_slope = -phi.index_at_zero();
  r.summary.metrics["large_time_constant"] =
      large_time_constant(eig, phi.index_at_zero()).value;
  return r;
}

ExperimentResult subordinate_rate(const Config& c) {
  const auto eig = eigen_system(c);
  const auto phi = c.exponent();
  const auto options = series_options(c);
  const double rate = -subordinate_log_rate(phi, eig.lambda_min());
  ExperimentResult r;
  for (double t : c.t_grid) {
    r.rows.push_back(for_row(t, [&] {
      const auto q = q_subordinate(eig, phi, t, options);
      if (!(q.value > 0.0)) throw NumericalError("heat content underflowed to zero");
      return make_row(t, -std::log(q.value) / t, rate, q.error_bound / (q.value * t),
                      std::string(to_string(q.method)));
    }));
  }
  r.summary.metrics["phi_lambda1"] = rate;
  r.summary.metrics["final_relative_error"] = std::abs(r.rows.back().ratio - 1.0);
  return r;
}

ExperimentResult small_time_mc(const Config& c) {
  if (c.time_change != "inverse") {
    throw ValidationError("small_time_mc needs time_change = inverse");
  }
  const auto phi = c.exponent();
  const IntervalDomain domain(c.domain_a, c.domain_b);
  const auto tag = RegimeTag::of(c.alpha);
  const auto geometry = GeometryInput::interval(domain);
  std::optional<double> sup;
  if (tag.regime == Regime::supercritical) sup = sup_constant_exact(c.alpha);
  const double beta = phi.index_at_infinity();

  MonteCarloOptions mc;
  mc.n_paths = c.n_paths;
  mc.dt = c.dt;
  mc.steps_per_path = c.n_steps;
  mc.seed = c.seed;
  mc.workers = c.workers;
  mc.path_delta_u = c.path_delta_u;

  ExperimentResult r;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < c.t_grid.size(); ++i) {
    const double t = c.t_grid[i];
    auto options = mc;
    options.seed = derive_seed(c.seed, stream::kReplica, i);
    r.rows.push_back(for_row(t, [&] {
      const auto q =
          q_monte_carlo(c.alpha, domain, TimeChange::inverse(phi), t, options);
      return make_row(t, domain.volume() - q.value,
                      small_time_asymptote(c.alpha, phi, geometry, t, sup),
                      q.error_bound, std::string(to_string(q.method)));
    }));
    const double deficit = r.rows.back().computed;
    if (deficit > 0.0) {
      // At alpha = 1 the log correction moves into the abscissa.
      const double scale = 1.0 / phi(1.0 / t);
      xs.push_back(tag.regime == Regime::critical ? f_alpha_eval(1.0, scale) : t);
      ys.push_back(deficit);
    }
  }
  fit_rows(r.summary, xs, ys);
  switch (tag.regime) {
    case Regime::supercritical: r.summary.expected_slope = beta / c.alpha; break;
    case Regime::critical: r.summary.expected_slope = 1.0; break;
    case Regime::subcritical: r.summary.expected_slope = beta; break;
  }
  r.summary.metrics["c_alpha"] = c_alpha_eval(tag, geometry, sup);
  return r;
}

ExperimentResult transform_consistency(const Config& c) {
  const double beta = stable_beta(c, "transform_consistency");
  const auto phi = c.exponent();
  const auto transform = lt_inverse_time_transform(phi, c.transform_a);
  ExperimentResult r;
  double max_abs = 0.0;
  int max_order = 0;
  for (double t : c.t_grid) {
    r.rows.push_back(for_row(t, [&] {
      const auto inv = laplace_invert(transform, t);
      max_order = std::max(max_order, inv.order);
      return make_row(t, inv.value,
                      mittag_leffler(beta, -c.transform_a * std::pow(t, beta)),
                      inv.discrepancy, "transform");
    }));
    max_abs = std::max(max_abs, std::abs(r.rows.back().computed - r.rows.back().reference));
  }
  r.summary.metrics["max_abs_error"] = max_abs;
  r.summary.metrics["max_order"] = max_order;
  return r;
}

double xlog_closed_form(double beta, double t) {
  using boost::math::digamma;
  return std::pow(t, beta) / std::tgamma(1.0 + beta) *
         (beta * std::log(1.0 / t) - digamma(2.0) + beta * digamma(1.0 + beta));
}

ExperimentResult moment_laws(const Config& c) {
  const double beta = stable_beta(c, "moment_laws");
  const auto phi = c.exponent();
  ExperimentResult r;
  std::vector<double> ts, ys;
  double max_closed = 0.0;
  for (double t : c.t_grid) {
    r.rows.push_back(for_row(t, [&] {
      if (c.moment_kind == "power") {
        const double p = c.moment_p;
        const auto est = expected_functional(
            beta, t, [p](double x) { return std::pow(x, p); });
        return make_row(t, est.value, moment_asymptote(p, phi, t), est.error,
                        "quadrature");
      }
      const auto est = c.moment_kind == "xlog" ? expected_xlog(beta, t)
                                               : expected_v(beta, t);
      return make_row(t, est.value, est.asymptote, est.error, "quadrature");
    }));
    if (c.moment_kind == "xlog") {
      const double exact = xlog_closed_form(beta, t);
      max_closed = std::max(max_closed, std::abs(r.rows.back().computed - exact));
    }
    if (r.rows.back().computed > 0.0) {
      ts.push_back(t);
      ys.push_back(r.rows.back().computed);
    }
  }
  fit_rows(r.summary, ts, ys);
  if (c.moment_kind == "power") {
    r.summary.expected_slope = c.moment_p * beta;
  } else if (c.moment_kind == "xlog") {
    r.summary.metrics["max_abs_error_closed_form"] = max_closed;
  }
  return r;
}

ExperimentResult tail_probe(const Config& c) {
  const double beta = stable_beta(c, "tail_probe");
  if (c.t_grid.size() < 2) throw ValidationError("tail_probe needs at least two t values");
  const auto probe = tail_decay_probe(beta, c.tail_deltas, c.t_grid, c.tail_samples, c.seed);
  const double exponent = -beta / (1.0 - beta);
  // -ln P(D_1 < x) ~ A(0+) x^{-beta/(1-beta)} with A(0+) = (1-beta) beta^{beta/(1-beta)}.
  const double a0 = (1.0 - beta) * std::pow(beta, beta / (1.0 - beta));
  ExperimentResult r;
  auto points = probe.points;
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& l, const auto& rhs) { return l.t < rhs.t; });
  for (const auto& p : points) {
    const double x = p.t * std::pow(p.delta, -1.0 / beta);
    r.rows.push_back(make_row(p.t, -p.log_tail_probability,
                              a0 * std::pow(x, exponent), p.relative_error,
                              "conditional_mc"));
  }
  r.summary.fit = probe.fits.front().fit;
  r.summary.expected_slope = probe.expected_slope;
  r.summary.metrics["mean_slope"] = probe.slope;
  for (const auto& f : probe.fits) {
    std::ostringstream key;
    key << "slope_delta_" << f.delta;
    r.summary.metrics[key.str()] = f.fit.slope;
  }
  return r;
}

}  // namespace

ExperimentResult run_experiment(const Config& config) {
  if (config.t_grid.empty()) throw ValidationError("config: the t grid is empty");
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result;
  switch (config.experiment) {
    case Experiment::large_time: result = large_time(config); break;
    case Experiment::subordinate_rate: result = subordinate_rate(config); break;
    case Experiment::small_time_mc: result = small_time_mc(config); break;
    case Experiment::transform_consistency: result = transform_consistency(config); break;
    case Experiment::moment_laws: result = moment_laws(config); break;
    case Experiment::tail_probe: result = tail_probe(config); break;
  }
  result.config = config;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace shc::lab
