#include "shc/lab.hpp"

#include "shc/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

namespace shc::lab {
namespace {

constexpr std::array<ExperimentInfo, 6> kExperiments{{
    {Experiment::large_time, "large_time",
     "time-changed heat content against its large-time power law"},
    {Experiment::subordinate_rate, "subordinate_rate",
     "-ln Q(t)/t for the subordinate process against phi(lambda_1)"},
    {Experiment::small_time_mc, "small_time_mc",
     "Monte Carlo |Omega| - Q(t) against the small-time law"},
    {Experiment::transform_consistency, "transform_consistency",
     "numerical Laplace inversion against the Mittag-Leffler closed form"},
    {Experiment::moment_laws, "moment_laws",
     "E[h(E_t)] by quadrature against its closed form or asymptote"},
    {Experiment::tail_probe, "tail_probe",
     "-ln P(E_t > delta) against its leading-order tail"},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 29> kKeys{{
    {"experiment", "one of the names printed by list-experiments"},
    {"seed", "64-bit master seed (required)"},
    {"output", "output file stem; defaults to the experiment name"},
    {"alpha", "stability index of the spatial process"},
    {"time_change", "none, subordinator or inverse"},
    {"phi", "stable, tempered_stable, sum_of_stables or drift"},
    {"phi.beta", "index of the stable or tempered stable exponent"},
    {"phi.kappa", "tempering parameter"},
    {"phi.a", "smaller index of sum_of_stables"},
    {"phi.b", "larger index of sum_of_stables"},
    {"domain.a", "left endpoint of the interval"},
    {"domain.b", "right endpoint of the interval"},
    {"truncation", "number of Brownian eigenpairs N"},
    {"eigen_table", "eigen-table file used instead of the Brownian eigenpairs"},
    {"t.min", "smallest t of the log-spaced grid"},
    {"t.max", "largest t of the log-spaced grid"},
    {"t.points", "number of grid points"},
    {"t.values", "explicit comma-separated t grid"},
    {"mc.n_paths", "Monte Carlo paths per t"},
    {"mc.dt", "Euler step of the spatial walk"},
    {"mc.n_steps", "steps per path; the step becomes E_t / n_steps"},
    {"mc.path_delta_u", "subordinator grid spacing for non-stable exponents"},
    {"workers", "worker threads for Monte Carlo"},
    {"tolerance", "absolute series truncation tolerance"},
    {"transform.a", "Laplace variable a in E[exp(-a E_t)]"},
    {"moment.kind", "xlog, v or power"},
    {"moment.p", "exponent p when moment.kind = power"},
    {"tail.deltas", "comma-separated thresholds delta"},
    {"tail.samples", "Kanter angles drawn for the tail probe"},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, std::string_view text) {
  T value{};
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError("config: " + key + " = '" + std::string(text) +
                          "' is not a valid number");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw ValidationError("config: " + key + " must be finite");
    }
  }
  return value;
}

std::vector<double> parse_list(const std::string& key, std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (item.empty()) throw ValidationError("config: empty item in " + key);
    out.push_back(parse_number<double>(key, item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

double positive(const std::string& key, double v) {
  if (!(v > 0.0)) throw ValidationError("config: " + key + " must be positive");
  return v;
}

Experiment parse_experiment(std::string_view name) {
  for (const auto& info : kExperiments) {
    if (info.name == name) return info.kind;
  }
  throw ValidationError("config: unknown experiment '" + std::string(name) + "'");
}

std::vector<double> log_grid(double t_min, double t_max, long points) {
  if (points <= 0) return {};
  if (!(t_min > 0.0) || !(t_max >= t_min)) {
    throw ValidationError("config: need 0 < t.min <= t.max");
  }
  if (points == 1) {
    if (t_min != t_max) throw ValidationError("config: one grid point needs t.min = t.max");
    return {t_min};
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double lo = std::log(t_min);
  const double step = (std::log(t_max) - lo) / static_cast<double>(points - 1);
  for (long i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = std::exp(lo + step * static_cast<double>(i));
  }
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

Config build(std::map<std::string, std::string> entries) {
  Config c;
  for (const auto& [key, value] : entries) {
    const bool known = std::any_of(kKeys.begin(), kKeys.end(),
                                   [&](const auto& k) { return k.first == key; });
    if (!known) throw ValidationError("config: unknown key '" + key + "'");
  }
  auto get = [&](const char* key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  if (const auto* v = get("experiment")) {
    c.experiment = parse_experiment(*v);
  } else {
    throw ValidationError("config: experiment is required");
  }
  if (const auto* v = get("seed")) {
    c.seed = parse_number<std::uint64_t>("seed", *v);
  } else {
    throw ValidationError("config: seed is required");
  }
  if (const auto* v = get("output")) c.output = *v;
  if (const auto* v = get("alpha")) c.alpha = parse_number<double>("alpha", *v);
  if (const auto* v = get("time_change")) {
    if (*v != "none" && *v != "subordinator" && *v != "inverse") {
      throw ValidationError("config: time_change must be none, subordinator or inverse");
    }
    c.time_change = *v;
  }
  if (const auto* v = get("phi")) c.phi = *v;
  if (const auto* v = get("phi.beta")) c.phi_beta = parse_number<double>("phi.beta", *v);
  if (const auto* v = get("phi.kappa")) c.phi_kappa = parse_number<double>("phi.kappa", *v);
  if (const auto* v = get("phi.a")) c.phi_a = parse_number<double>("phi.a", *v);
  if (const auto* v = get("phi.b")) c.phi_b = parse_number<double>("phi.b", *v);
  if (const auto* v = get("domain.a")) c.domain_a = parse_number<double>("domain.a", *v);
  if (const auto* v = get("domain.b")) c.domain_b = parse_number<double>("domain.b", *v);
  if (!(c.domain_b > c.domain_a)) throw ValidationError("config: need domain.a < domain.b");
  if (const auto* v = get("truncation")) {
    c.truncation = parse_number<std::size_t>("truncation", *v);
    if (c.truncation == 0) throw ValidationError("config: truncation must be positive");
  }
  if (const auto* v = get("eigen_table")) c.eigen_table = *v;

  if (const auto* v = get("t.values")) {
    c.t_grid = parse_list("t.values", *v);
    for (double t : c.t_grid) positive("t.values", t);
  } else if (get("t.min") || get("t.max") || get("t.points")) {
    const auto* lo = get("t.min");
    const auto* hi = get("t.max");
    const auto* n = get("t.points");
    if (!lo || !hi || !n) {
      throw ValidationError("config: t.min, t.max and t.points must be given together");
    }
    c.t_grid = log_grid(parse_number<double>("t.min", *lo),
                        parse_number<double>("t.max", *hi),
                        parse_number<long>("t.points", *n));
  }
  if (c.t_grid.empty()) throw ValidationError("config: the t grid is empty");
  std::sort(c.t_grid.begin(), c.t_grid.end());

  if (const auto* v = get("mc.n_paths")) {
    c.n_paths = parse_number<long>("mc.n_paths", *v);
    if (c.n_paths <= 0) throw ValidationError("config: mc.n_paths must be positive");
  }
  if (const auto* v = get("mc.dt")) c.dt = positive("mc.dt", parse_number<double>("mc.dt", *v));
  if (const auto* v = get("mc.n_steps")) {
    c.n_steps = parse_number<long>("mc.n_steps", *v);
    if (*c.n_steps <= 0) throw ValidationError("config: mc.n_steps must be positive");
  }
  if (const auto* v = get("mc.path_delta_u")) {
    c.path_delta_u = positive("mc.path_delta_u", parse_number<double>("mc.path_delta_u", *v));
  }
  if (const auto* v = get("workers")) {
    const long w = parse_number<long>("workers", *v);
    if (w <= 0) throw ValidationError("config: workers must be positive");
    c.workers = static_cast<unsigned>(w);
  }
  if (const auto* v = get("tolerance")) {
    c.tolerance = positive("tolerance", parse_number<double>("tolerance", *v));
  }
  if (const auto* v = get("transform.a")) {
    c.transform_a = positive("transform.a", parse_number<double>("transform.a", *v));
  }
  if (const auto* v = get("moment.kind")) {
    if (*v != "xlog" && *v != "v" && *v != "power") {
      throw ValidationError("config: moment.kind must be xlog, v or power");
    }
    c.moment_kind = *v;
  }
  if (const auto* v = get("moment.p")) {
    c.moment_p = positive("moment.p", parse_number<double>("moment.p", *v));
  }
  if (const auto* v = get("tail.deltas")) {
    c.tail_deltas = parse_list("tail.deltas", *v);
    if (c.tail_deltas.empty()) throw ValidationError("config: tail.deltas is empty");
    for (double d : c.tail_deltas) positive("tail.deltas", d);
  }
  if (const auto* v = get("tail.samples")) {
    c.tail_samples = parse_number<long>("tail.samples", *v);
    if (c.tail_samples < 2) throw ValidationError("config: tail.samples must be at least 2");
  }

  // Constructing the exponent validates its parameters.
  try {
    (void)c.exponent();
  } catch (const DomainError& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  c.entries = std::move(entries);
  return c;
}

}  // namespace

std::span<const ExperimentInfo> experiments() noexcept { return kExperiments; }

std::string_view to_string(Experiment e) noexcept {
  for (const auto& info : kExperiments) {
    if (info.kind == e) return info.name;
  }
  return "unknown";
}

std::span<const std::pair<std::string_view, std::string_view>> config_keys() noexcept {
  return kKeys;
}

LaplaceExponent Config::exponent() const {
  if (phi == "stable") return LaplaceExponent::stable(phi_beta);
  if (phi == "tempered_stable") return LaplaceExponent::tempered_stable(phi_beta, phi_kappa);
  if (phi == "sum_of_stables") return LaplaceExponent::sum_of_stables(phi_a, phi_b);
  if (phi == "drift") return LaplaceExponent::drift();
  throw ValidationError("config: unknown phi '" + phi + "'");
}

std::pair<std::string, std::string> split_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ValidationError("config: expected key=value, got '" + std::string(text) + "'");
  }
  const auto key = trim(text.substr(0, eq));
  const auto value = trim(text.substr(eq + 1));
  if (key.empty()) throw ValidationError("config: empty key in '" + std::string(text) + "'");
  return {std::string(key), std::string(value)};
}

Config parse_config(std::istream& in, std::span<const std::string> overrides) {
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    try {
      auto [key, value] = split_assignment(view);
      if (entries.contains(key)) {
        throw ValidationError("config: duplicate key '" + key + "'");
      }
      entries.emplace(std::move(key), std::move(value));
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
    }
  }
  for (const auto& o : overrides) {
    auto [key, value] = split_assignment(o);
    entries[key] = value;
  }
  return build(std::move(entries));
}

Config load_config(const std::filesystem::path& path,
                   std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open " + path.string());
  return parse_config(in, overrides);
}

}  // namespace shc::lab
