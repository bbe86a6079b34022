#include "qreset/renewal.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

namespace qreset {

namespace {

constexpr double kSurvivalSlack = 1e-12;

void check_survival_range(double s, int t) {
  if (s < -kSurvivalSlack || s > 1.0 + kSurvivalSlack) {
    std::ostringstream msg;
    msg << "survival S(" << t << ") = " << s << " outside [0, 1]";
    throw InvalidSurvivalError(msg.str(), t);
  }
}

}  // namespace

ResetSchedule::ResetSchedule(std::vector<double> rates, ScheduleMode mode,
                             ScheduleExtension extension, int period)
    : rates_(std::move(rates)), mode_(mode), extension_(extension), period_(period) {
  if (rates_.empty()) throw ParameterError("ResetSchedule: empty rate sequence");
  if (period_ < 1) throw ParameterError("ResetSchedule: period must be >= 1");
  if (mode_ == ScheduleMode::classical) {
    for (double r : rates_)
      if (r < 0.0 || r > 1.0)
        throw ParameterError("ResetSchedule: classical rates must lie in [0, 1]");
  } else {
    double s = 1.0;
    for (int t = 1; t <= horizon(); ++t) {
      s *= 1.0 - rates_[t - 1];
      check_survival_range(s, t);
    }
  }
}

ResetSchedule ResetSchedule::constant(double r, int horizon) {
  if (horizon < 1) throw ParameterError("ResetSchedule::constant: horizon must be >= 1");
  return ResetSchedule(std::vector<double>(horizon, r), ScheduleMode::classical,
                       ScheduleExtension::hold_last, 1);
}

ResetSchedule ResetSchedule::ramp(double slope, double cap, int horizon) {
  if (horizon < 1) throw ParameterError("ResetSchedule::ramp: horizon must be >= 1");
  std::vector<double> r(horizon);
  for (int t = 1; t <= horizon; ++t) r[t - 1] = std::min(cap, slope * (t - 1));
  return ResetSchedule(std::move(r), ScheduleMode::classical, ScheduleExtension::hold_last, 1);
}

ResetSchedule ResetSchedule::cosine(int horizon) {
  if (horizon < 1) throw ParameterError("ResetSchedule::cosine: horizon must be >= 1");
  std::vector<double> r(horizon);
  for (int t = 1; t <= horizon; ++t) r[t - 1] = 0.5 * (1.0 - std::cos(double(t - 1)));
  return ResetSchedule(std::move(r), ScheduleMode::classical, ScheduleExtension::hold_last, 1);
}

ResetSchedule ResetSchedule::from_survival(const std::vector<double>& survival_target) {
  if (survival_target.size() < 2)
    throw ParameterError("ResetSchedule::from_survival: need S(0) and at least S(1)");
  if (std::abs(survival_target[0] - 1.0) > kSurvivalSlack)
    throw InvalidSurvivalError("from_survival: S(0) must equal 1", 0);
  const int horizon = static_cast<int>(survival_target.size()) - 1;
  std::vector<double> r(horizon);
  for (int t = 1; t <= horizon; ++t) {
    check_survival_range(survival_target[t], t);
    double prev = survival_target[t - 1];
    if (prev <= 0.0)
      throw DegenerateSurvivalError("from_survival: division by zero survival", t);
    r[t - 1] = 1.0 - survival_target[t] / prev;
  }
  return ResetSchedule(std::move(r), ScheduleMode::generalized, ScheduleExtension::hold_last, 1);
}

double ResetSchedule::rate(int t) const {
  if (t < 1) throw ParameterError("ResetSchedule::rate: t must be >= 1");
  const int h = horizon();
  if (t <= h) return rates_[t - 1];
  if (extension_ == ScheduleExtension::hold_last) return rates_.back();
  return rates_[(t - 1) % h];
}

bool ResetSchedule::is_constant() const {
  for (double r : rates_)
    if (r != rates_.front()) return false;
  return true;
}

ResetSchedule ResetSchedule::extended(int new_horizon) const {
  if (new_horizon <= horizon()) return *this;
  std::vector<double> r(new_horizon);
  for (int t = 1; t <= new_horizon; ++t) r[t - 1] = rate(t);
  return ResetSchedule(std::move(r), mode_, extension_, period_);
}

std::string schedule_to_text(const ResetSchedule& schedule) {
  std::ostringstream out;
  out.precision(17);
  out << (schedule.mode() == ScheduleMode::classical ? "classical" : "generalized") << ' '
      << schedule.horizon() << '\n';
  for (double r : schedule.rates()) out << r << '\n';
  return out.str();
}

ResetSchedule schedule_from_text(std::istream& in) {
  std::string line;
  std::string mode_word;
  int horizon = 0;
  bool have_header = false;
  std::vector<double> rates;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> mode_word >> horizon) || horizon < 1)
        throw ParameterError("schedule text: header must be '<mode> <horizon>'");
      if (mode_word != "classical" && mode_word != "generalized")
        throw ParameterError("schedule text: mode must be 'classical' or 'generalized'");
      have_header = true;
      continue;
    }
    double r;
    if (!(fields >> r)) throw ParameterError("schedule text: malformed rate line: " + line);
    rates.push_back(r);
  }
  if (!have_header) throw ParameterError("schedule text: missing header");
  if (static_cast<int>(rates.size()) != horizon)
    throw ParameterError("schedule text: rate count does not match declared horizon");
  ScheduleMode mode =
      mode_word == "classical" ? ScheduleMode::classical : ScheduleMode::generalized;
  // File-provided schedules are treated as periodic.
  return ResetSchedule(std::move(rates), mode, ScheduleExtension::tile, horizon);
}

ResetSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("load_schedule: cannot open " + path);
  return schedule_from_text(in);
}

void save_schedule(const ResetSchedule& schedule, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("save_schedule: cannot open " + path);
  out << schedule_to_text(schedule);
}

RenewalTables build_tables(const ResetSchedule& schedule, int horizon) {
  const int T = horizon < 0 ? schedule.horizon() : horizon;
  RenewalTables tables;
  tables.survival.assign(T + 1, 1.0);
  tables.waiting.assign(T + 1, 0.0);
  tables.renewal_density.assign(T + 1, 0.0);
  const bool generalized = schedule.mode() == ScheduleMode::generalized;
  for (int t = 1; t <= T; ++t) {
    double r = schedule.rate(t);
    tables.survival[t] = tables.survival[t - 1] * (1.0 - r);
    if (generalized) check_survival_range(tables.survival[t], t);
    tables.waiting[t] = r * tables.survival[t - 1];
    double nu = 1.0 - tables.survival[t];
    for (int s = 1; s < t; ++s) nu -= tables.renewal_density[s] * tables.survival[t - s];
    tables.renewal_density[t] = nu;
  }
  return tables;
}

ResetProcess::ResetProcess(KrausChannel channel_, DensityMatrix reset_state_,
                           ResetSchedule schedule_)
    : channel(std::move(channel_)),
      reset_state(std::move(reset_state_)),
      schedule(std::move(schedule_)) {
  if (channel.dim() != reset_state.dim())
    throw DimensionError("ResetProcess: channel and reset state dimensions differ");
}

RenewalPropagator::RenewalPropagator(const ResetProcess& process, Matrix initial)
    : channel_(process.channel),
      mode_(process.schedule.mode()),
      schedule_(process.schedule),
      free_term_(std::move(initial)) {
  if (free_term_.rows() != channel_.dim() || free_term_.cols() != channel_.dim())
    throw DimensionError("RenewalPropagator: initial operator dimension mismatch");
  initial_trace_ = free_term_.trace();
  survival_.push_back(1.0);
  renewal_density_.push_back(0.0);
  reset_powers_.push_back(process.reset_state.matrix());
  state_ = free_term_;
}

void RenewalPropagator::advance() {
  const int t = ++t_;
  double r = schedule_.rate(t);
  survival_.push_back(survival_[t - 1] * (1.0 - r));
  if (mode_ == ScheduleMode::generalized) check_survival_range(survival_[t], t);
  double nu = 1.0 - survival_[t];
  for (int s = 1; s < t; ++s) nu -= renewal_density_[s] * survival_[t - s];
  renewal_density_.push_back(nu);

  free_term_ = channel_.apply(free_term_);
  reset_powers_.push_back(channel_.apply(reset_powers_.back()));

  Matrix mixed = Matrix::Zero(channel_.dim(), channel_.dim());
  for (int s = 1; s <= t; ++s)
    mixed += (renewal_density_[s] * survival_[t - s]) * reset_powers_[t - s];
  // P_reset[X] = Tr(X) rho_reset, so the reset branch carries Tr(initial).
  state_ = survival_[t] * free_term_ + initial_trace_ * mixed;
}

std::vector<Matrix> propagate(const ResetProcess& process, const DensityMatrix& rho0,
                              int steps) {
  if (steps < 0) throw ParameterError("propagate: steps must be >= 0");
  if (steps > process.schedule.horizon())
    throw ParameterError("propagate: steps exceed the schedule horizon");
  if (rho0.dim() != process.channel.dim())
    throw DimensionError("propagate: initial state dimension mismatch");
  RenewalPropagator walker(process, rho0.matrix());
  std::vector<Matrix> out;
  out.reserve(steps + 1);
  out.push_back(walker.state());
  for (int t = 1; t <= steps; ++t) {
    walker.advance();
    out.push_back(walker.state());
  }
  return out;
}

DynamicalMapWalker::DynamicalMapWalker(const ResetProcess& process)
    : channel_(process.channel),
      schedule_(process.schedule),
      channel_sop_(to_superoperator(process.channel)),
      channel_power_(Superoperator::identity_map(process.channel.dim())),
      vec_identity_(vec(Matrix::Identity(process.channel.dim(), process.channel.dim()))) {
  survival_.push_back(1.0);
  renewal_density_.push_back(0.0);
  reset_power_vecs_.push_back(vec(process.reset_state.matrix()));
  map_ = channel_power_;
}

void DynamicalMapWalker::advance() {
  const int t = ++t_;
  double r = schedule_.rate(t);
  survival_.push_back(survival_[t - 1] * (1.0 - r));
  if (schedule_.mode() == ScheduleMode::generalized) check_survival_range(survival_[t], t);
  double nu = 1.0 - survival_[t];
  for (int s = 1; s < t; ++s) nu -= renewal_density_[s] * survival_[t - s];
  renewal_density_.push_back(nu);

  channel_power_ = compose(channel_sop_, channel_power_);
  reset_power_vecs_.push_back(
      vec(channel_.apply(unvec(reset_power_vecs_.back(), channel_.dim()))));

  Vector mixed = Vector::Zero(vec_identity_.size());
  for (int s = 1; s <= t; ++s)
    mixed += (renewal_density_[s] * survival_[t - s]) * reset_power_vecs_[t - s];
  // Phi(t) = S(t) E^t + sum_s nu(s) S(t-s) E^{t-s} o P_reset; the projector
  // contributes the rank-one piece vec(m_t) vec(1)^T.
  map_.dim = channel_.dim();
  map_.mat = survival_[t] * channel_power_.mat + mixed * vec_identity_.transpose();
}

Superoperator dynamical_map(const ResetProcess& process, int t) {
  if (t < 0) throw ParameterError("dynamical_map: t must be >= 0");
  if (t > process.schedule.horizon())
    throw ParameterError("dynamical_map: t exceeds the schedule horizon");
  DynamicalMapWalker walker(process);
  for (int k = 0; k < t; ++k) walker.advance();
  return walker.map();
}

Superoperator dual_dynamical_map(const ResetProcess& process, int t) {
  return dynamical_map(process, t).adjoint();
}

Superoperator constant_r_map(const KrausChannel& channel, const DensityMatrix& reset_state,
                             double r) {
  if (r < 0.0 || r > 1.0) throw ParameterError("constant_r_map: r must lie in [0, 1]");
  if (channel.dim() != reset_state.dim())
    throw DimensionError("constant_r_map: dimension mismatch");
  Superoperator e = to_superoperator(channel);
  Superoperator p = to_superoperator(reset_projector(reset_state));
  return {channel.dim(), (1.0 - r) * e.mat + r * p.mat};
}

Superoperator time_local_map(const KrausChannel& channel, const DensityMatrix& reset_state,
                             const std::vector<double>& rates, int t) {
  if (t < 0 || t > static_cast<int>(rates.size()))
    throw ParameterError("time_local_map: t outside the rate sequence");
  Superoperator result = Superoperator::identity_map(channel.dim());
  for (int k = 1; k <= t; ++k)
    result = compose(constant_r_map(channel, reset_state, rates[k - 1]), result);
  return result;
}

Superoperator stationary_map(const ResetProcess& process, int t) {
  if (t < 0) throw ParameterError("stationary_map: t must be >= 0");
  const Matrix& reset = process.reset_state.matrix();
  if (trace_norm(process.channel.apply(reset) - reset) >= 1e-10)
    throw ContractViolation("stationary_map: reset state is not stationary under the channel");
  RenewalTables tables = build_tables(process.schedule.extended(std::max(t, 1)), t);
  Superoperator e = to_superoperator(process.channel);
  Superoperator power = Superoperator::identity_map(process.channel.dim());
  for (int k = 0; k < t; ++k) power = compose(e, power);
  Superoperator p = to_superoperator(reset_projector(process.reset_state));
  double s = tables.survival[t];
  return {process.channel.dim(), s * power.mat + (1.0 - s) * p.mat};
}

StationaryResult stationary_state(const ResetProcess& process, double tol, int max_steps) {
  return stationary_state(process, process.reset_state, tol, max_steps);
}

StationaryResult stationary_state(const ResetProcess& process, const DensityMatrix& rho0,
                                  double tol, int max_steps) {
  if (max_steps < 1) throw ParameterError("stationary_state: max_steps must be >= 1");
  StationaryResult result;
  const int period = process.schedule.period();

  if (process.schedule.is_constant()) {
    // Constant probability: the process is a repeated application of Phi_r.
    const double r = process.schedule.rates().front();
    Matrix state = rho0.matrix();
    for (int step = 1; step <= max_steps; ++step) {
      Matrix next = (1.0 - r) * process.channel.apply(state) +
                    r * state.trace() * process.reset_state.matrix();
      result.residual = trace_norm(next - state);
      state = std::move(next);
      result.steps = step;
      if (result.residual < tol) {
        result.state = std::move(state);
        result.converged = true;
        return result;
      }
    }
    result.state = std::move(state);
    return result;
  }

  ResetProcess extended(process.channel, process.reset_state,
                        process.schedule.extended(max_steps + period + 1));
  RenewalPropagator walker(extended, rho0.matrix());
  std::vector<Matrix> ring(period + 1);
  ring[0] = walker.state();
  for (int step = 1; step <= max_steps; ++step) {
    walker.advance();
    ring[step % (period + 1)] = walker.state();
    result.steps = step;
    if (step >= period) {
      const Matrix& old = ring[(step - period) % (period + 1)];
      result.residual = trace_norm(walker.state() - old);
      if (result.residual < tol) {
        result.state = walker.state();
        result.converged = true;
        return result;
      }
    }
  }
  result.state = walker.state();
  return result;
}

}  // namespace qreset
