#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qreset/channels.hpp"

namespace qreset {

// ---------------------------------------------------------------------------
// Reset schedules
// ---------------------------------------------------------------------------

enum class ScheduleMode { classical, generalized };

// How stored rates extend past the horizon: periodic schedules tile, ramps
// hold their final value.
enum class ScheduleExtension { hold_last, tile };

// The sequence r(s), s = 1..horizon, of reset probabilities conditioned on s
// steps elapsed since the previous reset. Classical schedules have
// r(s) in [0,1]; generalized schedules may carry negative entries as long as
// the derived survival sequence stays in [0,1] (checked at construction).
class ResetSchedule {
 public:
  ResetSchedule(std::vector<double> rates, ScheduleMode mode,
                ScheduleExtension extension = ScheduleExtension::hold_last,
                int period = 1);

  static ResetSchedule constant(double r, int horizon);
  // r(t) = min(cap, slope * (t - 1)); r(1) = 0.
  static ResetSchedule ramp(double slope, double cap, int horizon);
  // r(t) = (1 - cos(t - 1)) / 2, argument in radians; r(1) = 0.
  static ResetSchedule cosine(int horizon);
  // Generalized schedule r(t) = 1 - S(t)/S(t-1) from a target survival
  // sequence S(0..T); rebuilding tables reproduces the target.
  static ResetSchedule from_survival(const std::vector<double>& survival_target);

  int horizon() const noexcept { return static_cast<int>(rates_.size()); }
  ScheduleMode mode() const noexcept { return mode_; }
  ScheduleExtension extension() const noexcept { return extension_; }
  // Stride used when comparing states for stationarity.
  int period() const noexcept { return period_; }
  const std::vector<double>& rates() const noexcept { return rates_; }

  // r(t) for t >= 1, extension-aware beyond the horizon.
  double rate(int t) const;
  bool is_constant() const;
  // Copy with the stored horizon grown to at least `new_horizon`.
  ResetSchedule extended(int new_horizon) const;

 private:
  std::vector<double> rates_;
  ScheduleMode mode_;
  ScheduleExtension extension_;
  int period_;
};

// Line-oriented text form: header "<mode> <horizon>", then one rate per line.
std::string schedule_to_text(const ResetSchedule& schedule);
ResetSchedule schedule_from_text(std::istream& in);
ResetSchedule load_schedule(const std::string& path);
void save_schedule(const ResetSchedule& schedule, const std::string& path);

// ---------------------------------------------------------------------------
// Renewal tables
// ---------------------------------------------------------------------------

// survival[t] = S(t) = prod_{s<=t} (1 - r(s)), S(0) = 1.
// waiting[t] = p(t) = r(t) S(t-1), probability of waiting time t.
// renewal_density[t] = nu(t), probability that a reset occurs exactly at t,
// from nu(t) = 1 - S(t) - sum_{s<t} nu(s) S(t-s), seeded by nu(1) = r(1).
// Index 0 of waiting/renewal_density is unused (kept zero).
struct RenewalTables {
  std::vector<double> survival;
  std::vector<double> waiting;
  std::vector<double> renewal_density;

  int horizon() const noexcept { return static_cast<int>(survival.size()) - 1; }
};

// Tables up to `horizon` (default: the schedule's stored horizon). Throws
// InvalidSurvivalError if a generalized schedule drives S(t) out of [0,1].
RenewalTables build_tables(const ResetSchedule& schedule, int horizon = -1);

// ---------------------------------------------------------------------------
// Reset process
// ---------------------------------------------------------------------------

struct ResetProcess {
  KrausChannel channel;
  DensityMatrix reset_state;
  ResetSchedule schedule;

  ResetProcess(KrausChannel channel_, DensityMatrix reset_state_, ResetSchedule schedule_);

  // Renewal tables of the schedule over its stored horizon.
  RenewalTables tables() const { return build_tables(schedule); }
};

// Ensemble-averaged states rho(0..steps) from the last renewal equation
//   rho(t) = S(t) E^t[rho0] + sum_{s<=t} nu(s) S(t-s) E^{t-s}[rho_reset].
// Channel powers are cached across t. Requires steps <= schedule horizon.
std::vector<Matrix> propagate(const ResetProcess& process, const DensityMatrix& rho0,
                              int steps);

// Incremental renewal evolution of an arbitrary operator (states for the
// physics, Hermitian observables for the witnesses). Extends the schedule
// when stepped past the stored horizon.
class RenewalPropagator {
 public:
  RenewalPropagator(const ResetProcess& process, Matrix initial);

  int time() const noexcept { return t_; }
  const Matrix& state() const noexcept { return state_; }
  double survival() const noexcept { return survival_.back(); }
  void advance();

 private:
  const KrausChannel& channel_;
  ScheduleMode mode_;
  ResetSchedule schedule_;
  std::vector<double> survival_;
  std::vector<double> renewal_density_;
  std::vector<Matrix> reset_powers_;  // E^a[rho_reset]
  Matrix free_term_;                  // E^t[initial]
  Complex initial_trace_;             // weight of the reset branch
  Matrix state_;
  int t_ = 0;
};

// Incremental construction of the dynamical-map superoperators Phi(t).
class DynamicalMapWalker {
 public:
  explicit DynamicalMapWalker(const ResetProcess& process);

  int time() const noexcept { return t_; }
  const Superoperator& map() const noexcept { return map_; }      // Phi(t)
  Superoperator dual() const { return map_.adjoint(); }           // Phi*(t)
  void advance();

 private:
  KrausChannel channel_;
  ResetSchedule schedule_;
  Superoperator channel_sop_;
  Superoperator channel_power_;  // superop of E^t
  std::vector<double> survival_;
  std::vector<double> renewal_density_;
  std::vector<Vector> reset_power_vecs_;  // vec(E^a[rho_reset])
  Vector vec_identity_;
  Superoperator map_;
  int t_ = 0;
};

// Phi(t): Schroedinger-picture dynamical map as a superoperator.
Superoperator dynamical_map(const ResetProcess& process, int t);
// Phi*(t): Heisenberg-picture dual (vectorization adjoint of Phi(t)).
Superoperator dual_dynamical_map(const ResetProcess& process, int t);

// Single-step map of the constant-probability process,
// Phi_r = (1-r) E + r P_reset; the constant-r dynamical map is Phi_r^t.
Superoperator constant_r_map(const KrausChannel& channel, const DensityMatrix& reset_state,
                             double r);

// Time-local variant Phi(t) = Phi_{r(t)} o ... o Phi_{r(1)}; CP-divisible in
// the Schroedinger picture by construction.
Superoperator time_local_map(const KrausChannel& channel, const DensityMatrix& reset_state,
                             const std::vector<double>& rates, int t);

// Reduced map Phi(t) = S(t) E^t + (1 - S(t)) P_reset, valid when the reset
// state is stationary under E; completely positive whenever S(t) in [0,1],
// also for schedules with negative r(t).
Superoperator stationary_map(const ResetProcess& process, int t);

struct StationaryResult {
  Matrix state;
  bool converged = false;
  int steps = 0;
  double residual = 0.0;
};

// Iterates the propagation (schedules extended past their horizon) until two
// states one schedule period apart differ by less than `tol` in trace norm,
// or reports non-convergence after max_steps. Starts from `rho0`
// (the reset state by default).
StationaryResult stationary_state(const ResetProcess& process, double tol, int max_steps);
StationaryResult stationary_state(const ResetProcess& process, const DensityMatrix& rho0,
                                  double tol, int max_steps);

}  // namespace qreset
