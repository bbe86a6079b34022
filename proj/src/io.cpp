#include "qreset/io.hpp"

#include <cstdio>
#include <ostream>

namespace qreset {

std::string fmt17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_witness_csv(const WitnessSeries& series, std::ostream& out) {
  out << "t,value,increment\n";
  const auto inc = series.increments();
  for (std::size_t k = 0; k < series.values.size(); ++k) {
    out << series.times[k] << ',' << fmt17(series.values[k]) << ',';
    if (k < inc.size()) out << fmt17(inc[k]);
    out << '\n';
  }
}

void write_tables_csv(const ResetSchedule& schedule, const RenewalTables& tables,
                      std::ostream& out) {
  out << "t,r,S,p,nu\n";
  out << "0,," << fmt17(tables.survival[0]) << ",,\n";
  for (int t = 1; t <= tables.horizon(); ++t) {
    out << t << ',' << fmt17(schedule.rate(t)) << ',' << fmt17(tables.survival[t]) << ','
        << fmt17(tables.waiting[t]) << ',' << fmt17(tables.renewal_density[t]) << '\n';
  }
}

void write_fig2_series_csv(const Fig2Result& result, std::ostream& out) {
  out << "process_id,t,tracenorm,delta,opnorm,deltastar\n";
  for (std::size_t p = 0; p < result.processes.size(); ++p) {
    const auto& record = result.processes[p];
    const auto delta = record.schrodinger.increments();
    const auto delta_star = record.heisenberg.increments();
    for (std::size_t k = 0; k < record.schrodinger.values.size(); ++k) {
      out << p << ',' << record.schrodinger.times[k] << ','
          << fmt17(record.schrodinger.values[k]) << ',';
      if (k < delta.size()) out << fmt17(delta[k]);
      out << ',' << fmt17(record.heisenberg.values[k]) << ',';
      if (k < delta_star.size()) out << fmt17(delta_star[k]);
      out << '\n';
    }
  }
}

void write_fig2_summary_csv(const Fig2Result& result, std::ostream& out) {
  out << "process_id,positive_delta,positive_deltastar\n";
  for (std::size_t p = 0; p < result.processes.size(); ++p) {
    out << p << ',' << result.processes[p].schrodinger.positive_increments() << ','
        << result.processes[p].heisenberg.positive_increments() << '\n';
  }
  out << "total," << result.schrodinger_events << ',' << result.heisenberg_events << '\n';
}

void write_fig3a_csv(const Fig3aResult& result, std::ostream& out) {
  out << "V,r,concurrence,converged\n";
  for (const auto& cell : result.cells) {
    out << fmt17(cell.interaction) << ',' << fmt17(cell.reset_probability) << ','
        << fmt17(cell.concurrence) << ',' << (cell.converged ? 1 : 0) << '\n';
  }
}

void write_fig3b_csv(const Fig3bResult& result, std::ostream& out) {
  out << "t,concurrence\n";
  for (std::size_t t = 0; t < result.concurrence.size(); ++t)
    out << t << ',' << fmt17(result.concurrence[t]) << '\n';
  out << "stationary," << fmt17(result.stationary_concurrence) << '\n';
}

namespace {

void write_entry_header(int d, std::ostream& out, const char* prefix) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out << ',' << prefix << '_' << i << j;
}

}  // namespace

void write_ensemble_csv(const EnsembleResult& ensemble, std::ostream& out) {
  if (ensemble.mean.empty()) return;
  const int d = static_cast<int>(ensemble.mean.front().rows());
  out << "t";
  write_entry_header(d, out, "mean_re");
  write_entry_header(d, out, "mean_im");
  write_entry_header(d, out, "se");
  out << '\n';
  for (std::size_t t = 0; t < ensemble.mean.size(); ++t) {
    out << t;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out << ',' << fmt17(ensemble.mean[t](i, j).real());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out << ',' << fmt17(ensemble.mean[t](i, j).imag());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out << ',' << fmt17(ensemble.standard_error[t](i, j));
    out << '\n';
  }
}

void write_reset_times(const std::vector<Trajectory>& trajectories, std::ostream& out) {
  for (const auto& trajectory : trajectories) {
    for (std::size_t k = 0; k < trajectory.reset_times.size(); ++k) {
      if (k > 0) out << ' ';
      out << trajectory.reset_times[k];
    }
    out << '\n';
  }
}

void write_states_csv(const std::vector<Matrix>& states, std::ostream& out) {
  if (states.empty()) return;
  const int d = static_cast<int>(states.front().rows());
  out << "t";
  write_entry_header(d, out, "re");
  write_entry_header(d, out, "im");
  out << '\n';
  for (std::size_t t = 0; t < states.size(); ++t) {
    out << t;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out << ',' << fmt17(states[t](i, j).real());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out << ',' << fmt17(states[t](i, j).imag());
    out << '\n';
  }
}

}  // namespace qreset
