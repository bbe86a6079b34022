#pragma once

#include <iosfwd>
#include <string>

#include "qreset/experiments.hpp"

namespace qreset {

// 17 significant digits: doubles survive a write/parse round trip exactly.
std::string fmt17(double value);

// Witness series as CSV rows "t,value,increment"; the last row has an empty
// increment field.
void write_witness_csv(const WitnessSeries& series, std::ostream& out);

// Rows "t,r,S,p,nu"; the t = 0 row carries only S(0) = 1.
void write_tables_csv(const ResetSchedule& schedule, const RenewalTables& tables,
                      std::ostream& out);

// Rows "process_id,t,tracenorm,delta,opnorm,deltastar".
void write_fig2_series_csv(const Fig2Result& result, std::ostream& out);
// Per-process positive-increment counts plus a "total" row.
void write_fig2_summary_csv(const Fig2Result& result, std::ostream& out);

// Rows "V,r,concurrence,converged".
void write_fig3a_csv(const Fig3aResult& result, std::ostream& out);

// Rows "t,concurrence" with a footer row "stationary,<value>".
void write_fig3b_csv(const Fig3bResult& result, std::ostream& out);

// Rows "t,mean_re_ij...,mean_im_ij...,se_ij..." for all entries (i,j).
void write_ensemble_csv(const EnsembleResult& ensemble, std::ostream& out);

// One realization per line: space-separated reset times.
void write_reset_times(const std::vector<Trajectory>& trajectories, std::ostream& out);

// Rows "t,re_ij...,im_ij..." for a propagated state sequence.
void write_states_csv(const std::vector<Matrix>& states, std::ostream& out);

}  // namespace qreset
