#pragma once

#include <iosfwd>
#include <string>

#include "mocstab/simulate.hpp"
#include "mocstab/vonneumann.hpp"

namespace mocstab {

/// CSV with one metadata header line, then `z,max_abs_lambda,gamma` rows.
/// Numbers are emitted with round-trip precision, so read + write is the identity.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep,
                     const std::string& model_id, const std::string& solution_id);

struct SweepCsv {
    std::string header;  // the leading '#' metadata line
    SweepResult sweep;
};

SweepCsv read_sweep_csv(std::istream& is);
void write_sweep_csv(std::ostream& os, const SweepCsv& csv);

/// `t,total_error,conservation_plus,conservation_minus` rows.
void write_series_csv(std::ostream& os, const SimulationReport& report);

/// `z,log10_err` rows.
void write_spectrum_csv(std::ostream& os, const ErrorSpectrum& spectrum);

/// JSON document (schema version 1) with run metadata, outcome markers and
/// the measured growth rate when present. The time series lives in the CSV.
std::string report_to_json(const SimulationReport& report);

/// Round-trip formatting for a double (shortest form is not required; the
/// same bits always produce the same text).
std::string format_double(double v);

}  // namespace mocstab
