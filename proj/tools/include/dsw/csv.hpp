#pragma once

#include <string>
#include <vector>

#include "dsw/scenarios.hpp"

namespace dsw::csv {

/// %.17g, so repeated runs produce byte-identical files.
std::string format(double x);

void write_invariants(const std::string& path, const std::vector<scenarios::InvariantSample>& rows);
void write_gauge(const std::string& path, const scenarios::GaugeRecord& gauge);
void write_snapshot(const std::string& path, const std::vector<double>& x, const std::vector<double>& eta,
                    const std::vector<double>& v, const std::vector<double>& b);
void write_eoc(const std::string& path, const std::vector<scenarios::EocRow>& rows);

struct ExperimentalSeries {
  int gauge_id = 0;
  std::vector<double> t;
  std::vector<double> eta;
};

/// Parse "gauge_id,t,eta" rows (header required, '#' comments and blank lines
/// skipped). Throws IngestionError with the 1-based line number on malformed
/// input, unknown gauge ids or non-increasing times.
std::vector<ExperimentalSeries> read_experimental(const std::string& path, int gauge_count);

}  // namespace dsw::csv
