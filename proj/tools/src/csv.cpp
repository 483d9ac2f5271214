#include "dsw/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "dsw/errors.hpp"

namespace dsw::csv {

std::string format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + path);
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& field, std::size_t line, const char* what) {
  const std::string f = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
    throw IngestionError("experimental data line " + std::to_string(line) + ": invalid " + what + " '" + f + "'",
                         line);
  }
  return value;
}

}  // namespace

void write_invariants(const std::string& path, const std::vector<scenarios::InvariantSample>& rows) {
  std::ofstream out = open_output(path);
  out << "t,mass,secondary,energy,modified_entropy,gamma\n";
  for (const auto& r : rows) {
    out << format(r.t) << ',' << format(r.mass) << ',' << format(r.secondary) << ',' << format(r.energy) << ','
        << (r.modified_entropy ? format(*r.modified_entropy) : std::string()) << ',' << format(r.gamma) << '\n';
  }
}

void write_gauge(const std::string& path, const scenarios::GaugeRecord& gauge) {
  std::ofstream out = open_output(path);
  out << "t,eta\n";
  for (std::size_t i = 0; i < gauge.t.size(); ++i) out << format(gauge.t[i]) << ',' << format(gauge.eta[i]) << '\n';
}

void write_snapshot(const std::string& path, const std::vector<double>& x, const std::vector<double>& eta,
                    const std::vector<double>& v, const std::vector<double>& b) {
  std::ofstream out = open_output(path);
  out << "x,eta,v,b\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << format(x[i]) << ',' << format(eta[i]) << ',' << format(v[i]) << ',' << format(b[i]) << '\n';
  }
}

void write_eoc(const std::string& path, const std::vector<scenarios::EocRow>& rows) {
  std::ofstream out = open_output(path);
  out << "order,N,error_eta,error_v,eoc_eta,eoc_v\n";
  for (const auto& r : rows) {
    out << r.order << ',' << r.nodes << ',' << format(r.error_eta) << ',' << format(r.error_v) << ','
        << (r.eoc_eta ? format(*r.eoc_eta) : std::string()) << ',' << (r.eoc_v ? format(*r.eoc_v) : std::string())
        << '\n';
  }
}

std::vector<ExperimentalSeries> read_experimental(const std::string& path, int gauge_count) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open experimental data file " + path, 0);
  std::map<int, ExperimentalSeries> series;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(text);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (!text.empty() && text.back() == ',') fields.emplace_back();
    if (!header) {
      if (fields.size() != 3 || trim(fields[0]) != "gauge_id" || trim(fields[1]) != "t" || trim(fields[2]) != "eta") {
        throw IngestionError("experimental data line " + std::to_string(line) + ": expected header 'gauge_id,t,eta'",
                             line);
      }
      header = true;
      continue;
    }
    if (fields.size() != 3) {
      throw IngestionError("experimental data line " + std::to_string(line) + ": expected 3 columns, got " +
                               std::to_string(fields.size()),
                           line);
    }
    const double id_value = parse_number(fields[0], line, "gauge_id");
    const int id = static_cast<int>(id_value);
    if (id != id_value || id < 1 || id > gauge_count) {
      throw IngestionError("experimental data line " + std::to_string(line) + ": gauge_id must be an integer in [1, " +
                               std::to_string(gauge_count) + "]",
                           line);
    }
    const double t = parse_number(fields[1], line, "t");
    const double eta = parse_number(fields[2], line, "eta");
    ExperimentalSeries& s = series[id];
    s.gauge_id = id;
    if (!s.t.empty() && !(t > s.t.back())) {
      throw IngestionError("experimental data line " + std::to_string(line) + ": times of gauge " +
                               std::to_string(id) + " must increase",
                           line);
    }
    s.t.push_back(t);
    s.eta.push_back(eta);
  }
  if (!header) throw IngestionError("experimental data file " + path + " is empty", line);
  std::vector<ExperimentalSeries> out;
  for (auto& [id, s] : series) out.push_back(std::move(s));
  return out;
}

}  // namespace dsw::csv
