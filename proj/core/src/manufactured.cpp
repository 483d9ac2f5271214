#include "dsw/manufactured.hpp"

#include <cmath>
#include <numbers>

namespace dsw::manufactured {

using std::numbers::pi;

double bathymetry(double x) { return -5.0 - 2.0 * std::cos(2.0 * pi * x); }

State exact(Case c, double t, std::span<const double> x) {
  State s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (c == Case::periodic) {
      s.a[i] = std::exp(t) * std::cos(2.0 * pi * (x[i] - 2.0 * t));
      s.b[i] = std::exp(0.5 * t) * std::sin(2.0 * pi * (x[i] - 0.5 * t));
    } else {
      s.a[i] = std::exp(2.0 * t) * std::cos(pi * x[i]);
      s.b[i] = std::exp(t) * x[i] * std::sin(pi * x[i]);
    }
  }
  return s;
}

SourceTerm bbm_source(Case c, double g) {
  if (c == Case::periodic) {
    return [g](double t, std::span<const double> x, std::span<double> s1, std::span<double> s2) {
      generated::bbm_source_periodic(g, t, x, s1, s2);
    };
  }
  return [g](double t, std::span<const double> x, std::span<double> s1, std::span<double> s2) {
    generated::bbm_source_reflecting(g, t, x, s1, s2);
  };
}

SourceTerm sk_source(Case c, double g, double alpha_tilde, double beta_tilde, double gamma_tilde) {
  if (c == Case::periodic) {
    return [=](double t, std::span<const double> x, std::span<double> s1, std::span<double> s2) {
      generated::sk_source_periodic(g, alpha_tilde, beta_tilde, gamma_tilde, t, x, s1, s2);
    };
  }
  return [=](double t, std::span<const double> x, std::span<double> s1, std::span<double> s2) {
    generated::sk_source_reflecting(g, alpha_tilde, beta_tilde, gamma_tilde, t, x, s1, s2);
  };
}

}  // namespace dsw::manufactured
