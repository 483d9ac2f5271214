#pragma once

#include <span>

#include "dsw/grid.hpp"
#include "dsw/model.hpp"

namespace dsw::manufactured {

enum class Case { periodic, reflecting };

/// b(x) = -5 - 2 cos(2 pi x), used with still-water level 0 so that D = -b.
double bathymetry(double x);

/// Exact primitive solution (eta, v) on the grid nodes.
/// periodic:   eta = e^t cos(2 pi (x - 2t)),  v = e^{t/2} sin(2 pi (x - t/2))
/// reflecting: eta = e^{2t} cos(pi x),        v = e^t x sin(pi x)
State exact(Case c, double t, std::span<const double> x);

SourceTerm bbm_source(Case c, double g);
SourceTerm sk_source(Case c, double g, double alpha_tilde, double beta_tilde, double gamma_tilde);

namespace generated {
void bbm_source_periodic(double g, double t, std::span<const double> x, std::span<double> first,
                         std::span<double> second);
void sk_source_periodic(double g, double alpha_tilde, double beta_tilde, double gamma_tilde, double t,
                        std::span<const double> x, std::span<double> first, std::span<double> second);
void bbm_source_reflecting(double g, double t, std::span<const double> x, std::span<double> first,
                           std::span<double> second);
void sk_source_reflecting(double g, double alpha_tilde, double beta_tilde, double gamma_tilde, double t,
                          std::span<const double> x, std::span<double> first, std::span<double> second);
}  // namespace generated

}  // namespace dsw::manufactured
