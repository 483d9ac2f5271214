#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "dsw/grid.hpp"

namespace dsw {

/// Additional forcing (s_first, s_second) evaluated at time t on the grid nodes.
/// The model adds it to the balance laws before the elliptic solves.
using SourceTerm = std::function<void(double t, std::span<const double> x, std::span<double> first,
                                      std::span<double> second)>;

using BathymetryFn = std::function<double(double x)>;

struct InvariantValues {
  double mass = 0.0;
  /// Total velocity (BBM-BBM) or total discharge (Svaerd-Kalisch).
  double secondary = 0.0;
  /// Total energy; the plain SWE entropy for Svaerd-Kalisch.
  double energy = 0.0;
  std::optional<double> modified_entropy;
};

/// Interface shared by the model discretizations. States are in primitive
/// variables (eta, v).
class Semidiscretization {
 public:
  virtual ~Semidiscretization() = default;

  virtual const Grid& grid() const = 0;
  virtual const MassMatrix& mass() const = 0;
  virtual std::string name() const = 0;

  virtual void rhs(const State& u, double t, State& dudt) const = 0;
  virtual InvariantValues invariants(const State& u) const = 0;

  /// Quadratic/entropy functional the semidiscretization conserves or dissipates:
  /// energy for BBM-BBM, modified entropy for Svaerd-Kalisch.
  virtual double functional(const State& u) const = 0;
  /// Gradient of `functional` with respect to the nodal values (mass matrix included).
  virtual void functional_gradient(const State& u, State& grad) const = 0;
  /// True if the semidiscretization conserves `functional` exactly (false: dissipative
  /// or no structure guarantee).
  virtual bool conserves_functional() const = 0;

  State rhs(const State& u, double t) const {
    State out(u.size());
    rhs(u, t, out);
    return out;
  }
  /// d/dt functional along the semidiscrete flow: <grad J(u), rhs(u)>.
  double functional_rate(const State& u, double t) const;
};

}  // namespace dsw
