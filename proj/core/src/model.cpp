#include "dsw/model.hpp"

namespace dsw {

double Semidiscretization::functional_rate(const State& u, double t) const {
  State grad(u.size());
  functional_gradient(u, grad);
  const State du = rhs(u, t);
  double rate = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    rate += grad.a[i] * du.a[i] + grad.b[i] * du.b[i];
  }
  return rate;
}

}  // namespace dsw
