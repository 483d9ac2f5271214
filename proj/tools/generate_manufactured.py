#!/usr/bin/env python3
"""Regenerate core/src/manufactured_sources.cpp.

Substitutes the manufactured solutions into the continuous BBM-BBM and
Svaerd-Kalisch equations and emits the residuals as C++ source terms.
Run from the repository root:  python3 tools/generate_manufactured.py
"""
import pathlib
import sympy as sp

x, t, g = sp.symbols("x t g", real=True)
alpha_t, beta_t, gamma_t = sp.symbols("alpha_tilde beta_tilde gamma_tilde", real=True)
sqrt_alpha = sp.Symbol("sqrt_alpha_tilde", positive=True)

bathymetry = -5 - 2 * sp.cos(2 * sp.pi * x)
depth = -bathymetry  # eta0 = 0

solutions = {
    "periodic": (sp.exp(t) * sp.cos(2 * sp.pi * (x - 2 * t)),
                 sp.exp(t / 2) * sp.sin(2 * sp.pi * (x - t / 2))),
    "reflecting": (sp.exp(2 * t) * sp.cos(sp.pi * x),
                   sp.exp(t) * x * sp.sin(sp.pi * x)),
}


def bbm_residual(eta, v):
    s_eta = (sp.diff(eta, t) + sp.diff((eta + depth) * v, x)
             - sp.Rational(1, 6) * sp.diff(depth**2 * sp.diff(eta, x, t), x))
    s_v = (sp.diff(v, t) + g * sp.diff(eta, x) + v * sp.diff(v, x)
           - sp.Rational(1, 6) * sp.diff(depth**2 * sp.diff(v, t), x, 2))
    return s_eta, s_v


def sk_residual(eta, v):
    h = eta + depth
    # alpha_hat = sqrt(alpha_tilde) * g^(1/4) * D^(5/4); the alpha terms are
    # quadratic in sqrt(alpha_tilde), so they become linear in alpha_tilde.
    a_hat = sqrt_alpha * g**sp.Rational(1, 4) * depth**sp.Rational(5, 4)
    b_hat = beta_t * depth**3
    c_hat = gamma_t * sp.sqrt(g * depth) * depth**3
    y = a_hat * sp.diff(a_hat * sp.diff(eta, x), x)
    s_h = sp.diff(h, t) + sp.diff(h * v, x) - sp.diff(y, x)
    s_p = (sp.diff(h * v, t) + sp.diff(h * v**2, x) + g * h * sp.diff(eta, x)
           - sp.diff(v * y, x)
           - sp.diff(b_hat * sp.diff(v, x), x, t)
           - (sp.diff(c_hat * sp.diff(v, x), x, 2) + sp.diff(c_hat * sp.diff(v, x, 2), x)) / 2)
    s_h = sp.expand(s_h).subs(sqrt_alpha**2, alpha_t)
    s_p = sp.expand(s_p).subs(sqrt_alpha**2, alpha_t)
    return s_h, s_p


def emit(name, exprs, params):
    replacements, reduced = sp.cse(exprs, optimizations="basic")
    lines = [f"void {name}({params}, double t, std::span<const double> x,",
             "    std::span<double> first, std::span<double> second) {",
             "  for (std::size_t i = 0; i < x.size(); ++i) {",
             "    const double xi = x[i];"]
    for sym, expr in replacements:
        code = sp.ccode(expr.subs(x, sp.Symbol("xi")))
        lines.append(f"    const double {sym} = {code};")
    lines.append(f"    first[i] = {sp.ccode(reduced[0].subs(x, sp.Symbol('xi')))};")
    lines.append(f"    second[i] = {sp.ccode(reduced[1].subs(x, sp.Symbol('xi')))};")
    lines += ["  }", "}", ""]
    return "\n".join(lines)


def main():
    out = ["// Generated by tools/generate_manufactured.py. Do not edit by hand.",
           "",
           '#include "dsw/manufactured.hpp"',
           "",
           "#include <cmath>",
           "",
           "namespace dsw::manufactured::generated {",
           "",
           "using std::cos; using std::sin; using std::exp; using std::pow; using std::sqrt;",
           ""]
    for kind, (eta, v) in solutions.items():
        out.append(emit(f"bbm_source_{kind}", list(bbm_residual(eta, v)), "double g"))
        out.append(emit(f"sk_source_{kind}", list(sk_residual(eta, v)),
                        "double g, double alpha_tilde, double beta_tilde, double gamma_tilde"))
    out.append("}  // namespace dsw::manufactured::generated")
    text = "\n".join(out) + "\n"
    text = text.replace("M_PI", "kPi")
    text = text.replace("namespace dsw::manufactured::generated {\n",
                        "namespace dsw::manufactured::generated {\n\nconstexpr double kPi = 3.14159265358979323846;\n", 1)
    path = pathlib.Path(__file__).resolve().parent.parent / "core" / "src" / "manufactured_sources.cpp"
    path.write_text(text)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
