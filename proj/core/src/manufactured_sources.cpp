// Generated by tools/generate_manufactured.py. Do not edit by hand.

#include "dsw/manufactured.hpp"

#include <cmath>

namespace dsw::manufactured::generated {

constexpr double kPi = 3.14159265358979323846;

using std::cos; using std::sin; using std::exp; using std::pow; using std::sqrt;

void bbm_source_periodic(double g, double t, std::span<const double> x,
    std::span<double> first, std::span<double> second) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double x0 = exp(t);
    const double x1 = 2*xi;
    const double x2 = -x1;
    const double x3 = kPi*(4*t + x2);
    const double x4 = cos(x3);
    const double x5 = x0*x4;
    const double x6 = sin(x3);
    const double x7 = x0*x6;
    const double x8 = 4*kPi;
    const double x9 = kPi*x1;
    const double x10 = sin(x9);
    const double x11 = exp((1.0/2.0)*t);
    const double x12 = kPi*(t + x2);
    const double x13 = sin(x12);
    const double x14 = x11*x13;
    const double x15 = 2*kPi;
    const double x16 = cos(x9);
    const double x17 = 2*x16 + 5;
    const double x18 = cos(x12);
    const double x19 = kPi*x18;
    const double x20 = x11*x19;
    const double x21 = pow(x17, 2);
    const double x22 = pow(kPi, 2);
    const double x23 = x0*x22;
    const double x24 = x10*x17;
    const double x25 = 2*x19;
    const double x26 = x13 + x25;
    first[i] = x14*x15*(2*x10 - x7) + 2*x20*(x17 + x5) - 2.0/3.0*x21*x23*(-x4 + x6*x8) + (8.0/3.0)*x23*x24*(x4*x8 + x6) + x5 - x7*x8;
    second[i] = 2*kPi*g*x0*x6 - x0*x13*x25 - 1.0/3.0*x11*x22*(x21*x26 + 8*x24*(x13*x15 - x18) + 4*x26*(-2*pow(x10, 2) + x16*x17)) - 1.0/2.0*x14 - x20;
  }
}

void sk_source_periodic(double g, double alpha_tilde, double beta_tilde, double gamma_tilde, double t, std::span<const double> x,
    std::span<double> first, std::span<double> second) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double x0 = exp(t);
    const double x1 = 2*xi;
    const double x2 = -x1;
    const double x3 = kPi*(4*t + x2);
    const double x4 = cos(x3);
    const double x5 = x0*x4;
    const double x6 = exp((1.0/2.0)*t);
    const double x7 = kPi*(t + x2);
    const double x8 = cos(x7);
    const double x9 = kPi*x8;
    const double x10 = x6*x9;
    const double x11 = sin(x3);
    const double x12 = kPi*x11;
    const double x13 = 4*x0;
    const double x14 = x12*x13;
    const double x15 = sin(x7);
    const double x16 = x15*x6;
    const double x17 = kPi*x1;
    const double x18 = sin(x17);
    const double x19 = kPi*x18;
    const double x20 = cos(x17);
    const double x21 = 2*x12;
    const double x22 = exp((3.0/2.0)*t);
    const double x23 = x15*x22;
    const double x24 = x22*x4;
    const double x25 = x24*x9;
    const double x26 = x0*x11;
    const double x27 = pow(kPi, 3);
    const double x28 = sqrt(g);
    const double x29 = 2*x20;
    const double x30 = x29 + 5;
    const double x31 = sqrt(x30);
    const double x32 = alpha_tilde*x27*x28*x31;
    const double x33 = 200*x32;
    const double x34 = x18*x32;
    const double x35 = x34*x5;
    const double x36 = x0*x20;
    const double x37 = x11*x32;
    const double x38 = 260*x37;
    const double x39 = pow(x18, 2);
    const double x40 = 50*x39;
    const double x41 = alpha_tilde*x27*x28/x31;
    const double x42 = x40*x41;
    const double x43 = x26*x32;
    const double x44 = pow(x20, 2);
    const double x45 = 72*x44;
    const double x46 = 120*x20;
    const double x47 = 20*x0;
    const double x48 = x11*x20;
    const double x49 = x39*x41;
    const double x50 = pow(kPi, 2)*beta_tilde;
    const double x51 = x16*x50;
    const double x52 = beta_tilde*x27;
    const double x53 = x6*x8;
    const double x54 = x52*x53;
    const double x55 = x16*x20;
    const double x56 = pow(x15, 2);
    const double x57 = x15*x9;
    const double x58 = 300*x50;
    const double x59 = x18*x53;
    const double x60 = x18*x52;
    const double x61 = x16*x60;
    const double x62 = x15*x24;
    const double x63 = pow(x20, 3);
    const double x64 = exp(2*t);
    const double x65 = x21*x64;
    const double x66 = x50*x59;
    const double x67 = gamma_tilde*x27*sqrt(g*x30);
    const double x68 = x53*x67;
    const double x69 = x18*x67;
    const double x70 = x16*x69;
    const double x71 = x39*x68;
    const double x72 = x11*x23;
    const double x73 = x24*x8;
    const double x74 = x20*x71;
    const double x75 = x34*x62;
    const double x76 = x22*x34*x8;
    const double x77 = x32*x73;
    const double x78 = 1.0/x30;
    const double x79 = x71*x78;
    const double x80 = x23*x37;
    first[i] = 4*x10*x20 + 10*x10 - x14 + 4*x16*x19 - x21*x23 + 2*x25 + x26*x33 - x26*x42 - x35*x46 - 300*x35 + x36*x38 - x40*x43 + x43*x45 - x47*x48*x49 + x5;
    second[i] = 10*g*x0*x12 + g*x14*x20 + g*x4*x65 - x10*x29 - 5*x10 + 100*x11*x76 + 4*x12*x23 - x13*x19*x56 - 5.0/2.0*x16 - x20*x23*x38 + 20*x20*x49*x72 - 600*x20*x54 + 240*x20*x66 + 1900*x20*x68 + 160*x20*x77 - x25 - x33*x72 + x33*x73 - 8*x36*x57 - 4*x4*x57*x64 + x40*x80 + x42*x72 - 120*x44*x51 - 240*x44*x54 - 96*x44*x61 + 48*x44*x66 + 1040*x44*x68 + 336*x44*x70 + 32*x44*x77 + 16*x44*x79 - x45*x80 + x46*x75 - x47*x57 + 40*x48*x76 - 16*x51*x63 - 250*x51 - 32*x54*x63 - 500*x54 - x55*x58 - 480*x55*x60 + 1680*x55*x69 - x55 + x56*x65 + x58*x59 - 600*x61 - 3.0/2.0*x62 + 176*x63*x68 + 1000*x68 + 2100*x70 - 720*x71 + 80*x74*x78 - 288*x74 + 300*x75 + 100*x79;
  }
}

void bbm_source_reflecting(double g, double t, std::span<const double> x,
    std::span<double> first, std::span<double> second) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double x0 = exp(t);
    const double x1 = kPi*xi;
    const double x2 = cos(x1);
    const double x3 = 2*x2;
    const double x4 = 2*x1;
    const double x5 = cos(x4);
    const double x6 = 2*x5 + 5;
    const double x7 = pow(x6, 2);
    const double x8 = pow(kPi, 2)*x0;
    const double x9 = sin(x1);
    const double x10 = exp(2*t);
    const double x11 = x10*x2 + x6;
    const double x12 = sin(x4);
    const double x13 = x1*x9;
    const double x14 = x1*x2;
    const double x15 = x12*x6*x9;
    const double x16 = x9*xi;
    first[i] = x0*(x0*x3 + x11*x14 + x11*x9 - x13*(x10*x9 + 4*x12) - 8.0/3.0*x15*x8 + (1.0/3.0)*x2*x7*x8);
    second[i] = x0*(-kPi*g*x0*x9 + x0*x16*(x14 + x9) + x16 + (1.0/6.0)*kPi*(16*x12*x14*x6 + x13*x7 + 16*x13*(-2*pow(x12, 2) + x5*x6) + 16*x15 - x3*x7));
  }
}

void sk_source_reflecting(double g, double alpha_tilde, double beta_tilde, double gamma_tilde, double t, std::span<const double> x,
    std::span<double> first, std::span<double> second) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double x0 = exp(t);
    const double x1 = kPi*xi;
    const double x2 = sin(x1);
    const double x3 = 5*x2;
    const double x4 = cos(x1);
    const double x5 = 2*x4;
    const double x6 = x1*x4;
    const double x7 = 2*x1;
    const double x8 = cos(x7);
    const double x9 = 2*x8;
    const double x10 = x2*x9;
    const double x11 = exp(2*t);
    const double x12 = x2*x4;
    const double x13 = x11*x12;
    const double x14 = pow(x4, 2);
    const double x15 = x1*x11;
    const double x16 = sin(x7);
    const double x17 = x16*x2;
    const double x18 = pow(x2, 2);
    const double x19 = sqrt(g);
    const double x20 = x9 + 5;
    const double x21 = sqrt(x20);
    const double x22 = alpha_tilde*x19*x21;
    const double x23 = 25*x22;
    const double x24 = pow(kPi, 3);
    const double x25 = x2*x24;
    const double x26 = x0*x25;
    const double x27 = x23*x26;
    const double x28 = x22*x26;
    const double x29 = 70*x8;
    const double x30 = x22*x24;
    const double x31 = x16*x30;
    const double x32 = x0*x31*x4;
    const double x33 = pow(x16, 2);
    const double x34 = alpha_tilde*x19*x33/x21;
    const double x35 = 25*x34;
    const double x36 = pow(x8, 2);
    const double x37 = 24*x36;
    const double x38 = 10*x0;
    const double x39 = x34*x8;
    const double x40 = kPi*beta_tilde;
    const double x41 = x4*x40;
    const double x42 = kPi*x0;
    const double x43 = g*x42;
    const double x44 = x18*xi;
    const double x45 = 125*xi;
    const double x46 = pow(kPi, 2);
    const double x47 = x2*x46;
    const double x48 = beta_tilde*x47;
    const double x49 = x17*x40;
    const double x50 = pow(x8, 3);
    const double x51 = x13*xi;
    const double x52 = pow(xi, 2);
    const double x53 = exp(3*t);
    const double x54 = kPi*x53;
    const double x55 = x52*x54;
    const double x56 = 4*x8;
    const double x57 = x48*xi;
    const double x58 = x16*x46;
    const double x59 = beta_tilde*x4*x58*xi;
    const double x60 = 240*x8;
    const double x61 = x42*x52;
    const double x62 = x16*x18;
    const double x63 = 48*x36;
    const double x64 = gamma_tilde*sqrt(g*x20);
    const double x65 = x47*x64;
    const double x66 = x4*x64;
    const double x67 = x24*x66;
    const double x68 = x65*x8;
    const double x69 = x58*x66;
    const double x70 = x24*xi;
    const double x71 = x17*x64*x70;
    const double x72 = x67*xi;
    const double x73 = x72*x8;
    const double x74 = 360*x33;
    const double x75 = x36*x65;
    const double x76 = x36*x72;
    const double x77 = x11*x23;
    const double x78 = x24*x44;
    const double x79 = x77*x78;
    const double x80 = x14*x70;
    const double x81 = x13*x46;
    const double x82 = 144*x33;
    const double x83 = x46*x62;
    const double x84 = x11*x30*x44;
    const double x85 = x11*x22;
    const double x86 = x8*x85;
    const double x87 = x22*x81;
    const double x88 = x11*x78;
    const double x89 = 4*x36;
    const double x90 = x31*x51;
    const double x91 = x33/x20;
    const double x92 = 50*x91;
    const double x93 = 40*x91;
    const double x94 = 8*x91;
    first[i] = x0*(x0*x5 - 4*x1*x17 + x10 + x13 + x14*x15 - x15*x18 + x25*x38*x39 + x26*x35 + x27*x33 - x27 - x28*x29 - x28*x37 + x3 - 30*x32*x8 - 75*x32 + x6*x9 + 5*x6);
    second[i] = x0*(-g*x12*x54 + x0*x44*x56 - x10*x43 + x10*xi + kPi*x12*x38*x52 + x12*x56*x61 + 2*x14*x2*x55 - pow(x2, 3)*x55 + x23*x81 - x29*x84 - x3*x43 + x3*xi + x33*x79 + x35*x88 - 120*x36*x41 + 60*x36*x57 + 168*x36*x69 - 84*x36*x71 - x37*x84 + x38*x44 + 10*x39*x88 - 16*x41*x50 - 300*x41*x8 - 250*x41 + x44*x5*x53 + x45*x48 + x45*x67 + x49*x60 + x49*x63 + 300*x49 + 8*x50*x57 + 80*x50*x65 + 64*x50*x72 + 3*x51 + 150*x57*x8 + x59*x60 + x59*x63 + 300*x59 - 4*x61*x62 - x65*x74 + x65*x92 + 375*x65 - x68*x82 + x68*x93 + 800*x68 + 840*x69*x8 + 1050*x69 - 420*x71*x8 - 525*x71 - x72*x74 + x72*x92 - x73*x82 + x73*x93 + 500*x73 + x75*x94 + 460*x75 + x76*x94 + 340*x76 + x77*x80 - x77*x83 - x79 + 20*x8*x87 - 40*x8*x90 + x80*x85*x89 + 20*x80*x86 - 10*x83*x86 + x87*x89 - 100*x90);
  }
}

}  // namespace dsw::manufactured::generated
