// Generated by codegen/generate_exact_fields.py -- do not edit by hand.
#include "sgfem/exact_fields_gen.hpp"

#include <cmath>

namespace sgfem::gen {
void example1_fields(double x, double y, double* out) {
  const double x0 = M_PI*x;
  const double x1 = sin(x0);
  const double x2 = pow(x1, 3);
  const double x3 = M_PI*y;
  const double x4 = 2*x3;
  const double x5 = sin(x4);
  const double x6 = sin(x3);
  const double x7 = x5*x6;
  const double x8 = pow(x6, 3);
  const double x9 = 2*x0;
  const double x10 = sin(x9);
  const double x11 = x1*x10;
  const double x12 = cos(x0);
  const double x13 = pow(x1, 2);
  const double x14 = x12*x13;
  const double x15 = 3*M_PI;
  const double x16 = cos(x3);
  const double x17 = cos(x4);
  const double x18 = x16*x5 + 2*x17*x6;
  const double x19 = cos(x9);
  const double x20 = 2*x1*x19 + x10*x12;
  const double x21 = pow(x6, 2);
  const double x22 = x16*x21;
  const double x23 = pow(M_PI, 2);
  const double x24 = 3*x23;
  out[0] = -x2*x7;
  out[1] = x11*x8;
  out[2] = -x14*x15*x7;
  out[3] = -M_PI*x18*x2;
  out[4] = M_PI*x20*x8;
  out[5] = x11*x15*x22;
  out[6] = x1*x24*x7*(-2*pow(x12, 2) + x13);
  out[7] = -x14*x18*x24;
  out[8] = x2*x23*(-4*x16*x17 + 5*x7);
  out[9] = -x23*x8*(5*x11 - 4*x12*x19);
  out[10] = x20*x22*x24;
  out[11] = -x11*x24*x6*(-2*pow(x16, 2) + x21);
}

void example1_laplacians(double x, double y, double* out) {
  const double x0 = pow(M_PI, 2);
  const double x1 = M_PI*x;
  const double x2 = sin(x1);
  const double x3 = pow(x2, 2);
  const double x4 = cos(x1);
  const double x5 = pow(x4, 2);
  const double x6 = x3 - 2*x5;
  const double x7 = M_PI*y;
  const double x8 = sin(x7);
  const double x9 = 2*x7;
  const double x10 = x8*sin(x9);
  const double x11 = x10*x6;
  const double x12 = cos(x7);
  const double x13 = x12*cos(x9);
  const double x14 = 5*x10 - 4*x13;
  const double x15 = x14*x3;
  const double x16 = pow(x8, 2);
  const double x17 = pow(x12, 2);
  const double x18 = x16 - 2*x17;
  const double x19 = 2*x1;
  const double x20 = x2*sin(x19);
  const double x21 = x18*x20;
  const double x22 = x4*cos(x19);
  const double x23 = 5*x20 - 4*x22;
  const double x24 = x16*x23;
  const double x25 = pow(M_PI, 4);
  out[0] = x0*x2*(3*x11 + x15);
  out[1] = -x0*x8*(3*x21 + x24);
  out[2] = -x2*x25*(18*x10*x3 - 54*x10*x5 + 18*x11 - 12*x13*x6 - 6*x14*x5 + 3*x15 + x3*(41*x10 - 40*x13));
  out[3] = x25*x8*(18*x16*x20 + x16*(41*x20 - 40*x22) - 54*x17*x20 - 6*x17*x23 - 12*x18*x22 + 18*x21 + 3*x24);
}

void example2_fields(double x, double y, double mu, double C1, double C2, double* out) {
  const double x0 = atan2(y, x);
  const double x1 = (5.0/2.0)*x0;
  const double x2 = cos(x1);
  const double x3 = 2*C2;
  const double x4 = x3 - 5;
  const double x5 = (1.0/2.0)*x0;
  const double x6 = C1*cos(x5);
  const double x7 = x4*x6;
  const double x8 = -5*x2 + x7;
  const double x9 = x*x8;
  const double x10 = sin(x1);
  const double x11 = x3 + 1;
  const double x12 = C1*sin(x5);
  const double x13 = x11*x12;
  const double x14 = 5*x10 + x13;
  const double x15 = x14*y;
  const double x16 = -x15;
  const double x17 = pow(x, 2);
  const double x18 = pow(y, 2);
  const double x19 = x17 + x18;
  const double x20 = pow(x19, 1.0/4.0);
  const double x21 = 1.0/mu;
  const double x22 = (1.0/4.0)*x20*x21;
  const double x23 = x*x14;
  const double x24 = x8*y;
  const double x25 = 2*x20;
  const double x26 = x25*x8;
  const double x27 = pow(x19, -3.0/4.0);
  const double x28 = x*x27;
  const double x29 = x12*x4;
  const double x30 = -25*x10 + x29;
  const double x31 = x30*y;
  const double x32 = x28*x31;
  const double x33 = x17*x27;
  const double x34 = x11*x6;
  const double x35 = 25*x2 + x34;
  const double x36 = x18*x27;
  const double x37 = x15*x28;
  const double x38 = (1.0/8.0)*x21;
  const double x39 = x14*x25;
  const double x40 = x35*y;
  const double x41 = x28*x40;
  const double x42 = 2*y;
  const double x43 = x30*x42;
  const double x44 = 3*x9;
  const double x45 = 1.0/x19;
  const double x46 = pow(x, 3)*x45;
  const double x47 = (3.0/2.0)*x46;
  const double x48 = 100*x;
  const double x49 = 125*y;
  const double x50 = x10*x49;
  const double x51 = 4*x;
  const double x52 = x13*y;
  const double x53 = x2*x48 + x34*x51 - x50 - x52;
  const double x54 = x18*x45;
  const double x55 = (1.0/2.0)*x54;
  const double x56 = x2*x49;
  const double x57 = x7*y;
  const double x58 = -x10*x48 + x29*x51 - x56 + x57;
  const double x59 = x*x45;
  const double x60 = (1.0/2.0)*x59*y;
  const double x61 = x17*x45;
  const double x62 = (3.0/2.0)*x61;
  const double x63 = x*x54;
  const double x64 = x35*x63;
  const double x65 = x31*x61;
  const double x66 = x64 + x65;
  const double x67 = x27*x38;
  const double x68 = 2*x;
  const double x69 = x30*x68;
  const double x70 = 100*x54;
  const double x71 = 4*x54;
  const double x72 = x2*x70 - 50*x2 + x34*x71 - 2*x34 + x50*x59 + x52*x59;
  const double x73 = x10*x70 - 50*x10 - x29*x71 + 2*x29 - x56*x59 + x57*x59;
  const double x74 = x35*x42;
  const double x75 = x45*pow(y, 3);
  const double x76 = 3*x23;
  const double x77 = 3*x24;
  const double x78 = x40*x61;
  const double x79 = x30*x63;
  const double x80 = x78 - x79;
  const double x81 = (1.0/16.0)*x21*x27;
  const double x82 = x35*x68;
  const double x83 = 3*x15;
  const double x84 = 125*x;
  const double x85 = 100*y;
  const double x86 = 4*y;
  const double x87 = x*x7 + x10*x85 - x2*x84 - x29*x86;
  const double x88 = (1.0/2.0)*x61;
  const double x89 = (3.0/2.0)*x75;
  const double x90 = x*x13 + x10*x84 + x2*x85 + x34*x86;
  const double x91 = (3.0/2.0)*x54;
  out[0] = x22*(x16 + x9);
  out[1] = x22*(x23 + x24);
  out[2] = x38*(x26 + x32 + x33*x8 + x35*x36 - x37);
  out[3] = x38*(x*x27*x8*y - x14*x36 - x30*x33 - x39 - x41);
  out[4] = x38*(x14*x33 + x27*x9*y + x30*x36 + x39 - x41);
  out[5] = x38*(x26 - x32 + x33*x35 + x36*x8 + x37);
  out[6] = x67*(x15*x62 + x16 + x43 + x44 - x47*x8 - x53*x55 - x58*x60 + x66);
  out[7] = -x81*(-x*x73 + 2*x23 - 2*x24 + x30*x46 - x35*x75 - x54*x76 + x61*x77 + x69 + x72*y - x74 + x80);
  out[8] = -x67*(-x14*x89 - x60*x90 + x66 + x82 + x83 + x87*x88 + x9*x91 - x9);
  out[9] = -x67*(x14*x47 + x24*x62 - x24 - x53*x60 + x55*x58 + x74 - x76 + x80);
  out[10] = x81*(x*x72 + 2*x15 + x30*x75 + x35*x46 + x43 - x44*x54 - x61*x83 - x64 - x65 + x73*y + x82 + 2*x9);
  out[11] = -x67*(x23*x91 - x23 + x60*x87 + x69 - x77 - x78 + x79 + x8*x89 + x88*x90);
}

void example2_divergence(double x, double y, double mu, double C1, double C2, double* out) {
  const double x0 = pow(x, 2);
  const double x1 = pow(y, 2);
  const double x2 = x0 + x1;
  const double x3 = atan2(y, x);
  const double x4 = cos((5.0/2.0)*x3);
  const double x5 = 2*C2;
  const double x6 = C1*cos((1.0/2.0)*x3);
  const double x7 = -5*x4 + x6*(x5 - 5);
  const double x8 = pow(x2, -3.0/4.0);
  const double x9 = x0*x8;
  const double x10 = 25*x4 + x6*(x5 + 1);
  const double x11 = x1*x8;
  out[0] = (1.0/8.0)*(x10*x11 + x10*x9 + x11*x7 + 4*pow(x2, 1.0/4.0)*x7 + x7*x9)/mu;
}

void example3_fields(double x, double y, double* out) {
  const double x0 = M_PI*y;
  const double x1 = 2*x0;
  const double x2 = sin(x1);
  const double x3 = M_PI*x;
  const double x4 = sin(x3);
  const double x5 = pow(x4, 2);
  const double x6 = x2*x5;
  const double x7 = 2*x3;
  const double x8 = sin(x7);
  const double x9 = sin(x0);
  const double x10 = pow(x9, 2);
  const double x11 = x10*x8;
  const double x12 = 2*M_PI;
  const double x13 = cos(x3);
  const double x14 = x13*x4;
  const double x15 = cos(x1);
  const double x16 = cos(x7);
  const double x17 = cos(x0);
  const double x18 = x17*x9;
  const double x19 = pow(M_PI, 2);
  const double x20 = 2*x19;
  const double x21 = 4*x19;
  out[0] = -x6;
  out[1] = x11;
  out[2] = -x12*x14*x2;
  out[3] = -x12*x15*x5;
  out[4] = x10*x12*x16;
  out[5] = x12*x18*x8;
  out[6] = x2*x20*(-pow(x13, 2) + x5);
  out[7] = -x14*x15*x21;
  out[8] = x21*x6;
  out[9] = -x11*x21;
  out[10] = x16*x18*x21;
  out[11] = -x20*x8*(x10 - pow(x17, 2));
}

void example3_laplacians(double x, double y, double* out) {
  const double x0 = M_PI*x;
  const double x1 = M_PI*y;
  const double x2 = 2*pow(M_PI, 2);
  out[0] = x2*(3*pow(sin(x0), 2) - pow(cos(x0), 2))*sin(2*x1);
  out[1] = -x2*(3*pow(sin(x1), 2) - pow(cos(x1), 2))*sin(2*x0);
}
}  // namespace sgfem::gen
