#pragma once

// Closed-form manufactured-solution fields and their derivatives.
// Implementations live in src/exact_fields_gen.cpp (machine generated).
//
// Output layouts:
//   *_fields:      out[0..1] value, out[2..5] gradient (u1x,u1y,u2x,u2y),
//                  out[6..11] Hessians (u1xx,u1xy,u1yy,u2xx,u2xy,u2yy)
//   *_laplacians:  example1: out[0..1] laplacian, out[2..3] bilaplacian
//                  example3: out[0..1] laplacian

namespace sgfem::gen {

void example1_fields(double x, double y, double* out);
void example1_laplacians(double x, double y, double* out);

void example2_fields(double x, double y, double mu, double C1, double C2, double* out);
void example2_divergence(double x, double y, double mu, double C1, double C2, double* out);

void example3_fields(double x, double y, double* out);
void example3_laplacians(double x, double y, double* out);

}  // namespace sgfem::gen
