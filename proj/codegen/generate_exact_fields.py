#!/usr/bin/env python3
"""Generate closed-form derivative code for the manufactured solutions.

Writes src/exact_fields_gen.cpp. Run from the repository root:

    python3 codegen/generate_exact_fields.py
"""
import sympy as sp
from sympy.printing.c import C99CodePrinter

x, y = sp.symbols("x y", real=True)
mu, C1, C2 = sp.symbols("mu C1 C2", real=True)

printer = C99CodePrinter()


def emit(name, exprs, params, out):
    """Emit void name(double x, double y, <params>, double* out) with cse."""
    repl, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    args = ["double x", "double y"] + [f"double {p}" for p in params] + ["double* out"]
    lines.append(f"void {name}({', '.join(args)}) {{")
    for sym, e in repl:
        lines.append(f"  const double {sym} = {printer.doprint(e)};")
    for i, e in enumerate(reduced):
        lines.append(f"  out[{i}] = {printer.doprint(e)};")
    lines.append("}")
    out.append("\n".join(lines))


def field_block(u1, u2):
    """value(2), grad(4: u1x,u1y,u2x,u2y), hess(6: u1xx,u1xy,u1yy,u2xx,u2xy,u2yy)"""
    g = [sp.diff(u1, x), sp.diff(u1, y), sp.diff(u2, x), sp.diff(u2, y)]
    h = [sp.diff(u1, x, 2), sp.diff(u1, x, y), sp.diff(u1, y, 2),
         sp.diff(u2, x, 2), sp.diff(u2, x, y), sp.diff(u2, y, 2)]
    return [u1, u2] + g + h


blocks = []

# --- example 1: incompressible trigonometric field -------------------------
pi = sp.pi
u1 = -sp.sin(pi * x) ** 3 * sp.sin(2 * pi * y) * sp.sin(pi * y)
u2 = sp.sin(2 * pi * x) * sp.sin(pi * x) * sp.sin(pi * y) ** 3
lap = [sp.diff(u1, x, 2) + sp.diff(u1, y, 2), sp.diff(u2, x, 2) + sp.diff(u2, y, 2)]
bilap = [sp.diff(lap[0], x, 2) + sp.diff(lap[0], y, 2),
         sp.diff(lap[1], x, 2) + sp.diff(lap[1], y, 2)]
emit("example1_fields", field_block(u1, u2), [], blocks)
emit("example1_laplacians", lap + bilap, [], blocks)

# --- example 2: singular corner field (polar), f == 0 ----------------------
alpha = sp.Rational(3, 2)
rho = sp.sqrt(x * x + y * y)
th = sp.atan2(y, x)
ur = (rho ** alpha / (2 * mu)) * (-(alpha + 1) * sp.cos((alpha + 1) * th)
                                  + (C2 - (alpha + 1)) * C1 * sp.cos((alpha - 1) * th))
ut = (rho ** alpha / (2 * mu)) * ((alpha + 1) * sp.sin((alpha + 1) * th)
                                  + (C2 + alpha - 1) * C1 * sp.sin((alpha - 1) * th))
v1 = ur * sp.cos(th) - ut * sp.sin(th)
v2 = ur * sp.sin(th) + ut * sp.cos(th)
div2 = sp.diff(v1, x) + sp.diff(v2, y)
emit("example2_fields", field_block(v1, v2), ["mu", "C1", "C2"], blocks)
emit("example2_divergence", [div2], ["mu", "C1", "C2"], blocks)

# --- example 3: limit (second-order) solution ------------------------------
w1 = -sp.sin(pi * x) ** 2 * sp.sin(2 * pi * y)
w2 = sp.sin(2 * pi * x) * sp.sin(pi * y) ** 2
lap0 = [sp.diff(w1, x, 2) + sp.diff(w1, y, 2), sp.diff(w2, x, 2) + sp.diff(w2, y, 2)]
emit("example3_fields", field_block(w1, w2), [], blocks)
emit("example3_laplacians", lap0, [], blocks)

header = """// Generated by codegen/generate_exact_fields.py -- do not edit by hand.
#include "sgfem/exact_fields_gen.hpp"

#include <cmath>

namespace sgfem::gen {
"""
footer = "\n}  // namespace sgfem::gen\n"
with open("src/exact_fields_gen.cpp", "w") as fh:
    fh.write(header)
    fh.write("\n\n".join(blocks))
    fh.write(footer)
print("wrote src/exact_fields_gen.cpp")
