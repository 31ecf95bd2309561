#!/usr/bin/env python3
"""Regenerates src/direction_numbers.inc from the Joe-Kuo table bundled with scipy."""
import os
import numpy as np
import scipy.stats

DIMS = 64
path = os.path.join(os.path.dirname(scipy.stats.__file__), "_sobol_direction_numbers.npz")
table = np.load(path)
poly, vinit = table["poly"], table["vinit"]

out = ["// Generated by scripts/gen_direction_numbers.py. Do not edit.",
       "// Joe-Kuo (new-joe-kuo-6.21201) primitive polynomials and initial direction numbers.",
       "// Entry d: {polynomial, degree, {m_1..m_degree}}. Dimension 0 is the van der Corput sequence."]
for d in range(DIMS):
    p = int(poly[d])
    deg = p.bit_length() - 1
    ms = ", ".join(str(int(v)) for v in vinit[d, :max(deg, 1)])
    out.append(f"{{{p}u, {deg}u, {{{ms}}}}},")
dst = os.path.join(os.path.dirname(__file__), "..", "src", "direction_numbers.inc")
with open(dst, "w") as fh:
    fh.write("\n".join(out) + "\n")
