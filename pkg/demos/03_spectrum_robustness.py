"""Eigenvalue analysis: how robust is the entanglement of each family?

For M = 7, the chain-phase metric keeps all seven eigenvalues away from
zero at every interior angle, so a variation along a randomly chosen axis
combination never collapses the distance.  The GHZ-like metric is rank one:
a single large eigenvalue and M-1 flat directions.
"""
from pathlib import Path

import numpy as np

from entdist import brs_state, entanglement_metric, ghzl_state, spectrum
from entdist.cli import _csv_text

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)
M = 7

# chain-phase eigenvalues over the full angle range
rows = []
for phi in np.linspace(0.0, 2.0 * np.pi, 201):
    eigs = spectrum(entanglement_metric(brs_state(M, phi))).eigenvalues
    rows.append([phi / (2.0 * np.pi), *map(float, eigs)])
header = ["x"] + [f"eig_{i}" for i in range(1, M + 1)]
(OUT / "chain_phase_m7_eigs.csv").write_text(_csv_text(header, rows))

interior = [row for row in rows if 0.0 < row[0] < 1.0]
smallest = min(min(row[1:]) for row in interior)
print(f"chain-phase M={M}: smallest interior eigenvalue = {smallest:.3e} (> 0)")

# GHZ-like: only the top eigenvalue is nonzero
rows = []
for theta in np.linspace(0.0, np.pi / 2.0, 201):
    eigs = spectrum(entanglement_metric(ghzl_state(M, theta))).eigenvalues
    rows.append([2.0 * theta / np.pi, *map(float, eigs)])
(OUT / "ghz_like_m7_eigs.csv").write_text(_csv_text(header, rows))

mid = rows[100]  # theta = pi/4
print(f"GHZ-like M={M} at the maximum: top eigenvalue = {mid[1]:.4f} (= M/4),"
      f" second = {mid[2]:.1e}")
print("The GHZ-like top eigenvalue exceeds every chain-phase eigenvalue, but")
print("its metric has M-1 null directions: strong yet fragile entanglement.")
print("Wrote", OUT / "chain_phase_m7_eigs.csv")
print("Wrote", OUT / "ghz_like_m7_eigs.csv")
