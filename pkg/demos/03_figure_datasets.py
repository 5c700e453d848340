"""Regenerate the four bundled figure datasets as CSV files.

Writes one file per (family, wedge, q_r[, F]) series into ./figure_data,
ready for any plotting tool.  Rerunning produces byte-identical files.
"""

from pathlib import Path

from unruh_lab import FigurePreset, OutputFormat, figure_preset, run_sweep, write_figure_files

OUT_DIR = Path("figure_data")

for figure in FigurePreset:
    spec = figure_preset(figure)
    records = run_sweep(spec)
    written = write_figure_files(figure, records, spec, OUT_DIR, OutputFormat("csv"))
    families = ", ".join(f.value for f in spec.families)
    print(f"{figure.value}: {len(written)} series files ({families})")

print(f"\nall files in {OUT_DIR.resolve()}")
print("columns: family,region,gamma,q_r,alpha,f,s_a,s_b,s_ab,mutual_info,cond_entropy,ssa_value")
