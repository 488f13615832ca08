"""
Delay growth on random triconnected planar graphs
=================================================

Delay is counted in generator events via a ``WorkMeter``. A log-log fit
of the largest gap against ``n`` estimates the polynomial degree. Pass
larger sizes on the command line for a longer ladder (160 takes minutes).
"""

import random
import sys

import numpy as np

from planar_pmc import generators as gen
from planar_pmc.meter import WorkMeter
from planar_pmc.pmc import pmcs

sizes = [int(a) for a in sys.argv[1:]] or [12, 20, 30, 40]
gaps = []
for n in sizes:
    g = gen.random_triconnected_planar(n, random.Random(n), kind="stacked")
    meter = WorkMeter()
    count = sum(1 for _ in pmcs(g, meter=meter))
    gaps.append(meter.max_gap)
    print(f"n={n:4}  |Pi|={count:5}  max gap={meter.max_gap:8}  mean gap={np.mean(meter.gaps):10.1f}")

# %%
x, y = np.log(sizes), np.log(gaps)
slope, intercept = np.polyfit(x, y, 1)
r2 = np.corrcoef(x, y)[0, 1] ** 2
print(f"max gap ~ n^{slope:.2f}  (R^2 = {r2:.3f})")
