"""The spider relation on finite truncations.

The infinite spider keeps the hub alive in its generalized image.  Cut it
off at a finite number of orbits and every path dies out, so the
generalized image is zero and the Leray form is the zero object.
"""

from linrel.dynamics import gim, leray
from linrel.spider import build_spider, expected_power_kernel, verify_appendix

for n in range(1, 6):
    s = build_spider(n)
    dims = [expected_power_kernel(s, k).dim for k in range(1, n + 1)]
    print(f"N={n}: dim {s.dim:>2}, kernel dims {dims}, gim dim {gim(s.obj).dim}, leray dim {leray(s.obj).dim}")

report = verify_appendix(4, 3)
for check in report["checks"]:
    print(f"  {check['check']:<24} {'ok' if check['passed'] else 'FAILED'}")
