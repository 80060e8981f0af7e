"""Analyze the four symbolic fan families and contrast their verdicts.

The gallery spans the interesting corners: a unit with a non-Hausdorff
maximal d-spectrum (omega_fans), a compact Hausdorff spectrum without a
unit (chain_fans), a regular atomic case (bare_fan), and the minimal
regularity failure (fan_plus_bottom).
"""

import json

from priestley import spectrum as sp
from priestley.fans import FAMILIES, engine_for, spine_point, tame_to_json

for family in FAMILIES:
    E = engine_for(family)
    report = sp.spectrum_report(E)
    print("=" * 64)
    print(report.to_text())

print("=" * 64)

# The cofinite topology on the spine of omega_fans, concretely: the
# complement of the downset of one bottom point is a clopen upset whose
# trace on min Y_d misses exactly that point.
E = engine_for("omega_fans")
u = E.diff(E.full, E.down(E.point_set(spine_point(3))))
trace = E.meet(u, sp.min_yd(E))
print("clopen upset avoiding y(3):")
print(json.dumps(tame_to_json(u), indent=2, sort_keys=True))
print("its trace on min Y_d:", E.describe_set(trace))
print("d fixes it:", sp.d_apply(E, u) == u)

# Chain fans: the top blob certifies that no unit exists.
E = engine_for("chain_fans")
unit = sp.unit_search(E)
print("chain_fans unit search:", unit["status"], "via", unit["certificate"])
