"""
Tracing the recursive expansion
===============================

The engine starts from ``M^{d+1}(f^*w)`` and alternates two rewrites: the
Quot-formula step that splits a 1-stable node into binomially many 0-stable
ones, and a twist by ``O(C)`` that turns a 0-stable node back into a 1-stable
one. Here ``w = (1, 0, -3)`` on a K3 surface, so terminal nodes are Hilbert
schemes ``Hilb^{3-j}``; the ones with negative expected dimension are empty.
"""

import json

from qnk import BaseClass, PRESETS
from qnk.sod import run

res = run(BaseClass.hilbert(3), d=1, j_max=4, surface=PRESETS["k3"])

for step in res.state.steps[:8]:
    print(step["rule"], "from node", step["parent_id"], "->",
          [(c["id"], c["k"], c["multiplicity"]) for c in step["children"]])
print("...")
print(json.dumps(res.terminal_rows(), indent=1))
