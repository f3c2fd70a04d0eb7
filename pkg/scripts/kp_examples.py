"""KP identities of the bundled algebra identities, then BSO expansions of the basic operations.

    python3 scripts/kp_examples.py [label ...]
"""
import sys

from dialg import bso_family, corpus, kp_transform, parse_poly, to_text
from dialg.kp import KPError

OPERATIONS = {
    "commutator": "x*y - y*x",
    "associator": "as(x,y,z)",
    "jacobian": "J(x,y,z)",
    "s-function": "S(x,y,z)",
}


def main(labels):
    for ident in corpus("algebra").identities:
        if (labels and ident.label not in labels) or not ident.poly:
            continue
        print(f"== {ident.label}: {to_text(ident.poly)}")
        try:
            res = kp_transform(ident)
        except KPError as e:
            print(f"   skipped: {e}")
            continue
        for k in res.kp_identities:
            dup = f"  (same as [{k.duplicate_of}])" if k.duplicate_of else ""
            print(f"   [{k.central}] {to_text(k.identity.poly)}{dup}")

    for name, text in OPERATIONS.items():
        if labels and name not in labels:
            continue
        fam = bso_family(parse_poly(text))
        print(f"== bso {name}: {text}")
        for i, out in enumerate(fam.outputs, 1):
            print(f"   w{i} {to_text(out)}")
        for r in fam.relations:
            print(f"   {r.describe(fam.args)}")


if __name__ == "__main__":
    main(sys.argv[1:])
