"""A worked example: the Weitzenbock action on Q[x1, x2, x3].

D = x1 d/dx2 + x2 d/dx3 is locally nilpotent; its exponential fixes x1 and
x2^2 - 2*x1*x3. The script checks, for a handful of weights, that these
invariants have no intruder, that u = (w, -deg phi) has the required
properties, and that some variable fails to divide each initial form.
"""

from dataclasses import dataclass, field

from initforms import LND, Poly, Weight, build_u, find_nondividing, hull_vertices, initial_form, intruders, lnd_exp, parse_many


@dataclass
class WalkthroughConfig:
    derivation: list = field(default_factory=lambda: ["0", "x1", "x2"])
    invariants: list = field(default_factory=lambda: ["x1", "x2^2 - 2*x1*x3"])
    # extra invariants as products invariants[i] * invariants[j]
    products: list = field(default_factory=lambda: [(0, 1), (1, 1)])
    weights: list = field(default_factory=lambda: [[1, 1, 1], [1, 2, 3], [3, -1, 2], [[1, 0], [0, 1], [0, 0]]])


def main(cfg: WalkthroughConfig = WalkthroughConfig()):
    m = len(cfg.derivation)
    action = lnd_exp(LND(parse_many(cfg.derivation, m)))
    print("sigma:")
    for i, img in enumerate(action.images):
        print(f"  x{i + 1} -> {img}")

    fs = parse_many(cfg.invariants, m)
    fs += [fs[i] * fs[j] for i, j in cfg.products]
    phi = action.restrict(m)
    for f in fs:
        verts = [list(c.vertex) for c in hull_vertices(f.support())]
        print(f"\nf = {f}\n  vertices {verts}, intruders {intruders(f)}")

    for entries in cfg.weights:
        w = Weight.of(entries)
        data = build_u(phi, w.padded(m), w)
        r = find_nondividing(phi, Poly.gens(m), fs, w)
        inits = ", ".join(str(initial_form(f, w)) for f in fs)
        print(f"\nw = {entries}")
        print(f"  u = {data.u}, postconditions {'hold' if data.postconditions_hold else 'FAIL'}")
        print(f"  initial forms: {inits}")
        print(f"  {r.status.value}: nondividing {[str(g) for g in r.details.get('witnesses', [])]}")


if __name__ == "__main__":
    main()
