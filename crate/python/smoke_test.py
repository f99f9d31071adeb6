#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds the extension crate with cargo, stages the shared library as
``extbundle.so`` in a temp directory, imports it, and checks a handful of
known values end to end.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_module(tmp: Path) -> None:
    subprocess.run(
        ["cargo", "build", "-p", "extbundle-py"], cwd=ROOT, check=True
    )
    built = ROOT / "target" / "debug" / "libextbundle_py.so"
    shutil.copy(built, tmp / "extbundle.so")


def main() -> None:
    with tempfile.TemporaryDirectory() as d:
        tmp = Path(d)
        build_module(tmp)
        sys.path.insert(0, str(tmp))
        import extbundle

        w = extbundle.Weights(2, 3, 7)
        assert w.weights == (2, 3, 7)
        assert w.weight_class == "wild"
        assert w.lcm == 42
        assert w.k0_rank == 11
        assert w.index_mod_omega() == 1
        assert str(w.omega()) == "x1+2x2+6x3-2c"
        assert w.orbit_count() == 3
        assert w.orbit_count_burnside() == 3
        assert len(w.orbit_blocks()) == 3
        assert w.tau_orbit_count() == 3
        assert w.tau_orbit_count_brute() == 3
        assert w.fixed_points() == (0, 0, 0)
        assert not w.is_transitive()
        assert extbundle.Weights(2, 2, 2).is_transitive()

        x = w.parse("x2+5x3")
        assert x.coords == (0, 1, 5)
        assert x.c == 0
        assert x.delta == 44
        assert w.omega() + w.gen(0) == w.xbar(0)
        assert w.omega().scaled(5).in_z_omega() == 5
        assert len(w.interiors()) == 12

        e = extbundle.Bundle(x)
        assert e.is_auslander()
        assert str(e.canonical_interior()) == "0"
        assert e.slope() == "45/2"
        assert e.stability() == "not-semistable"
        assert e.rank() == 2 and e.degree() == 45
        assert len(e.cover()) == 4 and len(e.hull()) == 4
        assert str(e.hull()[0]) == "x2+5x3"

        z = w.parse("x2+x3-c")
        other = extbundle.Bundle(x, z)
        assert extbundle.Bundle(w.zero()).isomorphic_to(other)
        assert not extbundle.Bundle(w.zero()).isomorphic_to(e)
        assert str(e.suspend(0).twist) == "x1"
        assert "slope" in e.report_json()

        try:
            extbundle.Weights(3, 3, 3).tau_orbit_count()
        except ValueError as err:
            assert "tubular" in str(err)
        else:
            raise AssertionError("tubular weights must be rejected")

        t = extbundle.Tilting(w, "t1")
        assert t.end_dim == 33
        assert t.extension_free is True
        assert len(t.summands) == 12
        assert t.pairwise_nonisomorphic()
        assert t.arrow_counts() == (10, 6, 0)
        assert t.to_dot().startswith("digraph")
        cub = extbundle.Tilting(w, "cub")
        assert cub.end_dim is None and len(cub.summands) == 12

        passed, suites = extbundle.selftest(3)
        assert passed, suites
        assert len(suites) == 9

        print("smoke test passed")


if __name__ == "__main__":
    main()
