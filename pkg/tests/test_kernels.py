"""The compiled kernels must agree with the pure-Python reference, and
the backend switch must honor the environment override."""

import os
import subprocess
import sys

import pytest

import lrcmat as L
from lrcmat._kernels import _pure

try:
    from lrcmat._kernels import _fast
except ImportError:
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled kernels unavailable")


class TestPureKernels:
    def test_rank_table_from_flats_uniform(self):
        # U(4, 2) described by its two cyclic flats
        table = _pure.rank_table_from_flats(4, [0, 0b1111], [0, 2])
        assert table == list(L.Matroid.uniform(4, 2).rank_table())

    def test_rank_table_from_independent(self, u42):
        fam = list(u42.independent_sets())
        table = _pure.rank_table_from_independent(4, fam)
        assert table == list(u42.rank_table())

    def test_max_deficient_size(self, two_atom):
        table = list(two_atom.rank_table())
        # the largest below-full-rank set is an atom plus extras
        assert _pure.max_deficient_size(table, 6) == 4

    def test_max_deficient_size_free_matroid(self):
        # every proper subset of a free matroid is below full rank
        table = list(L.Matroid.uniform(3, 3).rank_table())
        assert _pure.max_deficient_size(table, 3) == 2

    def test_max_deficient_size_rank_zero(self):
        assert _pure.max_deficient_size([0, 0], 1) == -1


@needs_fast
class TestBackendAgreement:
    def test_on_corpus(self, corpus):
        for _kind, m, _params in corpus[:60]:
            flats = m.lattice.flats
            masks = [f for f, _ in flats]
            ranks = [r for _, r in flats]
            t_pure = _pure.rank_table_from_flats(m.n, masks, ranks)
            t_fast = _fast.rank_table_from_flats(m.n, masks, ranks)
            assert list(t_pure) == list(t_fast)
            assert (_pure.max_deficient_size(t_pure, m.n)
                    == _fast.max_deficient_size(t_fast, m.n))

    def test_independent_family_path(self, u42, two_atom):
        for m in (u42, two_atom):
            fam = list(m.independent_sets())
            assert (list(_pure.rank_table_from_independent(m.n, fam))
                    == list(_fast.rank_table_from_independent(m.n, fam)))

    def test_random_flat_lists(self):
        import random
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 8)
            count = rng.randint(1, 5)
            masks = [rng.randrange(1 << n) for _ in range(count)]
            ranks = [rng.randint(0, max(m.bit_count(), 0)) for m in masks]
            assert (list(_pure.rank_table_from_flats(n, masks, ranks))
                    == list(_fast.rank_table_from_flats(n, masks, ranks)))


class TestBackendSelection:
    def test_backend_reported(self):
        assert L.KERNEL_BACKEND in ("pure", "compiled")

    def test_env_override_forces_pure(self):
        env = dict(os.environ, LRCMAT_PURE_KERNELS="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "import lrcmat; print(lrcmat.KERNEL_BACKEND)"],
            capture_output=True, text=True, env=env, check=True)
        assert out.stdout.strip() == "pure"

    @needs_fast
    def test_default_prefers_compiled(self):
        env = {k: v for k, v in os.environ.items() if k != "LRCMAT_PURE_KERNELS"}
        out = subprocess.run(
            [sys.executable, "-c",
             "import lrcmat; print(lrcmat.KERNEL_BACKEND)"],
            capture_output=True, text=True, env=env, check=True)
        assert out.stdout.strip() == "compiled"

    def test_results_identical_under_override(self, t11_10_5):
        doc = L.dumps_canonical(L.matroid_to_doc(t11_10_5))
        script = ("import sys; import lrcmat as L\n"
                  "from lrcmat.serialization import loads\n"
                  "m = L.matroid_from_doc(loads(sys.stdin.read()))\n"
                  "print(L.params_from_matroid(m))")
        outs = []
        for force in ("0", "1"):
            env = dict(os.environ, LRCMAT_PURE_KERNELS=force)
            res = subprocess.run([sys.executable, "-c", script], input=doc,
                                 capture_output=True, text=True, env=env,
                                 check=True)
            outs.append(res.stdout)
        assert outs[0] == outs[1] == "(10, 5, 5)\n"
