from collections import Counter

import numpy as np
import pytest

from texsup import (
    Method,
    PlaneImage,
    PolicyKind,
    PolicySpec,
    SeededRng,
    apply,
    diffuse,
    perona_malik_spec,
    sample,
)
from texsup.policy import apply_patchwise
from texsup.rng import derive_stream_seed

DOUBLE = PolicySpec(PolicyKind.DOUBLE)
MIX = PolicySpec(PolicyKind.MOCOV2_MIX)
JIGSAW = PolicySpec(PolicyKind.PATCH_JIGSAW)


class TestSeededRng:
    def test_same_seed_same_sequence(self):
        a, b = SeededRng(12345), SeededRng(12345)
        assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]

    def test_random_in_unit_interval(self):
        rng = SeededRng(7)
        vals = [rng.random() for _ in range(10000)]
        assert all(0.0 <= v < 1.0 for v in vals)
        assert abs(sum(vals) / len(vals) - 0.5) < 0.02

    def test_randint_inclusive_and_uniform(self):
        rng = SeededRng(99)
        counts = Counter(rng.randint(10, 20) for _ in range(110000))
        assert set(counts) == set(range(10, 21))
        for v in counts.values():
            assert abs(v - 10000) < 500

    def test_derive_stream_seed_distinct(self):
        seeds = {derive_stream_seed(42, i) for i in range(1000)}
        assert len(seeds) == 1000


class TestSample:
    def test_double_is_deterministic(self):
        for seed in (0, 1, 2**63):
            specs = sample(DOUBLE, SeededRng(seed))
            assert [s.method for s in specs] == [Method.IDENTITY, Method.DIFFUSION]
            d = specs[1].params
            assert d.conduction.scale == 20.0
            assert d.iterations == 20
            assert d.time_step == 0.1

    def test_mix_branch_frequencies(self):
        rng = SeededRng(2024)
        counts = Counter(sample(MIX, rng)[0].method for _ in range(100000))
        assert abs(counts[Method.DIFFUSION] / 1e5 - 0.50) < 0.005
        assert abs(counts[Method.GAUSSIAN] / 1e5 - 0.25) < 0.005
        assert abs(counts[Method.IDENTITY] / 1e5 - 0.25) < 0.005

    def test_mix_parameter_ranges_covered(self):
        rng = SeededRng(7)
        iters, radii = set(), set()
        for _ in range(100000):
            s = sample(MIX, rng)[0]
            if s.method is Method.DIFFUSION:
                iters.add(s.params.iterations)
            elif s.method is Method.GAUSSIAN:
                radii.add(s.params.radius)
        assert iters == set(range(10, 21))
        assert radii == set(range(10, 21))

    def test_same_seed_same_specs(self):
        seq1 = [sample(MIX, SeededRng(5))[0] for _ in range(1)]
        a = SeededRng(5)
        b = SeededRng(5)
        assert [sample(MIX, a) for _ in range(200)] == [sample(MIX, b) for _ in range(200)]

    def test_jigsaw_returns_nine_specs(self):
        specs = sample(JIGSAW, SeededRng(3))
        assert len(specs) == 9
        assert all(s.method in (Method.IDENTITY, Method.DIFFUSION) for s in specs)


class _ForcedRng(SeededRng):
    """Draws a constant unit-interval value; integers still advance."""

    def __init__(self, value):
        super().__init__(0)
        self._value = value

    def random(self):
        return self._value


class TestApply:
    def test_double_emits_original_plus_filtered(self, random_rgb):
        outs = apply(DOUBLE, random_rgb, SeededRng(1))
        assert len(outs) == 2
        assert np.array_equal(outs[0].planes, random_rgb.planes)
        expected = diffuse(random_rgb, perona_malik_spec())
        assert np.array_equal(outs[1].planes, expected.planes)

    def test_jigsaw_all_heads_matches_crop_oracle(self, rng):
        planes = rng.uniform(0, 255, size=(1, 12, 12))
        img = PlaneImage(planes)
        outs = apply(JIGSAW, img, _ForcedRng(0.0))
        assert len(outs) == 1
        spec = perona_malik_spec()
        expected = np.empty_like(planes)
        for gy in range(3):
            for gx in range(3):
                ys, xs = slice(gy * 4, gy * 4 + 4), slice(gx * 4, gx * 4 + 4)
                expected[:, ys, xs] = diffuse(PlaneImage(planes[:, ys, xs].copy()), spec).planes
        assert np.array_equal(outs[0].planes, expected)

    def test_jigsaw_all_tails_is_identity(self, rng):
        planes = rng.uniform(0, 255, size=(3, 9, 9))
        outs = apply(JIGSAW, PlaneImage(planes), _ForcedRng(0.999))
        assert np.array_equal(outs[0].planes, planes)

    def test_jigsaw_undiffused_patches_bit_identical(self, rng):
        planes = rng.uniform(0, 255, size=(1, 12, 12))
        img = PlaneImage(planes)
        specs = sample(JIGSAW, SeededRng(11))
        out = apply_patchwise(img, specs)
        for i, s in enumerate(specs):
            gy, gx = divmod(i, 3)
            ys, xs = slice(gy * 4, gy * 4 + 4), slice(gx * 4, gx * 4 + 4)
            if s.method is Method.IDENTITY:
                assert np.array_equal(out.planes[:, ys, xs], planes[:, ys, xs])
            else:
                assert not np.array_equal(out.planes[:, ys, xs], planes[:, ys, xs])

    def test_jigsaw_rejects_indivisible_dimensions(self, rng):
        img = PlaneImage(rng.uniform(0, 255, size=(1, 10, 12)))
        with pytest.raises(ValueError, match="divisible by 3"):
            apply(JIGSAW, img, SeededRng(0))

    def test_dimensions_preserved(self, random_rgb):
        for policy in (MIX, DOUBLE):
            for out in apply(policy, random_rgb, SeededRng(8)):
                assert out.planes.shape == random_rgb.planes.shape
