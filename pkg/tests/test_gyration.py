from __future__ import annotations

import random

import pytest

from pasmkit import Dims, Pasm, PartialFpl, PartialHeightFunction, convert
from pasmkit.bijections import fpl_to_height, height_to_fpl, height_to_ideal, pasm_to_height
from pasmkit.enumeration import asm_count, enumerate_pasm
from pasmkit.grid import FaceKind, action_faces, face_kind, face_sides
from pasmkit.gyration import (
    check_partial_rotation,
    complete_to_asm,
    exit_labels,
    fpl_key,
    gyrate,
    gyrate_inverse,
    height_flip,
    is_asm,
    link_pattern,
    local_move,
    move_kind,
)
from pasmkit.objects import link_label_count, total_sum, validate
from pasmkit.poset import gyr, gyr_inverse, toggle, toggle_fiber
from pasmkit.poset import fiber_size

from conftest import HSTAR


def _fpls(m, n):
    return [convert(M, "fpl") for M in enumerate_pasm(Dims(m, n))]


def _with(dims, *sides_by_face):
    edges = set()
    for face, names in sides_by_face:
        s = face_sides(face)
        edges |= {s[x] for x in names}
    return PartialFpl(dims, frozenset(edges))


# --- local moves ------------------------------------------------------------------------


def test_interior_swap():
    d = Dims(3, 3)
    F = _with(d, ((1, 1), ("top", "bottom")))
    G = local_move(F, (1, 1))
    assert G == _with(d, ((1, 1), ("left", "right")))
    assert move_kind(F, (1, 1)) == "interior-swap"
    assert local_move(G, (1, 1)) == F


def test_right_exterior_swap():
    d = Dims(3, 3)
    assert face_kind(d, (1, 3)) is FaceKind.RIGHT
    F = _with(d, ((1, 3), ("left",)))
    assert local_move(F, (1, 3)) == _with(d, ((1, 3), ("top", "bottom")))
    assert move_kind(F, (1, 3)) == "right-exterior-swap"


def test_bottom_exterior_swap():
    d = Dims(3, 3)
    F = _with(d, ((3, 1), ("top",)))
    assert local_move(F, (3, 1)) == _with(d, ((3, 1), ("left", "right")))
    assert move_kind(F, (3, 1)) == "bottom-exterior-swap"


def test_corner_exterior_swap():
    d = Dims(3, 3)
    F = _with(d, ((3, 3), ("left",)))
    assert local_move(F, (3, 3)) == _with(d, ((3, 3), ("top",)))
    assert move_kind(F, (3, 3)) == "corner-exterior-swap"


def test_moves_that_do_nothing():
    d = Dims(3, 3)
    for face, names in [((1, 1), ("top", "left")), ((1, 3), ("left", "top")), ((3, 3), ("left", "top"))]:
        F = _with(d, (face, names))
        assert local_move(F, face) == F
        assert move_kind(F, face) == "noop"
    F = _with(d, ((0, 1), ("bottom", "left")))
    assert local_move(F, (0, 1)) == F


def test_out_of_range_face():
    F = _fpls(2, 2)[0]
    with pytest.raises(ValueError):
        local_move(F, (3, 1))
    with pytest.raises(ValueError):
        height_flip(convert(Pasm.zero(Dims(2, 2)), "height"), 0, 1)


def test_local_move_involution_22():
    for F in _fpls(2, 2):
        for face in action_faces(F.dims):
            G = local_move(F, face)
            assert validate(G).ok
            assert local_move(G, face) == F


def test_three_descriptions_agree_33():
    for m in range(1, 4):
        for n in range(1, 4):
            for F in _fpls(m, n):
                h = fpl_to_height(F)
                X = height_to_ideal(h)
                for i, j in action_faces(F.dims):
                    h2 = height_flip(h, i, j)
                    assert fpl_to_height(local_move(F, (i, j))) == h2
                    assert height_to_ideal(h2) == toggle_fiber(X, i - 1, j - 1)
                    movable = [t for t in range(fiber_size(i - 1, j - 1)) if toggle(X, (i - 1, j - 1, t)) != X]
                    assert len(movable) == (1 if h2 != h else 0)


# --- gyration --------------------------------------------------------------------------------


def test_gyration_validity_and_inverse():
    for m in range(1, 5):
        for n in range(1, 5):
            for F in _fpls(m, n):
                G = gyrate(F)
                assert validate(G).ok
                assert gyrate_inverse(G) == F


def test_parity_transport():
    for m, n in [(2, 2), (2, 3), (3, 3), (3, 2), (1, 4)]:
        for F in _fpls(m, n):
            X = height_to_ideal(fpl_to_height(F))
            Y = height_to_ideal(fpl_to_height(gyrate(F)))
            expect = gyr(X) if (m + n) % 2 == 0 else gyr_inverse(X)
            assert Y == expect


def test_sweep_order_within_parity_irrelevant():
    rng = random.Random(3)
    for m, n in [(2, 3), (3, 3), (3, 4)]:
        faces = action_faces(Dims(m, n))
        for F in _fpls(m, n):
            G = F
            for p in (0, 1):
                group = [f for f in faces if (f[0] + f[1]) % 2 == p]
                rng.shuffle(group)
                for f in group:
                    G = local_move(G, f)
            assert G == gyrate(F)


def test_gyration_stages_on_running_example(mstar):
    F = convert(mstar, "fpl")
    h = PartialHeightFunction(Dims(4, 4), HSTAR)
    for p in (0, 1):
        for i, j in action_faces(h.dims):
            if (i + j) % 2 == p:
                h = height_flip(h, i, j)
    assert gyrate(F) == height_to_fpl(h)


# --- link patterns -------------------------------------------------------------------------


def test_label_positions():
    labels = exit_labels(Dims(5, 7))
    assert len(labels) == link_label_count(Dims(5, 7)) == 6
    assert labels[(4, 0)] == 1 and labels[(2, 0)] == 2
    assert [labels[(0, j)] for j in (1, 3, 5, 7)] == [3, 4, 5, 6]


def test_zero_matrix_link_pattern_22():
    F = convert(Pasm.zero(Dims(2, 2)), "fpl")
    assert link_pattern(F).arcs == frozenset()


def test_mstar_link_pattern(mstar):
    assert link_pattern(convert(mstar, "fpl")).arcs == frozenset({(2, 3)})


def test_link_patterns_non_crossing():
    for m in range(1, 5):
        for n in range(1, 5):
            for F in _fpls(m, n):
                P = link_pattern(F)
                assert validate(P).ok


def test_partial_rotation():
    excluded = 0
    for m, n in [(2, 2), (2, 3), (3, 3), (4, 4)]:
        for F in _fpls(m, n):
            report = check_partial_rotation(F)
            assert report.ok, (F, report)
            assert all(a >= 2 for a, _ in report.checked)
            excluded += len(report.excluded)
    assert excluded > 0


def test_fpl_key_distinguishes():
    keys = {fpl_key(F) for F in _fpls(3, 3)}
    assert len(keys) == 62


# --- completion --------------------------------------------------------------------------------


def test_completion_of_zero():
    A, p = complete_to_asm(Pasm.zero(Dims(2, 2)))
    assert A.dims == Dims(4, 4) and is_asm(A)
    assert all(A.entries[i][p + j] == 0 for i in range(2) for j in range(2))


def test_completion_of_running_example(mstar):
    A, p = complete_to_asm(mstar)
    assert A.dims == Dims(5, 5) and is_asm(A)
    assert [list(r[p:p + 4]) for r in A.entries[:4]] == [list(r) for r in mstar.entries]


def test_completion_of_asm_is_identity():
    for M in enumerate_pasm(Dims(3, 3)):
        if total_sum(M) == 3:
            A, p = complete_to_asm(M)
            assert (A, p) == (M, 0)


def test_completion_always_valid():
    for m in range(1, 5):
        for n in range(1, 5):
            for M in enumerate_pasm(Dims(m, n)):
                A, p = complete_to_asm(M)
                assert is_asm(A)
                assert A.dims.m == m + n - total_sum(M)
                assert tuple(tuple(r[p:p + n]) for r in A.entries[:m]) == M.entries


def test_is_asm_counts():
    for n in range(1, 5):
        assert sum(is_asm(M) for M in enumerate_pasm(Dims(n, n))) == asm_count(n)
