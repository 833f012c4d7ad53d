"""Smooth complete toric surfaces given by their fans."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .polynomial import Character, det2


@dataclass(frozen=True)
class SurfacePoint:
    """Torus-fixed point of a cone ``(u_i, u_{i+1})`` with its chart characters.

    ``chi_x`` and ``chi_y`` are the characters of the local coordinates
    ``x, y``: the dual basis of ``(u_i, u_{i+1})``.
    """

    name: str
    index: int
    chi_x: Character
    chi_y: Character


@dataclass(frozen=True)
class ToricLine:
    """Orbit closure of a ray; the x-axis at ``start`` and the y-axis at ``end``."""

    name: str
    ray: Tuple[int, int]
    start: str
    end: str
    direction_start: Character
    direction_end: Character

    def endpoints(self) -> Tuple[str, str]:
        return (self.start, self.end)

    def direction_at(self, point: str) -> Character:
        if point == self.start:
            return self.direction_start
        if point == self.end:
            return self.direction_end
        raise KeyError(point)

    def axis_at(self, point: str) -> str:
        """Which chart axis at ``point`` runs along the line."""
        if point == self.start:
            return "x"
        if point == self.end:
            return "y"
        raise KeyError(point)


def _upper(v) -> bool:
    return v[1] > 0 or (v[1] == 0 and v[0] > 0)


class ToricSurface:
    def __init__(self, rays: Sequence[Sequence[int]], name: str = "", point_names: Optional[Sequence[str]] = None):
        rays = [tuple(int(c) for c in r) for r in rays]
        n = len(rays)
        if n < 3:
            raise ValueError("a complete fan in the plane needs at least three rays")
        for r in rays:
            if gcd(abs(r[0]), abs(r[1])) != 1:
                raise ValueError(f"ray {r} is not primitive")
        for i in range(n):
            d = det2(rays[i], rays[(i + 1) % n])
            if d != 1:
                raise ValueError(
                    f"rays {rays[i]}, {rays[(i + 1) % n]} do not span a smooth cone counterclockwise (det={d})")
        turns = sum(1 for i in range(n) if not _upper(rays[i]) and _upper(rays[(i + 1) % n]))
        if turns != 1:
            raise ValueError(f"rays wind {turns} times around the origin; the fan is not complete")
        self.rays = rays
        self.name = name or "fan" + json.dumps(rays)
        names = list(point_names) if point_names else [f"p{i + 1}" for i in range(n)]
        if len(names) != n or len(set(names)) != n:
            raise ValueError("one distinct name per cone is required")
        pts = []
        for i in range(n):
            u, v = rays[i], rays[(i + 1) % n]
            chi_x = Character(v[1], -v[0])
            chi_y = Character(-u[1], u[0])
            pts.append(SurfacePoint(names[i], i, chi_x, chi_y))
        self.fixed_points: List[SurfacePoint] = pts
        lines = []
        for i in range(n):
            p, q = pts[(i - 1) % n], pts[i]
            lines.append(ToricLine(f"D{i + 1}", rays[i], p.name, q.name, p.chi_x, q.chi_y))
        self.lines: List[ToricLine] = lines
        self._by_name: Dict[str, SurfacePoint] = {p.name: p for p in pts}

    def point(self, name: str) -> SurfacePoint:
        return self._by_name[name]

    @property
    def point_names(self) -> List[str]:
        return [p.name for p in self.fixed_points]

    def line(self, name: str) -> ToricLine:
        for ln in self.lines:
            if ln.name == name:
                return ln
        raise KeyError(name)

    def __repr__(self):
        return f"ToricSurface({self.name!r}, rays={self.rays})"


def build_surface(preset: str | Sequence[Sequence[int]]) -> ToricSurface:
    """``"P2"``, ``"P1xP1"``, ``"F<a>"`` / ``"Hirzebruch(<a>)"``, or explicit rays.

    For ``P2`` and the action ``(t1, t2).(X:Y:Z) = (t1 X : t2 Y : Z)`` the
    points ``p1, p2, p3`` are ``(0:0:1), (1:0:0), (0:1:0)``.  The chart at
    ``p1`` has coordinates ``x = X/Z, y = Y/Z`` with characters ``(1,0), (0,1)``;
    with this numbering the permutation subscripts of the (P2)^[3] relations
    come out right.
    """
    if not isinstance(preset, str):
        return ToricSurface(preset)
    key = preset.strip().lower().replace(" ", "")
    if key in ("p2", "pp2", "projective_plane"):
        return ToricSurface([(1, 0), (0, 1), (-1, -1)], name="P2")
    if key in ("p1xp1", "p1p1", "f0"):
        return ToricSurface([(1, 0), (0, 1), (-1, 0), (0, -1)], name="P1xP1")
    a = None
    if key.startswith("hirzebruch(") and key.endswith(")"):
        a = int(key[len("hirzebruch("):-1])
    elif key.startswith("f") and key[1:].lstrip("-").isdigit():
        a = int(key[1:])
    if a is not None:
        return ToricSurface([(1, 0), (0, 1), (-1, a), (0, -1)], name=f"F{a}")
    if key.startswith("["):
        return ToricSurface(json.loads(preset))
    raise ValueError(f"unknown surface preset {preset!r}")


@dataclass(frozen=True)
class Subtorus:
    """Codimension-one subtorus ``T' = ker(chi)``, ``chi`` primitive with canonical sign."""

    chi: Character

    def __post_init__(self):
        chi = Character(*self.chi)
        object.__setattr__(self, "chi", chi.primitive())

    def weight(self, m) -> int:
        """Image of a character of ``T`` in ``Hom(T', k^*) = Z``."""
        return det2(self.chi, m)

    def __str__(self):
        return f"ker({self.chi.a},{self.chi.b})"


@dataclass(frozen=True)
class SurfaceFixedLocus:
    isolated_points: Tuple[str, ...]
    fixed_lines: Tuple[str, ...]


def fixed_locus(S: ToricSurface, T: Subtorus) -> SurfaceFixedLocus:
    iso = tuple(p.name for p in S.fixed_points
                if not (p.chi_x.is_proportional(T.chi) or p.chi_y.is_proportional(T.chi)))
    lines = tuple(ln.name for ln in S.lines if ln.direction_start.is_proportional(T.chi))
    return SurfaceFixedLocus(iso, lines)


def lattice_action_on_points(S: ToricSurface, g) -> Dict[str, Tuple[str, bool]]:
    """Permutation of fixed points induced by a fan automorphism.

    ``g`` is a 2x2 integer matrix acting on characters.  Returns, for each
    point, its image and whether the local axes are exchanged.
    """
    def act(c):
        return Character(g[0][0] * c[0] + g[0][1] * c[1], g[1][0] * c[0] + g[1][1] * c[1])

    out = {}
    for p in S.fixed_points:
        gx, gy = act(p.chi_x), act(p.chi_y)
        for q in S.fixed_points:
            if (gx, gy) == (q.chi_x, q.chi_y):
                out[p.name] = (q.name, False)
                break
            if (gx, gy) == (q.chi_y, q.chi_x):
                out[p.name] = (q.name, True)
                break
        else:
            raise ValueError(f"matrix {g} does not preserve the fan")
    return out
