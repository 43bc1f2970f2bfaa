"""Descriptor JSON (tagged union) and multiset serialisation."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, Union

from ..errors import DescriptorError
from .descriptors import (
    AbelianTotallyMultiplicative,
    BaseChange,
    DirectSum,
    ExactSeqQuotient,
    FiltrationProfile,
    GroupDescriptor,
    InducedTorus,
    Nu1,
    Profiled,
)
from .multiset import DJumpMultiset, JumpMultiset


def descriptor_to_json(g: GroupDescriptor) -> Dict[str, Any]:
    if isinstance(g, InducedTorus):
        return {"type": "induced", "e": g.e, "f": g.f}
    if isinstance(g, ExactSeqQuotient):
        return {"type": "quotient", "sub": descriptor_to_json(g.sub), "total": descriptor_to_json(g.total)}
    if isinstance(g, DirectSum):
        return {"type": "sum", "parts": [descriptor_to_json(x) for x in g.parts]}
    if isinstance(g, BaseChange):
        return {"type": "base_change", "inner": descriptor_to_json(g.inner), "d0": g.d0}
    if isinstance(g, Nu1):
        return {"type": "nu1", "r": g.r, "p": g.p}
    if isinstance(g, AbelianTotallyMultiplicative):
        return {"type": "abelian", "torus": descriptor_to_json(g.torus)}
    if isinstance(g, Profiled):
        out: Dict[str, Any] = {
            "type": "profiled",
            "profile": [[str(j), a, b, c] for j, a, b, c in g.profile.jumps],
            "invertible": g.invertible,
            "is_torus": g.is_torus,
        }
        if g.torus_rank is not None:
            out["torus_rank"] = g.torus_rank
        return out
    raise DescriptorError(f"unknown descriptor {g!r}")


def _int(obj: Dict[str, Any], key: str, default=None) -> int:
    if key not in obj:
        if default is None:
            raise DescriptorError(f"missing field '{key}' in {obj.get('type')!r} descriptor")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise DescriptorError(f"field '{key}' must be an integer")
    return v


def descriptor_from_json(obj: Union[Dict[str, Any], str]) -> GroupDescriptor:
    """Parse the tagged-union form. A wrapper {"descriptor": {...}} is accepted
    so that CLI outputs can be fed back in."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DescriptorError("descriptor must be a JSON object")
    if "type" not in obj and "descriptor" in obj:
        return descriptor_from_json(obj["descriptor"])
    kind = obj.get("type")
    try:
        if kind == "induced":
            return InducedTorus(_int(obj, "e"), _int(obj, "f", 1))
        if kind == "split":
            n = _int(obj, "n", 1)
            return DirectSum(tuple(InducedTorus(1, 1) for _ in range(n)))
        if kind == "quotient":
            return ExactSeqQuotient(descriptor_from_json(obj["sub"]), descriptor_from_json(obj["total"]))
        if kind == "sum":
            return DirectSum(tuple(descriptor_from_json(x) for x in obj.get("parts", [])))
        if kind == "base_change":
            return BaseChange(descriptor_from_json(obj["inner"]), _int(obj, "d0"))
        if kind == "nu1":
            return Nu1(_int(obj, "r"), _int(obj, "p"))
        if kind == "abelian":
            return AbelianTotallyMultiplicative(descriptor_from_json(obj["torus"]))
        if kind == "profiled":
            rows = tuple((Fraction(str(j)), int(a), int(b), int(c)) for j, a, b, c in obj["profile"])
            return Profiled(
                FiltrationProfile(rows),
                invertible=bool(obj.get("invertible", False)),
                torus_rank=obj.get("torus_rank"),
                is_torus=bool(obj.get("is_torus", True)),
            )
    except KeyError as exc:
        raise DescriptorError(f"missing field {exc} in {kind!r} descriptor") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DescriptorError):
            raise
        raise DescriptorError(str(exc)) from None
    raise DescriptorError(f"unknown descriptor type {kind!r}")


def jumps_to_json(m: JumpMultiset) -> list:
    return [f"{v}:{k}" for v, k in m.entries]


def djumps_to_json(m: DJumpMultiset) -> Dict[str, Any]:
    return {"modulus": m.modulus, "entries": [f"{r}:{k}" for r, k in m.entries]}
