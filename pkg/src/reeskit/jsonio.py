"""Instance files and deterministic JSON rendering.

Wire formats, all 1-indexed:
  matroid      {"n": int, "bases": [[int, ...], ...]}
  ideal        {"n": int, "exponents": [[int, ...], ...]}
  polymatroid  same as ideal plus "polymatroid": true
An instance file either wraps one of these as {"kind", "name", "payload"} or
is a bare payload, in which case the kind is inferred and the name defaults
to the file stem. Integers beyond 53 bits travel as decimal strings both
ways so nothing downstream ever rounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InvalidInstance, ParseError
from .matroid import ExchangeFailure as BasisExchangeFailure
from .matroid import Matroid, MonomialIdeal, check_basis_exchange
from .polymatroid import ExchangeFailure as VectorExchangeFailure
from .polymatroid import PolymatroidBases, check_polymatroid_bases

_BIG = 1 << 53

KINDS = ("matroid", "ideal", "polymatroid")


def encode_int(x: int):
    return x if -_BIG < x < _BIG else str(x)


def decode_int(v) -> int:
    if isinstance(v, bool):
        raise ParseError(f"expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        s = v.strip()
        sign = s[1:] if s[:1] in "+-" else s
        if sign.isdigit():
            return int(s)
    raise ParseError(f"expected an integer or decimal string, got {v!r}")


def encode(obj):
    """Recursively rewrite ints for the wire (53-bit rule)."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def dumps(payload) -> str:
    return json.dumps(encode(payload), indent=2, sort_keys=True) + "\n"


def _decode_vector_list(raw, what: str) -> list[list[int]]:
    if not isinstance(raw, list) or not all(isinstance(v, list) for v in raw):
        raise ParseError(f"{what} must be a list of lists")
    return [[decode_int(e) for e in v] for v in raw]


@dataclass(frozen=True)
class Instance:
    kind: str
    name: str
    n: int
    vectors: tuple[tuple[int, ...], ...]  # bases or exponent rows, as given


@dataclass(frozen=True)
class ValidationOutcome:
    ok: bool
    value: object | None = None
    witness: dict | None = None


def _payload_kind(payload: dict) -> str:
    if "bases" in payload:
        return "matroid"
    if payload.get("polymatroid") is True:
        return "polymatroid"
    if "exponents" in payload:
        return "ideal"
    raise ParseError("payload has neither 'bases' nor 'exponents'")


def parse_instance(text: str, default_name: str = "instance") -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    if "payload" in doc:
        payload = doc["payload"]
        if not isinstance(payload, dict):
            raise ParseError("'payload' must be a JSON object")
        name = doc.get("name", default_name)
        kind = doc.get("kind", _payload_kind(payload))
    else:
        payload = doc
        name = default_name
        kind = _payload_kind(payload)
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    if "n" not in payload:
        raise ParseError("payload is missing 'n'")
    n = decode_int(payload["n"])
    key = "bases" if kind == "matroid" else "exponents"
    if key not in payload:
        raise ParseError(f"payload of kind {kind!r} is missing {key!r}")
    rows = _decode_vector_list(payload[key], key)
    return Instance(kind, name, n, tuple(tuple(r) for r in rows))


def load_instance(source: str) -> Instance:
    """Read an instance from a filesystem path or a 'bundled:<name>' token."""
    if source.startswith("bundled:"):
        name = source.split(":", 1)[1]
        return parse_instance(bundled_text(name), default_name=name)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    return parse_instance(text, default_name=path.stem)


def realize(instance: Instance) -> ValidationOutcome:
    """Turn a parsed instance into its validated domain object.

    Exchange-style violations and structural InvalidInstance errors come
    back as witness payloads; only wire-format problems raise.
    """
    try:
        if instance.kind == "matroid":
            got = check_basis_exchange(instance.n, instance.vectors)
            if isinstance(got, BasisExchangeFailure):
                return ValidationOutcome(False, witness=got.to_json())
            return ValidationOutcome(True, value=got)
        if instance.kind == "polymatroid":
            got = check_polymatroid_bases(instance.n, instance.vectors)
            if isinstance(got, VectorExchangeFailure):
                return ValidationOutcome(False, witness=got.to_json())
            return ValidationOutcome(True, value=got)
        return ValidationOutcome(True, value=MonomialIdeal(instance.n, instance.vectors))
    except InvalidInstance as exc:
        return ValidationOutcome(
            False,
            witness={"error": type(exc).__name__, "detail": str(exc)},
        )


def analysis_ideal(value) -> MonomialIdeal:
    """The monomial ideal a validated domain object feeds into cone analysis."""
    if isinstance(value, MonomialIdeal):
        return value
    if isinstance(value, Matroid):
        from .matroid import basis_monomial_ideal

        return basis_monomial_ideal(value)
    if isinstance(value, PolymatroidBases):
        return MonomialIdeal(value.n, value.vectors)
    raise TypeError(f"no ideal view for {type(value).__name__}")


def bundled_names() -> list[str]:
    root = resources.files("reeskit").joinpath("instances")
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def bundled_text(name: str) -> str:
    ref = resources.files("reeskit").joinpath("instances").joinpath(f"{name}.json")
    try:
        return ref.read_text()
    except (FileNotFoundError, OSError) as exc:
        raise ParseError(f"no bundled instance named {name!r}") from exc


def load_bundled(name: str) -> Instance:
    return parse_instance(bundled_text(name), default_name=name)
