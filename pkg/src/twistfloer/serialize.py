"""JSON file formats.

Rationals travel as decimal-free strings "p/q" or "p"; a null cutoff
means exact.  Documents are strict: unknown fields are rejected, term
lists must already be in canonical order, generator names unique.
Emission is deterministic (fixed key order, two-space indent, trailing
newline), so identical inputs produce byte-identical files.

Formats:

* Novikov series      {"terms": [["r","c"], ...], "trunc": "r" | null}
* group-ring element  {"rank": b, "terms": [[[e1..eb], "c"], ...]}
* complex file        {"ring": ..., "generators": [...],
                       "differential": [...], "provenance"?: str}
* graded-module file  {"ring": ..., "entries": [...], "tower"?: ...,
                       "provenance"?: str}
* certificate file    {"monodromy": ..., "omega": ..., "word": ...,
                       "steps": [...], "terminal": ..., "conclusion": ...,
                       "precision": "r"}
"""

import json
from fractions import Fraction

from .certify import (Conclusion, OmegaClassSpec, SL2Matrix, SurgeryCertificate,
                      SurgeryStep, TerminalComputation)
from .complexes import FreeChainComplex, chain_complex
from .errors import FormatError
from .groupring import GroupRingElement, laurent
from .models import VanishingCertificate
from .modules import (CyclicSummand, FinitelyPresentedModule, FreeSummand,
                      GradedModule, TowerFlag, TrivialZSummand, graded)
from .novikov import INF, NovikovSeries, series
from .rings import INTEGER, NOVIKOV, RingTag, laurent_ring


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else \
        f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {s!r}") from exc
    if isinstance(s, int):
        return Fraction(s)
    raise FormatError(f"rationals must be strings, got {s!r}")


def _expect_keys(obj, required, optional=()):
    if not isinstance(obj, dict):
        raise FormatError(f"expected an object, got {type(obj).__name__}")
    keys = set(obj)
    missing = set(required) - keys
    if missing:
        raise FormatError(f"missing fields: {sorted(missing)}")
    unknown = keys - set(required) - set(optional)
    if unknown:
        raise FormatError(f"unknown fields: {sorted(unknown)}")


# --- ring elements -----------------------------------------------------

def novikov_to_json(x: NovikovSeries):
    return {
        "terms": [[format_rational(e), format_rational(c)]
                  for e, c in x.terms],
        "trunc": None if x.is_exact else format_rational(x.trunc),
    }


def novikov_from_json(obj) -> NovikovSeries:
    _expect_keys(obj, ["terms", "trunc"])
    if not isinstance(obj["terms"], list):
        raise FormatError("terms must be a list")
    terms = []
    for item in obj["terms"]:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"bad term {item!r}")
        terms.append((parse_rational(item[0]), parse_rational(item[1])))
    exps = [e for e, _ in terms]
    if exps != sorted(set(exps)):
        raise FormatError("term exponents must be strictly ascending")
    trunc = INF if obj["trunc"] is None else parse_rational(obj["trunc"])
    out = series(terms, trunc)
    if list(out.terms) != terms:
        raise FormatError("terms not in canonical form")
    return out


def groupring_to_json(x: GroupRingElement):
    return {
        "rank": x.rank,
        "terms": [[list(exps), format_rational(c)] for exps, c in x.terms],
    }


def groupring_from_json(obj) -> GroupRingElement:
    _expect_keys(obj, ["rank", "terms"])
    rank = obj["rank"]
    if not isinstance(rank, int) or rank < 0:
        raise FormatError(f"bad rank {rank!r}")
    terms = []
    for item in obj.get("terms", []):
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"bad term {item!r}")
        exps, c = item
        if not isinstance(exps, list) or \
                not all(isinstance(e, int) for e in exps):
            raise FormatError(f"bad exponent vector {exps!r}")
        q = parse_rational(c)
        if q.denominator != 1:
            raise FormatError(f"group-ring coefficients are integers: {c!r}")
        terms.append((tuple(exps), int(q)))
    if [e for e, _ in terms] != sorted({e for e, _ in terms}):
        raise FormatError("exponent vectors must be in ascending "
                          "lexicographic order")
    out = laurent(rank, terms)
    if list(out.terms) != terms:
        raise FormatError("terms not in canonical form")
    return out


def _integer_to_json(x: int):
    return str(x)


def _integer_from_json(obj) -> int:
    q = parse_rational(obj)
    if q.denominator != 1:
        raise FormatError(f"expected an integer, got {obj!r}")
    return int(q)


def ring_to_json(ring: RingTag):
    if ring.kind == "laurent":
        return {"tag": "laurent", "rank": ring.rank}
    return {"tag": ring.kind}


def ring_from_json(obj) -> RingTag:
    if not isinstance(obj, dict) or "tag" not in obj:
        raise FormatError("ring must be an object with a tag")
    tag = obj["tag"]
    if tag == "laurent":
        _expect_keys(obj, ["tag", "rank"])
        if not isinstance(obj["rank"], int) or obj["rank"] < 1:
            raise FormatError(f"bad laurent rank {obj.get('rank')!r}")
        return laurent_ring(obj["rank"])
    _expect_keys(obj, ["tag"])
    if tag == "integer":
        return INTEGER
    if tag == "novikov":
        return NOVIKOV
    raise FormatError(f"unknown ring tag {tag!r}")


def element_to_json(ring: RingTag, x):
    if ring.kind == "integer":
        return _integer_to_json(x)
    if ring.kind == "laurent":
        return groupring_to_json(x)
    return novikov_to_json(x)


def element_from_json(ring: RingTag, obj):
    if ring.kind == "integer":
        return _integer_from_json(obj)
    if ring.kind == "laurent":
        x = groupring_from_json(obj)
        if x.rank != ring.rank:
            raise FormatError(
                f"element rank {x.rank} differs from ring rank {ring.rank}")
        return x
    return novikov_from_json(obj)


# --- chain complexes ----------------------------------------------------

def complex_to_json(C: FreeChainComplex, provenance: str | None = None):
    doc = {
        "ring": ring_to_json(C.ring),
        "generators": [{"name": n, "degree": format_rational(d)}
                       for n, d in C.generators],
        "differential": [{"from": s, "to": t,
                          "value": element_to_json(C.ring, v)}
                         for s, t, v in C.entries],
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def complex_from_json(obj):
    """Returns (complex, provenance-or-None)."""
    _expect_keys(obj, ["ring", "generators", "differential"], ["provenance"])
    ring = ring_from_json(obj["ring"])
    gens = []
    for g in obj["generators"]:
        _expect_keys(g, ["name", "degree"])
        if not isinstance(g["name"], str):
            raise FormatError("generator names must be strings")
        gens.append((g["name"], parse_rational(g["degree"])))
    names = [n for n, _ in gens]
    if len(set(names)) != len(names):
        raise FormatError("generator names must be unique")
    ents = []
    for e in obj["differential"]:
        _expect_keys(e, ["from", "to", "value"])
        if e["from"] not in names or e["to"] not in names:
            raise FormatError(
                f"differential references unknown generator "
                f"{e['from']!r} -> {e['to']!r}")
        ents.append((e["from"], e["to"],
                     element_from_json(ring, e["value"])))
    try:
        C = chain_complex(ring, gens, ents)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    prov = obj.get("provenance")
    if prov is not None and not isinstance(prov, str):
        raise FormatError("provenance must be a string")
    return C, prov


# --- modules and graded modules ------------------------------------------

def _summand_to_json(ring: RingTag, s):
    if isinstance(s, FreeSummand):
        return {"type": "free", "rank": s.n}
    if isinstance(s, TrivialZSummand):
        return {"type": "trivial-Z"}
    if isinstance(s, CyclicSummand):
        doc = {"type": "cyclic", "p": element_to_json(ring, s.p)}
        if s.abelian_rank is not None:
            doc["abelian_rank"] = s.abelian_rank
        return doc
    raise FormatError(f"unknown summand {s!r}")


def _summand_from_json(ring: RingTag, obj):
    if not isinstance(obj, dict) or "type" not in obj:
        raise FormatError("summand must be an object with a type")
    t = obj["type"]
    if t == "free":
        _expect_keys(obj, ["type", "rank"])
        if not isinstance(obj["rank"], int) or obj["rank"] < 1:
            raise FormatError("bad free rank")
        return FreeSummand(obj["rank"])
    if t == "trivial-Z":
        _expect_keys(obj, ["type"])
        return TrivialZSummand()
    if t == "cyclic":
        _expect_keys(obj, ["type", "p"], ["abelian_rank"])
        return CyclicSummand(element_from_json(ring, obj["p"]),
                             obj.get("abelian_rank"))
    raise FormatError(f"unknown summand type {t!r}")


def fpm_to_json(m: FinitelyPresentedModule):
    doc = {
        "ngens": m.ngens,
        "relations": [[element_to_json(m.ring, x) for x in row]
                      for row in m.relations],
        "classification": None if m.classification is None else
        [_summand_to_json(m.ring, s) for s in m.classification],
    }
    return doc


def fpm_from_json(ring: RingTag, obj) -> FinitelyPresentedModule:
    _expect_keys(obj, ["ngens", "relations", "classification"])
    ngens = obj["ngens"]
    if not isinstance(ngens, int) or ngens < 0:
        raise FormatError("bad ngens")
    rows = []
    for row in obj["relations"]:
        if not isinstance(row, list) or len(row) != ngens:
            raise FormatError("relation rows must have ngens entries")
        rows.append(tuple(element_from_json(ring, x) for x in row))
    cls = obj["classification"]
    classification = None if cls is None else \
        tuple(_summand_from_json(ring, s) for s in cls)
    return FinitelyPresentedModule(ring, ngens, tuple(rows), classification)


def graded_module_to_json(H: GradedModule):
    entries = []
    for d, m in H.entries:
        if H.ring.kind == "novikov":
            entries.append({"degree": format_rational(d), "dimension": m})
        else:
            entries.append({"degree": format_rational(d),
                            "module": fpm_to_json(m)})
    doc = {"ring": ring_to_json(H.ring), "entries": entries}
    if H.tower is not None:
        doc["tower"] = {
            "start": format_rational(H.tower.start),
            "step": format_rational(H.tower.step),
            "length": H.tower.length,
            "note": H.tower.note,
        }
    if H.provenance is not None:
        doc["provenance"] = H.provenance
    return doc


def graded_module_from_json(obj) -> GradedModule:
    _expect_keys(obj, ["ring", "entries"], ["tower", "provenance"])
    ring = ring_from_json(obj["ring"])
    entries = []
    for e in obj["entries"]:
        if ring.kind == "novikov":
            _expect_keys(e, ["degree", "dimension"])
            if not isinstance(e["dimension"], int) or e["dimension"] < 0:
                raise FormatError("bad dimension")
            entries.append((parse_rational(e["degree"]), e["dimension"]))
        else:
            _expect_keys(e, ["degree", "module"])
            entries.append((parse_rational(e["degree"]),
                            fpm_from_json(ring, e["module"])))
    tower = None
    if obj.get("tower") is not None:
        t = obj["tower"]
        _expect_keys(t, ["start", "step", "length", "note"])
        tower = TowerFlag(parse_rational(t["start"]),
                          parse_rational(t["step"]),
                          int(t["length"]), t["note"])
    prov = obj.get("provenance")
    try:
        return graded(ring, entries, tower=tower, provenance=prov)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# --- certificates ---------------------------------------------------------

def _matrix_to_json(M: SL2Matrix):
    return [[M.a, M.b], [M.c, M.d]]


def _matrix_from_json(obj) -> SL2Matrix:
    if (not isinstance(obj, list) or len(obj) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in obj)
            or any(not isinstance(x, int) for r in obj for x in r)):
        raise FormatError(f"bad 2x2 integer matrix {obj!r}")
    try:
        return SL2Matrix(obj[0][0], obj[0][1], obj[1][0], obj[1][1])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _vanishing_to_json(v: VanishingCertificate):
    return {
        "pairing": v.pairing,
        "verdict": v.verdict,
        "precision": None if v.precision is None
        else format_rational(v.precision),
        "model_homology": None if v.model_homology is None
        else graded_module_to_json(v.model_homology),
        "unit_witness": None if v.unit_witness is None
        else novikov_to_json(v.unit_witness),
        "note": v.note,
    }


def _vanishing_from_json(obj) -> VanishingCertificate:
    _expect_keys(obj, ["pairing", "verdict", "precision", "model_homology",
                       "unit_witness", "note"])
    if obj["verdict"] not in ("vanishes", "inconclusive"):
        raise FormatError(f"bad verdict {obj['verdict']!r}")
    return VanishingCertificate(
        int(obj["pairing"]), obj["verdict"],
        None if obj["precision"] is None
        else parse_rational(obj["precision"]),
        None if obj["model_homology"] is None
        else graded_module_from_json(obj["model_homology"]),
        None if obj["unit_witness"] is None
        else novikov_from_json(obj["unit_witness"]),
        obj["note"])


def certificate_to_json(cert: SurgeryCertificate):
    return {
        "monodromy": _matrix_to_json(cert.monodromy),
        "omega": {
            "fiber_pairing": cert.omega.fiber_pairing,
            "auxiliary": [format_rational(x) for x in cert.omega.auxiliary],
        },
        "word": cert.word,
        "steps": [{
            "index": s.index,
            "letter": s.letter,
            "before": _matrix_to_json(s.before),
            "after": _matrix_to_json(s.after),
            "framing": s.framing,
            "sphere_pairing": s.sphere_pairing,
            "vanishing": _vanishing_to_json(s.vanishing),
            "inference": s.inference,
        } for s in cert.steps],
        "terminal": {
            "tower_length": cert.terminal.tower_length,
            "result": graded_module_to_json(cert.terminal.result),
            "note": cert.terminal.note,
        },
        "conclusion": {
            "module": graded_module_to_json(cert.conclusion.module),
            "degree": format_rational(cert.conclusion.degree),
            "dimension": cert.conclusion.dimension,
            "torsion_spinc_support": cert.conclusion.torsion_spinc_support,
        },
        "precision": format_rational(cert.precision),
    }


def certificate_from_json(obj) -> SurgeryCertificate:
    _expect_keys(obj, ["monodromy", "omega", "word", "steps", "terminal",
                       "conclusion", "precision"])
    monodromy = _matrix_from_json(obj["monodromy"])
    _expect_keys(obj["omega"], ["fiber_pairing", "auxiliary"])
    if not isinstance(obj["omega"]["fiber_pairing"], int):
        raise FormatError("fiber_pairing must be an integer")
    omega = OmegaClassSpec(
        obj["omega"]["fiber_pairing"],
        tuple(parse_rational(x) for x in obj["omega"]["auxiliary"]))
    word = obj["word"]
    if not isinstance(word, str):
        raise FormatError("word must be a string")
    steps = []
    for s in obj["steps"]:
        _expect_keys(s, ["index", "letter", "before", "after", "framing",
                         "sphere_pairing", "vanishing", "inference"])
        steps.append(SurgeryStep(
            int(s["index"]), s["letter"],
            _matrix_from_json(s["before"]), _matrix_from_json(s["after"]),
            int(s["framing"]), int(s["sphere_pairing"]),
            _vanishing_from_json(s["vanishing"]), s["inference"]))
    t = obj["terminal"]
    _expect_keys(t, ["tower_length", "result", "note"])
    terminal = TerminalComputation(int(t["tower_length"]),
                                   graded_module_from_json(t["result"]),
                                   t["note"])
    c = obj["conclusion"]
    _expect_keys(c, ["module", "degree", "dimension",
                     "torsion_spinc_support"])
    conclusion = Conclusion(graded_module_from_json(c["module"]),
                            parse_rational(c["degree"]),
                            int(c["dimension"]),
                            bool(c["torsion_spinc_support"]))
    return SurgeryCertificate(monodromy, omega, word, tuple(steps),
                              terminal, conclusion,
                              parse_rational(obj["precision"]))


# --- document I/O ----------------------------------------------------------

def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
