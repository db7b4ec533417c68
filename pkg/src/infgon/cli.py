"""Command-line front end: JSON in, JSON or SVG out, stable exit codes.

Exit codes: 0 success, 1 validation/property failure, 2 precondition
or parse error, 3 internal step cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

import numpy as np

from .cvector import (CVectorQuery, CoVector, RealizationUnsupported,
                      cvector_eval, cvector_full, dimension_vector,
                      image_arc, realize_dimension_vector)
from .decomposition import (NegInf, crossing_order, delta_plus, in_X,
                            maximal_pairs, root_of_arc, root_system_label,
                            y_ext)
from .fzoracle import from_triangulation as seed_of
from .fzoracle import mutate
from .homindex import (KVector, StepCapExceeded, check_duality, index,
                       zigzag)
from .render import RenderSpec, render_svg
from .triangulation import (Fountain, Leapfrog, Triangulation,
                            UnattainedError, validate)
from .zmodel import Arc, ClosurePoint, Limit, ModelError, Vertex, ZModel


class ParseError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer


# ---------------------------------------------------------------------------
# JSON (de)serialization.


def model_from_json(obj, pointer: str = "/z") -> ZModel:
    if not isinstance(obj, dict):
        raise ParseError(pointer, "model must be an object")
    if "finite" in obj:
        return ZModel.finite(int(obj["finite"]))
    if "blocks" in obj:
        return ZModel.blocks(int(obj["blocks"]))
    raise ParseError(pointer, 'model needs "finite" or "blocks"')


def model_to_json(z: ZModel):
    return {"finite": z.n} if z.is_finite else {"blocks": z.k}


def point_from_json(z: ZModel, obj, pointer: str) -> ClosurePoint:
    if isinstance(obj, bool):
        raise ParseError(pointer, "not a point")
    if isinstance(obj, int):
        return z.v(obj)
    if isinstance(obj, list) and len(obj) == 2:
        return z.v(Vertex(int(obj[0]), int(obj[1])))
    if isinstance(obj, dict) and "limit" in obj:
        if z.is_finite:
            raise ParseError(pointer, "finite model has no limit points")
        return Limit(int(obj["limit"]) % z.k)
    raise ParseError(pointer, f"cannot read point from {obj!r}")


def point_to_json(z: ZModel, p: ClosurePoint):
    if isinstance(p, Limit):
        return {"limit": p.gap}
    return p.idx if z.is_finite else [p.block, p.idx]


def arc_from_json(z: ZModel, obj, pointer: str) -> Arc:
    if not (isinstance(obj, list) and len(obj) == 2):
        raise ParseError(pointer, "arc must be a two-element list")
    return Arc(point_from_json(z, obj[0], pointer + "/0"),
               point_from_json(z, obj[1], pointer + "/1"))


def arc_to_json(z: ZModel, a: Arc):
    return [point_to_json(z, a.p), point_to_json(z, a.q)]


def triangulation_from_json(obj, pointer: str = "") -> Triangulation:
    if not isinstance(obj, dict):
        raise ParseError(pointer or "/", "triangulation must be an object")
    z = model_from_json(obj.get("z"), pointer + "/z")
    core = [arc_from_json(z, a, f"{pointer}/core/{i}")
            for i, a in enumerate(obj.get("core", []))]
    tails = {}
    for i, tl in enumerate(obj.get("tails", [])):
        tp = f"{pointer}/tails/{i}"
        if not isinstance(tl, dict) or "limit" not in tl:
            raise ParseError(tp, 'tail needs a "limit" gap')
        g = int(tl["limit"])
        kind = tl.get("type")
        if kind == "fountain":
            base = point_from_json(z, tl["base"], tp + "/base")
            if not isinstance(base, Vertex):
                raise ParseError(tp + "/base", "fountain base is a vertex")
            tails[g] = Fountain(base, int(tl["right_from"]),
                                int(tl["left_to"]))
        elif kind == "leapfrog":
            tails[g] = Leapfrog(int(tl["right_from"]), int(tl["left_to"]))
        else:
            raise ParseError(tp, 'tail type must be "fountain" or '
                                 '"leapfrog"')
    return Triangulation.make(z, core, tails)


def triangulation_to_json(t: Triangulation):
    z = t.z
    out = {"z": model_to_json(z),
           "core": [arc_to_json(z, a)
                    for a in sorted(t.core,
                                    key=lambda a: (z.key(a.p), z.key(a.q)))]}
    tails = []
    for g, tl in t.tails:
        if isinstance(tl, Fountain):
            tails.append({"limit": g, "type": "fountain",
                          "base": point_to_json(z, tl.base),
                          "right_from": tl.right_from,
                          "left_to": tl.left_to})
        else:
            tails.append({"limit": g, "type": "leapfrog",
                          "right_from": tl.right_from,
                          "left_to": tl.left_to})
    if tails:
        out["tails"] = tails
    return out


def kvector_to_json(z: ZModel, kv: KVector):
    return [[arc_to_json(z, a), c] for a, c in kv.items_sorted(z)]


def covector_to_json(c: CoVector):
    z = c.t.z
    expl = sorted(c.explicit.items(),
                  key=lambda ac: (z.key(ac[0].p), z.key(ac[0].q)))
    out = {"explicit": [[arc_to_json(z, a), v] for a, v in expl]}
    if c.tail_terms:
        out["tails"] = [{"gap": tr.gap, "sub": tr.sub, "lo": tr.lo,
                         "hi": tr.hi, "coeff": tr.coeff}
                        for tr in sorted(
                            c.tail_terms,
                            key=lambda tr: (tr.gap, tr.sub,
                                            tr.lo if tr.lo is not None
                                            else -10 ** 9))]
    return out


def root_to_json(z: ZModel, r):
    neg = "-inf" if isinstance(r.neg, NegInf) else arc_to_json(z, r.neg)
    return {"pos": arc_to_json(z, r.pos), "neg": neg}


# ---------------------------------------------------------------------------
# Argument helpers.


def _parse_point_token(z: ZModel, tok: str) -> ClosurePoint:
    if tok.startswith("L"):
        if z.is_finite:
            raise ParseError("--arc", "finite model has no limit points")
        return Limit(int(tok[1:]) % z.k)
    if ":" in tok:
        b, i = tok.split(":", 1)
        return z.v(Vertex(int(b), int(i)))
    return z.v(int(tok))


def _load_tri(path: str) -> Triangulation:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("/", f"invalid JSON: {exc}") from exc
    return triangulation_from_json(obj)


def _arc_from_tokens(z: ZModel, toks) -> Arc:
    return Arc(_parse_point_token(z, toks[0]),
               _parse_point_token(z, toks[1]))


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _window_arcs(t: Triangulation, lo: int, hi: int):
    out = []
    for a in t.window_nodes(2 * (abs(lo) + abs(hi)) + 8):
        ok = True
        for p in a.endpoints():
            if isinstance(p, Vertex) and not (lo <= p.idx <= hi):
                ok = False
        if ok:
            out.append(a)
    return out


# ---------------------------------------------------------------------------
# Commands.


def cmd_validate(args) -> int:
    t = _load_tri(args.triangulation)
    rep = validate(t)
    _emit_json(args, {"ok": rep.ok, "reason": rep.reason,
                      "witness": repr(rep.witness) if rep.witness else None})
    return 0 if rep.ok else 1


def cmd_index(args) -> int:
    t = _load_tri(args.triangulation)
    a = _arc_from_tokens(t.z, args.arc)
    _emit_json(args, kvector_to_json(t.z, index(t, a)))
    return 0


def cmd_cvector(args) -> int:
    t = _load_tri(args.triangulation)
    u_tri = _load_tri(args.second_triangulation)
    u = _arc_from_tokens(t.z, args.arc)
    sign, v_arc, cov = cvector_full(CVectorQuery(t, u_tri, u))
    _emit_json(args, {"sign": sign,
                      "arc": arc_to_json(t.z, v_arc) if v_arc else None,
                      "covector": covector_to_json(cov)})
    return 0


def cmd_dimvec(args) -> int:
    t = _load_tri(args.triangulation)
    a = _arc_from_tokens(t.z, args.arc)
    _emit_json(args, covector_to_json(dimension_vector(t, a)))
    return 0


def cmd_image(args) -> int:
    t = _load_tri(args.triangulation)
    u = _arc_from_tokens(t.z, args.arc)
    ustar = _arc_from_tokens(t.z, args.second_arc)
    v = image_arc(t, u, ustar)
    _emit_json(args, {"image": arc_to_json(t.z, v) if v else None})
    return 0


def cmd_realize(args) -> int:
    t = _load_tri(args.triangulation)
    v = _arc_from_tokens(t.z, args.arc)
    u_tri, u = realize_dimension_vector(t, v)
    _emit_json(args, {"u": arc_to_json(t.z, u),
                      "U": triangulation_to_json(u_tri)})
    return 0


def _decompose_table(t, e, f, lo, hi):
    z = t.z
    if z.is_finite:
        verts = z.vertices()
    else:
        verts = [Vertex(b, i) for b in range(z.k)
                 for i in range(lo, hi + 1)]
    rows = []
    seen = set()
    for i, p in enumerate(verts):
        for q in verts[i + 1:]:
            a = Arc(p, q)
            if not z.is_diagonal(a) or a in seen:
                continue
            seen.add(a)
            dv = dimension_vector(t, a)
            if dv.is_zero() or not in_X(t, e, f, dv):
                continue
            rows.append({"arc": arc_to_json(z, a),
                         "root": root_to_json(z, root_of_arc(t, e, f, a))})
    rows.sort(key=lambda r: json.dumps(r, sort_keys=True))
    return rows


def cmd_decompose(args) -> int:
    t = _load_tri(args.triangulation)
    z = t.z
    lo, hi = args.window
    report = []
    for pair in sorted(maximal_pairs(t),
                       key=lambda p: sorted(map(z.key, p))):
        e, f = sorted(pair, key=z.key)
        y = crossing_order(t, e, f)
        report.append({
            "pair": [point_to_json(z, e), point_to_json(z, f)],
            "descriptor": str(y.descriptor()),
            "label": root_system_label(y),
            "table": _decompose_table(t, e, f, lo, hi),
        })
    _emit_json(args, {"maximal_pairs": report})
    return 0


def cmd_roots(args) -> int:
    t = _load_tri(args.triangulation)
    z = t.z
    e = _parse_point_token(z, args.arc[0])
    f = _parse_point_token(z, args.arc[1])
    y = crossing_order(t, e, f)
    ye = y_ext(y)
    window = args.window[1] - args.window[0] + 1
    roots = delta_plus(ye, window=None if ye.is_finite else window)
    _emit_json(args, {"descriptor": str(y.descriptor()),
                      "label": root_system_label(y),
                      "neg_inf_adjoined": ye.has_neg_inf,
                      "roots": [root_to_json(z, r) for r in roots]})
    return 0


def cmd_duality(args) -> int:
    t = _load_tri(args.triangulation)
    u = _load_tri(args.second_triangulation)
    if t.z.is_finite:
        window_t = window_u = None
    else:
        lo, hi = args.window
        window_t = _window_arcs(t, lo, hi)
        window_u = _window_arcs(u, lo, hi)
    rep = check_duality(t, u, window_t, window_u)
    _emit_json(args, {"ok": rep.ok,
                      "failures": [repr(fx) for fx in rep.failures]})
    return 0 if rep.ok else 1


def cmd_oracle(args) -> int:
    t = _load_tri(args.triangulation)
    z = t.z
    if not z.is_finite:
        raise ModelError("the oracle runs on finite polygons only")
    rng = random.Random(args.seed)
    mismatches = 0
    for _ in range(args.paths):
        seed = seed_of(t)
        cur = t
        labels = list(seed.labels)
        for _ in range(rng.randrange(0, args.max_len + 1)):
            d = rng.choice(labels)
            k = labels.index(d)
            cur, dstar = cur.flip(d)
            labels[k] = dstar
            seed = mutate(seed, k, new_label=dstar)
        for j, uarc in enumerate(labels):
            q = CVectorQuery(t, cur, uarc)
            crow = [cvector_eval(q, d) for d in seed.basis]
            kv = index(t, uarc)
            grow = [kv.get(d) for d in seed.basis]
            if (seed.c[j].tolist() != crow
                    or seed.g[j].tolist() != grow):
                mismatches += 1
        if not np.array_equal(seed.pairing_matrix(),
                              np.eye(seed.m, dtype=np.int64)):
            mismatches += 1
    _emit_json(args, {"paths": args.paths, "mismatches": mismatches})
    return 0 if mismatches == 0 else 1


def cmd_render(args) -> int:
    t = _load_tri(args.triangulation)
    z = t.z
    zz = ()
    if args.zigzag:
        e = _parse_point_token(z, args.zigzag[0])
        f = _parse_point_token(z, args.zigzag[1])
        zz = zigzag(t, e, f).vertices
    arcs = ()
    if args.arc:
        arcs = (_arc_from_tokens(z, args.arc),)
    spec = RenderSpec(z, triangulation=t, zigzag=zz, query_arcs=arcs,
                      window=tuple(args.window))
    _emit(args, render_svg(spec))
    return 0


# ---------------------------------------------------------------------------
# Parser and dispatch.


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="infgon",
        description="Exact combinatorics of triangulations, indices, "
                    "c-vectors, and root systems on finite and "
                    "infinity-gons.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, second_tri=False, arc=False, second_arc=False,
               zz=False):
        p.add_argument("--triangulation", required=True,
                       help="triangulation JSON file")
        if second_tri:
            p.add_argument("--second-triangulation", required=True)
        if arc:
            p.add_argument("--arc", nargs=2, metavar=("P", "Q"),
                           required=True,
                           help="endpoints: int, b:i, or Lg")
        if second_arc:
            p.add_argument("--second-arc", nargs=2, metavar=("P", "Q"),
                           required=True)
        if zz:
            p.add_argument("--zigzag", nargs=2, metavar=("E", "F"))
            p.add_argument("--arc", nargs=2, metavar=("P", "Q"))
        p.add_argument("--window", nargs=2, type=int, default=[-6, 6],
                       metavar=("LO", "HI"))
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--format", choices=["json", "svg"],
                       default="json")

    cmds = {
        "validate": (cmd_validate, {}),
        "index": (cmd_index, {"arc": True}),
        "cvector": (cmd_cvector, {"second_tri": True, "arc": True}),
        "dimvec": (cmd_dimvec, {"arc": True}),
        "image": (cmd_image, {"arc": True, "second_arc": True}),
        "realize": (cmd_realize, {"arc": True}),
        "decompose": (cmd_decompose, {}),
        "roots": (cmd_roots, {"arc": True}),
        "duality": (cmd_duality, {"second_tri": True}),
        "oracle": (cmd_oracle, {}),
        "render": (cmd_render, {"zz": True}),
    }
    for name, (fn, kwargs) in cmds.items():
        p = sub.add_parser(name)
        common(p, **kwargs)
        p.set_defaults(fn=fn)
        if name == "oracle":
            p.add_argument("--paths", type=int, default=100)
            p.add_argument("--max-len", type=int, default=10)
            p.add_argument("--seed", type=int, default=0)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except StepCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ModelError, RealizationUnsupported,
            UnattainedError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
