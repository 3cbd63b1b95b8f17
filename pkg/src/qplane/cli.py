"""Command-line front end: ``qplane <command> [options] args``.

Every command accepts ``--field generic|cyclotomic:<t>`` and
``--format json|text``.  Expressions equal to ``-`` are read from stdin,
one per line, in order.  JSON output has sorted keys and field elements as
canonical strings; failures print ``{"error": {"code", "message"}}`` and exit
with status 1.
"""

import argparse
import json
import sys

from .classify import ToricDecomposition, decompose
from .errors import QPlaneError
from .isotropy import isotropy, member
from .parsing import parse_automorphism, parse_expr, parse_field_mode
from .qalgebra import _top_level_sign, centralizer_contains, twisted_center, twisted_center_exponents
from .skewder import apply, inner_from, is_inner, validate


class _Inputs:
    """Resolves positional expressions, pulling ``-`` from stdin line by line."""

    def __init__(self, stdin):
        self.stdin = stdin
        self.lines = None

    def get(self, s):
        if s != "-":
            return s
        if self.lines is None:
            self.lines = [ln for ln in self.stdin.read().splitlines() if ln.strip()]
        if not self.lines:
            raise QPlaneError("stdin has no more expressions")
        return self.lines.pop(0)


def _s(a):
    return str(a)


def _derivation(args, ctx):
    sigma = parse_automorphism(args.sigma, ctx.field)
    dx = parse_expr(ctx.inputs.get(args.dx), ctx.field)
    dy = parse_expr(ctx.inputs.get(args.dy), ctx.field)
    return validate(sigma, dx, dy)


def _derivation_doc(d):
    return {"sigma": _s(d.sigma), "dx": _s(d.dx), "dy": _s(d.dy)}


# --- commands ---------------------------------------------------------------------


def cmd_normalize(args, ctx):
    a = parse_expr(ctx.inputs.get(args.expr), ctx.field)
    return {"result": _s(a)}, _s(a)


def cmd_mul(args, ctx):
    a = parse_expr(ctx.inputs.get(args.lhs), ctx.field)
    b = parse_expr(ctx.inputs.get(args.rhs), ctx.field)
    return {"result": _s(a * b)}, _s(a * b)


def cmd_validate(args, ctx):
    d = _derivation(args, ctx)
    doc = dict(_derivation_doc(d), valid=True)
    return doc, f"valid sigma-derivation: x -> {d.dx}, y -> {d.dy}"


def cmd_apply(args, ctx):
    d = _derivation(args, ctx)
    a = parse_expr(ctx.inputs.get(args.expr), ctx.field)
    r = apply(d, a)
    return {"result": _s(r)}, _s(r)


def cmd_inner(args, ctx):
    sigma = parse_automorphism(args.sigma, ctx.field)
    w = parse_expr(ctx.inputs.get(args.w), ctx.field)
    d = inner_from(w, sigma)
    return _derivation_doc(d), f"x -> {d.dx}\ny -> {d.dy}"


def cmd_is_inner(args, ctx):
    d = _derivation(args, ctx)
    w = is_inner(d)
    doc = {"inner": w is not None, "witness": None if w is None else _s(w)}
    text = "not inner" if w is None else f"inner, induced by w = {w}"
    return doc, text


def _decomposition_doc(dec):
    if isinstance(dec, ToricDecomposition):
        return {
            "w": _s(dec.w),
            "a_poly": [_s(c) for c in dec.a_poly],
            "b_poly": [_s(c) for c in dec.b_poly],
            "mn": None if dec.mn is None else list(dec.mn),
            "lambda1": _s(dec.lambda1),
            "lambda2": _s(dec.lambda2),
        }
    return {"w": _s(dec.w), "slices": [{"k": k, "b0": _s(s)} for k, s in dec.slices]}


def _decomposition_text(dec):
    lines = [f"w = {dec.w}"]
    if isinstance(dec, ToricDecomposition):
        if dec.a_poly:
            lines.append("a(y) = " + ", ".join(f"[{r}] {c}" for r, c in enumerate(dec.a_poly) if c))
        if dec.b_poly:
            lines.append("b(x) = " + ", ".join(f"[{s}] {c}" for s, c in enumerate(dec.b_poly) if c))
        if dec.mn is not None:
            lines.append(f"(m, n) = {dec.mn}")
            lines.append(f"lambda1 = {dec.lambda1}")
            lines.append(f"lambda2 = {dec.lambda2}")
    else:
        for k, s in dec.slices:
            lines.append(f"residual slice k = {k}: b0 = {s}")
    return "\n".join(lines)


def cmd_decompose(args, ctx):
    dec = decompose(_derivation(args, ctx))
    return _decomposition_doc(dec), _decomposition_text(dec)


def _flip_part_doc(fp):
    if fp is None:
        return None
    return {
        "kind": fp.kind.value,
        "variables": list(fp.variables),
        "conditions": [
            {"exponents": list(c.exponents), "value": _s(c.value), "source": c.source} for c in fp.conditions
        ],
        "reason": fp.reason,
    }


def _flip_part_text(fp):
    if fp.kind.value != "conditions":
        return fp.kind.value + (f" ({fp.reason})" if fp.reason else "")
    if not fp.conditions:
        return "all centralizing flips"
    eqs = []
    for c in fp.conditions:
        mono = "*".join(f"{v}^{e}" for v, e in zip(fp.variables, c.exponents) if e) or "1"
        eqs.append(f"{mono} = {c.value}")
    return "; ".join(eqs)


def cmd_isotropy(args, ctx):
    d = _derivation(args, ctx)
    desc = isotropy(d)
    st = desc.structure
    if d.sigma.is_toric:
        lattice = [list(v) for v in desc.lattice.vectors]
    else:
        lattice = [[e] for e in desc.extra_toric_conditions]
    doc = {
        "lattice": lattice,
        "invariant_factors": list(st.invariant_factors),
        "is_finite": st.is_finite,
        "order": st.order,
        "flip_part": _flip_part_doc(desc.flip_part),
    }
    if desc.slicewise_flip_part is not None:
        doc["slicewise_flip_part"] = _flip_part_doc(desc.slicewise_flip_part)
    text = [
        "lattice: " + (", ".join("(" + ",".join(map(str, v)) + ")" for v in lattice) or "(none)"),
        f"toric part: {st}" + (f" (order {st.order})" if st.is_finite else " (infinite)"),
        "flip part: " + _flip_part_text(desc.flip_part),
    ]
    return doc, "\n".join(text)


def cmd_member(args, ctx):
    d = _derivation(args, ctx)
    rho = parse_automorphism(args.rho, ctx.field)
    ok = member(rho, d)
    return {"member": ok}, "member" if ok else "not a member"


def cmd_centralizer(args, ctx):
    sigma = parse_automorphism(args.sigma, ctx.field)
    field = ctx.field
    if sigma.is_toric:
        flips = field.is_minus_one and sigma.mu1 == sigma.mu2
        desc = "all toric automorphisms" + (" and all flips" if flips else "")
    else:
        g = str(sigma.mu2 / sigma.mu1)
        g = f"({g})" if _top_level_sign(g) or "/" in g else g
        desc = f"toric:mu,mu and flip:mu,{g}*mu for mu != 0"
    doc = {"sigma": _s(sigma), "description": desc}
    text = desc
    if args.rho is not None:
        rho = parse_automorphism(args.rho, field)
        ok = centralizer_contains(sigma, rho)
        doc["contains"] = ok
        text += f"\n{rho} {'commutes' if ok else 'does not commute'} with sigma"
    return doc, text


def cmd_twisted_center(args, ctx):
    sigma = parse_automorphism(args.sigma, ctx.field)
    tc = twisted_center(sigma)
    ij = twisted_center_exponents(sigma)
    doc = {"kind": tc.kind.value, "t": tc.t, "monomial": None if ij is None else list(ij), "description": str(tc)}
    return doc, str(tc)


# --- plumbing ----------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="qplane", description="sigma-derivations of the quantum plane")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="generic", help="generic (q transcendental) or cyclotomic:<t>")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    def deriv(sp):
        sp.add_argument("--sigma", required=True, help="toric:<mu1>,<mu2> or flip:<mu1>,<mu2>")
        sp.add_argument("dx", help="delta(x)")
        sp.add_argument("dy", help="delta(y)")

    add("normalize", cmd_normalize, "normal form of an expression").add_argument("expr")
    sp = add("mul", cmd_mul, "product of two expressions")
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    deriv(add("validate", cmd_validate, "check generator images define a sigma-derivation"))
    sp = add("apply", cmd_apply, "evaluate a sigma-derivation")
    deriv(sp)
    sp.add_argument("expr")
    sp = add("inner", cmd_inner, "inner sigma-derivation induced by w")
    sp.add_argument("--sigma", required=True)
    sp.add_argument("w")
    deriv(add("is_inner", cmd_is_inner, "decide innerness, with a witness"))
    deriv(add("decompose", cmd_decompose, "canonical decomposition"))
    deriv(add("isotropy", cmd_isotropy, "isotropy group"))
    sp = add("member", cmd_member, "does rho lie in the isotropy group")
    deriv(sp)
    sp.add_argument("--rho", required=True)
    sp = add("centralizer", cmd_centralizer, "automorphisms commuting with sigma")
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--rho")
    sp = add("twisted_center", cmd_twisted_center, "the sigma-twisted center")
    sp.add_argument("--sigma", required=True)
    return p


class _Context:
    def __init__(self, field, inputs):
        self.field = field
        self.inputs = inputs


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    args = build_parser().parse_args(argv)
    try:
        ctx = _Context(parse_field_mode(args.field), _Inputs(stdin))
        doc, text = args.func(args, ctx)
    except QPlaneError as e:
        if args.format == "json":
            stdout.write(json.dumps({"error": {"code": e.code, "message": str(e)}}, sort_keys=True) + "\n")
        stderr.write(f"error {e.code}: {e}\n")
        return 1
    if args.format == "json":
        stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
