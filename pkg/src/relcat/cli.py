"""Command-line interface: ``relcat COMMAND MODEL [options]``.

MODEL is a path to a model document or the name of a corpus entry
(``relcat list`` shows them).  Exit status: 0 success, 1 an invariant or
certificate check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from typing import List, Optional

from .algebra import Algebra, DegreeOverflow, FreeCDGA, tensor
from .certificates import check as check_certificate
from .homology import CohomologyError, cohomology, induced_map
from .ideal import IdealError
from .invariants import cuplength, nil_ker, tc_report, zcl
from .modelfile import DEFAULT_CUTOFF, ModelDocument, ModelError, MorphismEntry, parse_model
from .morphism import multiplication2, section_of_left_unit
from .msecat import (MAX_TENSOR_DIM, SectionError, msecat, normalize_retraction, obstruction_doc,
                     retraction_doc)
from .sullivan import ModelError as SullivanError, check_join_model, join_model
from .validate import check_morphism, validate_algebra

COMMANDS = ("validate", "cohomology", "cuplength", "zcl", "nilker", "join-model", "msecat", "tc-report")


class InputError(Exception):
    pass


class Violation(Exception):
    pass


def corpus_names() -> List[str]:
    root = resources.files("relcat").joinpath("corpus")
    return sorted(p.name[:-len(".model")] for p in root.iterdir() if p.name.endswith(".model"))


def read_model(ref: str):
    """(text, stem) for a path or a corpus name."""
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return fh.read(), os.path.splitext(os.path.basename(ref))[0]
    res = resources.files("relcat").joinpath("corpus", f"{ref}.model")
    if res.is_file():
        return res.read_text(encoding="utf-8"), ref
    raise InputError(f"no such model file or corpus entry: {ref!r}")


class Run:
    """One command invocation: collects output lines, report data and certificates."""

    def __init__(self, args, doc: ModelDocument, stem: str):
        self.args = args
        self.doc = doc
        self.stem = stem
        self.lines: List[str] = []
        self.data: dict = {}
        self.certificates: List[str] = []
        self.cutoff = args.cutoff if args.cutoff is not None else DEFAULT_CUTOFF
        if args.cert_dir is not None:
            self.cert_dir = args.cert_dir
        elif args.out:
            self.cert_dir = os.path.dirname(args.out) or "."
        else:
            self.cert_dir = "certificates"

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def certificate(self, what: str, doc: dict) -> str:
        """Write a certificate, re-check it independently, return its path."""
        os.makedirs(self.cert_dir, exist_ok=True)
        path = os.path.join(self.cert_dir, f"{self.stem}.{self.args.command}.{what}.json")
        text = json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep = check_certificate(json.loads(text))
        self.certificates.append(path)
        if not rep.ok:
            raise Violation(f"certificate {path} rejected by the checker: {'; '.join(rep.failures[:3])}")
        return path


def warn_degree_one(doc: ModelDocument) -> None:
    for e in doc.algebras.values():
        A = e.algebra
        if isinstance(A, FreeCDGA) and e.kind == "free":
            low = [g for g, d in A.gens if d == 1]
            if low:
                print(f"warning: {e.name} has degree-1 generators ({', '.join(low)}); "
                      "the bounds assume a simply-connected space", file=sys.stderr)


def model_label(run: Run) -> str:
    return run.doc.name or run.stem


# ---------------------------------------------------------------------------
# commands


def cmd_validate(run: Run) -> int:
    doc = run.doc
    bad = 0
    run.say(f"model: {model_label(run)}")
    results = {}
    for name, e in doc.algebras.items():
        rep = validate_algebra(e.algebra, simply_connected=doc.simply_connected)
        results[name] = [str(v) for v in rep.violations]
        status = "valid" if rep.ok else f"{len(rep.violations)} violation(s)"
        run.say(f"algebra {name}: {status} (checked to degree {rep.checked_upto})")
        for v in rep.violations:
            run.say(f"  {v}")
        bad += len(rep.violations)
    for name, m in doc.morphisms.items():
        rep = check_morphism(m.morphism)
        results[name] = [str(v) for v in rep.violations]
        status = "valid" if rep.ok else f"{len(rep.violations)} violation(s)"
        run.say(f"morphism {name}: {status}")
        for v in rep.violations:
            run.say(f"  {v}")
        bad += len(rep.violations)
    run.say(f"result: {'valid' if not bad else 'invalid'}")
    run.data = {"violations": results, "valid": not bad}
    return 1 if bad else 0


def _cohomology_of(A: Algebra):
    return cohomology(A, A.top_degree) if A.complete else cohomology(A)


def cmd_cohomology(run: Run) -> int:
    e = run.doc.model()
    H = _cohomology_of(e.algebra)
    T = H.table
    run.say(f"H*({e.name}) in degrees 0..{H.upto}" + (" (truncated)" if H.truncated else " (complete)"))
    dims = H.dims()
    for n, k in enumerate(dims):
        if k:
            names = [T.name(i) for i in T.basis(n)]
            run.say(f"H^{n}: {k}  {' '.join(names)}")
    prods = []
    for i in T.all_keys():
        for j in T.all_keys():
            if i <= j and T.degree(i) > 0 and T.degree(j) > 0:
                v = T.mul_basis(i, j)
                if v:
                    prods.append(f"{T.name(i)}*{T.name(j)} = {T.fmt(v)}")
    if prods:
        run.say("products:")
        for p in prods:
            run.say(f"  {p}")
    run.data = {"dims": dims, "truncated": H.truncated, "upto": H.upto,
                "classes": [[T.name(i), T.degree(i), e.algebra.fmt(r)] for i, r in enumerate(H.reps)],
                "products": prods}
    return 0


def cmd_cuplength(run: Run) -> int:
    e = run.doc.model()
    H = _cohomology_of(e.algebra)
    c = cuplength(H)
    path = run.certificate("cuplength", c.certificate(f"cuplength of H({e.name})"))
    run.say(f"cuplength(H) {_nil_text(c)}")
    run.say(f"certificate: {path}")
    run.data = {"cuplength": _nil_data(c)}
    return 0


def _nil_text(c) -> str:
    return f"= {c.value} (certified)" if c.certified else f">= {c.value} (uncertified)"


def _nil_data(c) -> dict:
    return {"value": c.value, "certified": c.certified, "text": _nil_text(c), "upto": c.result.upto}


def cmd_zcl(run: Run) -> int:
    e = run.doc.model()
    z = zcl(e.algebra)
    path = run.certificate("nil", z.certificate(f"nil(ker mu) for {e.name}"))
    run.say(f"nil(ker mu) {_nil_text(z)}")
    if not e.algebra.d_is_zero():
        run.say("note: the model has d != 0, so this is the upper bound nil(ker mu_A), "
                "not the cohomology zero-divisor cup-length")
    run.say(f"certificate: {path}")
    run.data = {"nil_ker_mu": _nil_data(z)}
    return 0


def _target(run: Run):
    try:
        return run.doc.target()
    except ModelError as exc:
        raise InputError(str(exc)) from None


def cmd_nilker(run: Run) -> int:
    m = _target(run)
    phi = m.morphism
    k = nil_ker(phi)
    p1 = run.certificate("nil", k.certificate(f"nil(ker {m.name})"))
    run.say(f"nil(ker {m.name}) {_nil_text(k)}")
    run.say(f"  model level: relcat(f_0) <= nil(ker {m.name})")
    run.say(f"certificate: {p1}")
    data = {"nil_ker": _nil_data(k), "direction": "upper bound for relcat(f_0)"}
    S, T = phi.source, phi.target
    if S.complete and T.complete:
        Hphi = induced_map(phi)
        kh = nil_ker(Hphi)
        p2 = run.certificate("nil-cohomology", kh.certificate(f"nil(ker H({m.name}))"))
        run.say(f"nil(ker H({m.name})) {_nil_text(kh)}")
        run.say("  cohomology level: nil(ker f*) <= wsecat(f)")
        run.say(f"certificate: {p2}")
        data["nil_ker_cohomology"] = _nil_data(kh)
        data["cohomology_direction"] = "lower bound for wsecat(f)"
    run.data = data
    return 0


def _section(run: Run, m):
    if m.morphism.section is None:
        raise InputError(f"morphism {m.name} has no section; declare one with 'section {m.name} NAME'")
    return m.morphism.section


def cmd_join_model(run: Run) -> int:
    m = _target(run)
    n = run.args.n
    jm = join_model(m.morphism, n, run.cutoff)
    rep = check_join_model(jm)
    log = [str(r) for r in jm.log]
    if run.args.log:
        with open(run.args.log, "w", encoding="utf-8") as fh:
            fh.write("\n".join(log) + ("\n" if log else ""))
    degs = {}
    for _, d in jm.algebra.gens:
        degs[d] = degs.get(d, 0) + 1
    run.say(f"join model k_{n} for {m.name}: {len(jm.algebra.gens)} generators, certified to degree {jm.cutoff}")
    run.say("generator degrees: " + (", ".join(f"{d}:{c}" for d, c in sorted(degs.items())) or "none"))
    run.say(f"K^{n + 1} = 0: {'yes' if jm.power_ideal.is_zero() else 'no'}")
    run.say(f"checks: {'all passed' if rep.ok else f'{len(rep.violations)} violation(s)'}")
    for v in rep.violations[:20]:
        run.say(f"  {v}")
    if run.args.log:
        run.say(f"construction log: {run.args.log}")
    run.data = {"n": n, "cutoff": jm.cutoff, "generators": [[g, d] for g, d in jm.algebra.gens],
                "log": log, "violations": [str(v) for v in rep.violations], "ok": rep.ok}
    return 0 if rep.ok else 1


def _run_msecat(run: Run, m, n_max: int):
    s = _section(run, m)
    res = msecat(m.morphism, s, n_max, run.cutoff, run.args.max_tensor_dim)
    steps = []
    for st in res.steps:
        if st.feasible:
            path = run.certificate(f"n{st.n}.retraction", retraction_doc(st.certificate))
            norm = normalize_retraction(st.certificate)
            if normalize_retraction(norm).matrices != norm.matrices:
                raise Violation("normalization is not idempotent")
            npath = run.certificate(f"n{st.n}.normalized", retraction_doc(norm))
            steps.append({"n": st.n, "feasible": True, "certificate": path,
                          "normalized_certificate": npath, "flags": dict(st.certificate.flags),
                          "normalized_flags": dict(norm.flags), "generators": st.generators,
                          "unknowns": st.unknowns, "equations": st.equations})
            if not norm.relative:
                raise Violation("normalized retraction fails a flag")
        else:
            path = run.certificate(f"n{st.n}.obstruction", obstruction_doc(st.obstruction))
            steps.append({"n": st.n, "feasible": False, "obstruction_degree": st.obstruction.degree,
                          "certificate": path, "generators": st.generators,
                          "unknowns": st.unknowns, "equations": st.equations})
    return res, steps


def cmd_msecat(run: Run) -> int:
    m = _target(run)
    res, steps = _run_msecat(run, m, run.args.n_max)
    run.say(f"morphism: {m.name}, n <= {run.args.n_max}, system degree {res.bound}"
            + (" (complete)" if res.complete else " (truncated below top degree)"))
    for st in steps:
        if st["feasible"]:
            run.say(f"n={st['n']}: retraction found; certificate: {st['certificate']}")
            run.say(f"     normalized (lands in K): {st['normalized_certificate']}")
        else:
            run.say(f"n={st['n']}: infeasible, obstruction in degree {st['obstruction_degree']}; "
                    f"certificate: {st['certificate']}")
    t = res.text()
    rel = t if t.startswith(">") else "= " + t
    run.say(f"msecat {rel}")
    run.say(f"mrelcat {rel}")
    run.say("(module-level invariants)")
    run.data = {"msecat": res.value, "text": res.text(), "n_max": res.n_max, "complete": res.complete,
                "degree_bound": res.bound, "steps": steps}
    return 0


def _diagonal_target(run: Run, e) -> MorphismEntry:
    """μ_A: A⊗A → A with the section a ↦ a⊗1, for documents without a morphism."""
    A = e.algebra
    if isinstance(A, FreeCDGA) and A.complete:
        A = A.to_table()
    AA = tensor(A, A)
    mu = multiplication2(A, AA)
    mu.section = section_of_left_unit(A, AA)
    return MorphismEntry("mu", f"{e.name}@{e.name}", e.name, "multiplication", mu, "s")


def cmd_tc_report(run: Run) -> int:
    e = run.doc.model()
    formal = run.args.formal or run.doc.formal
    ms = None
    ms_steps = None
    if run.args.msecat:
        m = _diagonal_target(run, e) if not run.doc.morphisms else _target(run)
        ms, ms_steps = _run_msecat(run, m, run.args.n_max)
    rep, low, up = tc_report(e.algebra, formal=formal, cutoff=run.cutoff, name=model_label(run),
                             msecat_result=ms)
    rep.lower.certificate = run.certificate("lower", low.certificate("zcl of H(A)"))
    rep.upper.certificate = run.certificate("upper", up.certificate("nil(ker mu_A)"))
    for line in rep.lines():
        run.say(line)
    run.say(f"certificates: {rep.lower.certificate}, {rep.upper.certificate}")
    run.data = rep.to_dict()
    if ms_steps is not None:
        run.data["module"]["steps"] = ms_steps
    return 0


HANDLERS = {
    "validate": cmd_validate, "cohomology": cmd_cohomology, "cuplength": cmd_cuplength,
    "zcl": cmd_zcl, "nilker": cmd_nilker, "join-model": cmd_join_model, "msecat": cmd_msecat,
    "tc-report": cmd_tc_report,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relcat", description="Rational CDGA invariants and TC bound reports.")
    p.add_argument("command", choices=COMMANDS + ("list",))
    p.add_argument("model", nargs="?", help="model file or corpus name")
    p.add_argument("--cutoff", type=int, default=None,
                   help=f"materialization degree (default: the document's, else {DEFAULT_CUTOFF})")
    p.add_argument("--n-max", type=int, default=4, help="largest n tried by msecat (default 4)")
    p.add_argument("--n", type=int, default=1, help="n for join-model (default 1)")
    p.add_argument("--max-tensor-dim", type=int, default=MAX_TENSOR_DIM,
                   help=f"msecat stops before dim(A)^(n+1) exceeds this (default {MAX_TENSOR_DIM})")
    p.add_argument("--formal", action="store_true", help="assert that the space is formal")
    p.add_argument("--msecat", action="store_true", help="tc-report: also run msecat on the target morphism (mu_A if none is declared)")
    p.add_argument("--out", help="write a machine-readable JSON report here")
    p.add_argument("--log", help="write the construction log here")
    p.add_argument("--cert-dir", help="directory for certificates (default: next to --out, else ./certificates)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        for name in corpus_names():
            print(name)
        return 0
    if args.model is None:
        parser.print_usage(sys.stderr)
        print("relcat: error: a model is required", file=sys.stderr)
        return 2
    if args.cutoff is not None and args.cutoff < 2:
        print("relcat: error: --cutoff must be at least 2", file=sys.stderr)
        return 2
    try:
        text, stem = read_model(args.model)
        doc = parse_model(text, cutoff=args.cutoff)
    except (InputError, ModelError) as exc:
        print(f"relcat: {args.model}: {exc}", file=sys.stderr)
        return 2
    warn_degree_one(doc)
    run = Run(args, doc, stem)
    try:
        status = HANDLERS[args.command](run)
    except (InputError, SectionError, SullivanError, CohomologyError, IdealError, DegreeOverflow) as exc:
        print(f"relcat: {args.command}: {exc}", file=sys.stderr)
        return 2
    except (Violation, AssertionError) as exc:
        for line in run.lines:
            print(line)
        print(f"relcat: {args.command}: invariant violated: {exc}", file=sys.stderr)
        return 1
    for line in run.lines:
        print(line)
    if args.out:
        report = {"command": args.command, "model": stem, "cutoff": run.cutoff,
                  "result": run.data, "certificates": run.certificates, "text": run.lines}
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return status


def main_exit() -> None:
    sys.exit(main())
