"""Command-line front end: checks, constructions, search, corpus export.

Exit codes follow the verification contract: 0 when every requested
check passes, 1 when a check fails, 2 on usage or parse errors.  Reports
render as text or machine-readable JSON mirroring the AxiomReport
structure, byte-for-byte deterministic for identical inputs.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import corpus as corpus_mod
from . import fileformat as ff
from .emodcat import check_entwined_module
from .entwining import (
    DoubleQuantumGroup,
    EntwiningMap,
    HomCA,
    MonoidalEntwiningDatum,
    check_antipode_compat,
    check_double_quantum_group,
    check_entwining,
    check_monoidal_datum,
)
from .hopfcore import check_hopf, dual_hopf
from .pivribbon import find_morphisms, verify_pivotal, verify_ribbon
from .report import AxiomReport
from .smash import smash_coproduct, smash_product
from .exactla import rat_to_str


def _max_workers() -> int:
    env = os.environ.get("ENTWINE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise click.UsageError(f"ENTWINE_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _load(path):
    try:
        return ff.load(path)
    except FileNotFoundError:
        raise click.UsageError(f"{path}: no such file")
    except ff.FileFormatError as exc:
        raise click.UsageError(f"{path}: {exc}")


def _write_report_file(report_out, docs) -> None:
    payload = docs[0] if len(docs) == 1 else docs
    with open(report_out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit_report(label: str, report: AxiomReport, fmt: str, report_out=None) -> None:
    doc = {"subject": label, **report.to_dict()}
    if fmt == "json":
        click.echo(json.dumps(doc, sort_keys=True, indent=2))
    else:
        if label:
            click.echo(f"== {label}")
        click.echo(report.render_text())
    if report_out:
        _write_report_file(report_out, [doc])


def _run_file_checks(paths, runner, fmt, report_out) -> bool:
    """Check many files, possibly in parallel; output stays in input order."""
    if len(paths) == 1:
        reports = [runner(paths[0])]
    else:
        with ThreadPoolExecutor(max_workers=_max_workers()) as pool:
            reports = list(pool.map(runner, paths))
    ok = True
    docs = []
    for path, report in zip(paths, reports):
        label = path if len(paths) > 1 else ""
        _emit_report(label, report, fmt, None)
        docs.append({"subject": label or path, **report.to_dict()})
        ok &= report.overall
    if report_out:
        _write_report_file(report_out, docs)
    return ok


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    help="report rendering",
)
_report_out_option = click.option(
    "--report-out", type=click.Path(), default=None,
    help="also write the JSON report to this path",
)


@click.group()
def main():
    "Exact verification of Hopf/entwining structure data."


@main.group()
def check():
    "Run axiom checks against structure files."


def _full_datum_report(e) -> AxiomReport:
    base = e.base if isinstance(e, MonoidalEntwiningDatum) else e
    d = MonoidalEntwiningDatum(base)
    rep = check_entwining(base).merged_with(check_monoidal_datum(d))
    return rep.merged_with(check_antipode_compat(d))


def _full_dqg_report(q: DoubleQuantumGroup) -> AxiomReport:
    rep = _full_datum_report(q.datum.base)
    return rep.merged_with(check_double_quantum_group(q))


@check.command(name="hopf", help="Full Hopf axiom suite on hopf files.")
@click.argument("files", nargs=-1, required=True, type=click.Path())
@_format_option
@_report_out_option
def check_hopf_cmd(files, fmt, report_out):
    from .hopfcore import HopfAlgebraData

    def run_one(path):
        obj = _load(path)
        if not isinstance(obj, HopfAlgebraData):
            raise click.UsageError(f"{path}: expected a hopf file")
        return check_hopf(obj)

    ok = _run_file_checks(list(files), run_one, fmt, report_out)
    sys.exit(0 if ok else 1)


@check.command(name="entwining", help="Basic entwining axioms on entwining/dqg files.")
@click.argument("files", nargs=-1, required=True, type=click.Path())
@_format_option
@_report_out_option
def check_entwining_cmd(files, fmt, report_out):
    def run_one(path):
        obj = _load(path)
        if isinstance(obj, DoubleQuantumGroup):
            return check_entwining(obj.datum.base)
        if isinstance(obj, EntwiningMap):
            return check_entwining(obj)
        raise click.UsageError(f"{path}: expected an entwining or dqg file")

    ok = _run_file_checks(list(files), run_one, fmt, report_out)
    sys.exit(0 if ok else 1)


@check.command(name="datum", help="Entwining + monoidal + antipode-compat axioms.")
@click.argument("files", nargs=-1, required=True, type=click.Path())
@_format_option
@_report_out_option
def check_datum_cmd(files, fmt, report_out):
    def run_one(path):
        obj = _load(path)
        if isinstance(obj, DoubleQuantumGroup):
            return _full_datum_report(obj.datum.base)
        if isinstance(obj, EntwiningMap):
            return _full_datum_report(obj)
        raise click.UsageError(f"{path}: expected an entwining or dqg file")

    ok = _run_file_checks(list(files), run_one, fmt, report_out)
    sys.exit(0 if ok else 1)


@check.command(name="dqg", help="Full double-structure axiom chain on dqg files.")
@click.argument("files", nargs=-1, required=True, type=click.Path())
@_format_option
@_report_out_option
def check_dqg_cmd(files, fmt, report_out):
    def run_one(path):
        obj = _load(path)
        if not isinstance(obj, DoubleQuantumGroup):
            raise click.UsageError(f"{path}: expected a dqg file")
        return _full_dqg_report(obj)

    ok = _run_file_checks(list(files), run_one, fmt, report_out)
    sys.exit(0 if ok else 1)


@check.command(name="module", help="Entwined-module axioms on module files.")
@click.argument("files", nargs=-1, required=True, type=click.Path())
@_format_option
@_report_out_option
def check_module_cmd(files, fmt, report_out):
    from .emodcat import EntwinedModule

    def run_one(path):
        obj = _load(path)
        if not isinstance(obj, EntwinedModule):
            raise click.UsageError(f"{path}: expected a module file")
        return check_entwined_module(obj)

    ok = _run_file_checks(list(files), run_one, fmt, report_out)
    sys.exit(0 if ok else 1)


def _attach_morphism(datum_obj, morph_path) -> HomCA:
    m = _load(morph_path)
    if not isinstance(m, ff.LoadedMorphism):
        raise click.UsageError(f"{morph_path}: expected a morphism file")
    base = datum_obj.base if isinstance(datum_obj, MonoidalEntwiningDatum) else datum_obj
    d = MonoidalEntwiningDatum(base)
    if m.map.nrows != d.a_dim or m.map.ncols != d.c_dim:
        raise click.UsageError(
            f"{morph_path}: map is {m.map.nrows}x{m.map.ncols}, expected "
            f"{d.a_dim}x{d.c_dim} for this datum"
        )
    return HomCA(d, m.map)


@check.command(name="pivotal", help="Verify an entwined pivotal morphism.")
@click.option("--datum", "datum_path", required=True, type=click.Path())
@click.option("--morphism", "morph_path", required=True, type=click.Path())
@_format_option
@_report_out_option
def check_pivotal_cmd(datum_path, morph_path, fmt, report_out):
    obj = _load(datum_path)
    if isinstance(obj, DoubleQuantumGroup):
        obj = obj.datum.base
    if not isinstance(obj, EntwiningMap):
        raise click.UsageError(f"{datum_path}: expected an entwining or dqg file")
    g = _attach_morphism(obj, morph_path)
    rep = verify_pivotal(g.datum, g)
    _emit_report("", rep, fmt, report_out)
    sys.exit(0 if rep.overall else 1)


@check.command(name="ribbon", help="Verify an entwined ribbon morphism.")
@click.option("--dqg", "dqg_path", required=True, type=click.Path())
@click.option("--morphism", "morph_path", required=True, type=click.Path())
@_format_option
@_report_out_option
def check_ribbon_cmd(dqg_path, morph_path, fmt, report_out):
    q = _load(dqg_path)
    if not isinstance(q, DoubleQuantumGroup):
        raise click.UsageError(f"{dqg_path}: expected a dqg file")
    g = _attach_morphism(q.datum.base, morph_path)
    rep = verify_ribbon(q, HomCA(q.datum, g.map))
    _emit_report("", rep, fmt, report_out)
    sys.exit(0 if rep.overall else 1)


@main.group()
def build():
    "Construct derived objects and save them to structure files."


def _load_datum(path) -> MonoidalEntwiningDatum:
    obj = _load(path)
    if isinstance(obj, DoubleQuantumGroup):
        return obj.datum
    if isinstance(obj, EntwiningMap):
        return MonoidalEntwiningDatum(obj)
    raise click.UsageError(f"{path}: expected an entwining or dqg file")


@build.command(name="smash", help="Smash product Hopf algebra of a datum.")
@click.option("--datum", "datum_path", required=True, type=click.Path())
@click.option("-o", "--output", required=True, type=click.Path())
def build_smash_cmd(datum_path, output):
    d = _load_datum(datum_path)
    src_hash = ff.content_hash(ff.to_payload(d))
    ff.save(smash_product(d), output,
            metadata={"construction": "smash_product", "source_hash": src_hash})


@build.command(name="cosmash", help="Smash coproduct Hopf algebra of a datum.")
@click.option("--datum", "datum_path", required=True, type=click.Path())
@click.option("-o", "--output", required=True, type=click.Path())
def build_cosmash_cmd(datum_path, output):
    d = _load_datum(datum_path)
    src_hash = ff.content_hash(ff.to_payload(d))
    ff.save(smash_coproduct(d), output,
            metadata={"construction": "smash_coproduct", "source_hash": src_hash})


@build.command(name="double", help="Drinfeld double of a Hopf algebra file.")
@click.option("--hopf", "hopf_path", required=True, type=click.Path())
@click.option("-o", "--output", required=True, type=click.Path())
def build_double_cmd(hopf_path, output):
    from .hopfcore import HopfAlgebraData

    h = _load(hopf_path)
    if not isinstance(h, HopfAlgebraData):
        raise click.UsageError(f"{hopf_path}: expected a hopf file")
    src_hash = ff.content_hash(ff.to_payload(h))
    ff.save(corpus_mod.drinfeld_double(h), output,
            metadata={"construction": "drinfeld_double", "source_hash": src_hash})


@build.command(name="dual", help="Dual Hopf algebra, optionally op/cop twisted.")
@click.option("--hopf", "hopf_path", required=True, type=click.Path())
@click.option("--twist", type=click.Choice(["plain", "op", "cop"]), default="plain")
@click.option("-o", "--output", required=True, type=click.Path())
def build_dual_cmd(hopf_path, twist, output):
    from .hopfcore import HopfAlgebraData

    h = _load(hopf_path)
    if not isinstance(h, HopfAlgebraData):
        raise click.UsageError(f"{hopf_path}: expected a hopf file")
    src_hash = ff.content_hash(ff.to_payload(h))
    ff.save(dual_hopf(h, twist), output,
            metadata={"construction": f"dual_{twist}", "source_hash": src_hash})


@main.group(name="find")
def find_grp():
    "Search for pivotal/ribbon morphism candidates."


def _emit_finder(res) -> None:
    doc = {
        "status": res.status,
        "notes": res.notes,
        "solutions": [
            [[rat_to_str(x) for x in row] for row in c.map.map.rows()]
            for c in res.solutions
        ],
    }
    if res.family is not None:
        doc["family"] = {
            "particular": [rat_to_str(x) for x in res.family.particular],
            "nullspace_basis": [
                [rat_to_str(x) for x in v] for v in res.family.nullspace_basis
            ],
        }
    click.echo(json.dumps(doc, sort_keys=True, indent=2))


@find_grp.command(name="pivotal")
@click.option("--datum", "datum_path", required=True, type=click.Path())
@click.option("--max-params", type=int, default=4, show_default=True)
def find_pivotal_cmd(datum_path, max_params):
    d = _load_datum(datum_path)
    _emit_finder(find_morphisms(d, "pivotal", max_params))


@find_grp.command(name="ribbon")
@click.option("--dqg", "--datum", "dqg_path", required=True, type=click.Path())
@click.option("--max-params", type=int, default=4, show_default=True)
def find_ribbon_cmd(dqg_path, max_params):
    q = _load(dqg_path)
    if not isinstance(q, DoubleQuantumGroup):
        raise click.UsageError(f"{dqg_path}: expected a dqg file")
    _emit_finder(find_morphisms(q, "ribbon", max_params))


@main.command(name="corpus", help="Export a built-in example structure.")
@click.argument("name")
@click.option("-o", "--output", required=True, type=click.Path())
def corpus_cmd(name, output):
    try:
        _kind, obj = corpus_mod.corpus_build(name)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0]))
    ff.save(obj, output, name=name, metadata={"construction": f"corpus:{name}"})


@main.command(name="corpus-list", help="List the built-in corpus names.")
def corpus_list_cmd():
    for name in corpus_mod.corpus_names():
        click.echo(name)


@main.command(name="report", help="Re-render a saved JSON report.")
@click.argument("file", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def report_cmd(file, fmt):
    try:
        with open(file, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise click.UsageError(f"{file}: no such file")
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"{file}: not valid JSON: {exc}")
    docs = doc if isinstance(doc, list) else [doc]
    if fmt == "json":
        click.echo(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for one in docs:
            subject = one.get("subject")
            if subject:
                click.echo(f"== {subject}")
            for item in one.get("items", []):
                mark = "pass" if item.get("passed") else "FAIL"
                line = f"{mark}  {item.get('axiom')}"
                w = item.get("witness")
                if w:
                    line += f"  at basis {tuple(w.get('basis', ()))}"
                click.echo(line)
            click.echo("overall: " + ("pass" if one.get("overall") else "FAIL"))
    sys.exit(0 if all(one.get("overall") for one in docs) else 1)


if __name__ == "__main__":
    main()
