"""Command line front end.

Generate multiplication tables by either route, verify them against the
identity suites, decompose a table into its controlling spin-tensor,
export to LaTeX/CSV/JSON, and compare two tables.

Exit codes: 0 on success, 1 when a check or comparison fails, 2 on
usage or input errors.
"""

import json
import sys

import click

from . import builder, cayley, clifford, tableio, verifier


def _load(path: str) -> cayley.MultTable:
    try:
        return tableio.load_table(path)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise click.UsageError("cannot read table %s: %s" % (path, exc))


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


@click.group()
@click.version_option()
def main():
    """Exact constructors and verifiers for metric hypercomplex
    multiplication tables."""


@main.command("gen-cd")
@click.option("--dim", type=int, required=True,
              help="Algebra dimension, a power of two.")
@click.option("--cap", type=int, default=8, show_default=True,
              help="Resource cap on the number of doubling steps.")
@click.option("--out", default="-", show_default=True,
              help="Output path, - for stdout.")
def gen_cd(dim, cap, out):
    """Generate a table by iterated doubling from the reals."""
    k = dim.bit_length() - 1
    if dim <= 0 or (1 << k) != dim:
        raise click.UsageError("--dim must be a positive power of two")
    try:
        t = cayley.cd_generate(k, cap=cap)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(tableio.table_to_json(t), out)


@main.command("gen-spinor")
@click.option("--dim", type=int, default=16, show_default=True,
              help="Algebra dimension; only 16 is supported.")
@click.option("--emit-gen", is_flag=True,
              help="Emit the raw generating table instead of the "
                   "canonical combination.")
@click.option("--out", default="-", show_default=True,
              help="Output path, - for stdout.")
def gen_spinor(dim, emit_gen, out):
    """Generate the canonical dimension-16 table by the spinor route."""
    if dim != 16:
        raise click.UsageError("the spinor route supports --dim 16 only")
    t = builder.spinor_pipeline(emit_gen=emit_gen)
    _emit(tableio.table_to_json(t), out)


@main.command("verify")
@click.argument("table_file")
@click.option("--suite", default="all", show_default=True,
              type=click.Choice(["axioms", "structural", "derived",
                                 "moufang", "all"]))
@click.option("--seed", type=int, default=None,
              help="Seed for sampled checks; HYPFORGE_SEED overrides "
                   "the default when unset.")
@click.option("--samples", type=int, default=verifier.DEFAULT_SAMPLES,
              show_default=True)
@click.option("--json", "as_json", is_flag=True,
              help="Emit the report as JSON.")
def verify(table_file, suite, seed, samples, as_json):
    """Run an identity suite against a table file."""
    t = _load(table_file)
    rep = verifier.run_suite(t, suite, seed=seed, samples=samples)
    click.echo(rep.to_json() if as_json else str(rep))
    sys.exit(0 if rep.ok else 1)


@main.command("decompose")
@click.argument("table_file")
@click.option("--out", default="-", show_default=True,
              help="Output path for the spin-tensor JSON, - for stdout.")
def decompose_cmd(table_file, out):
    """Solve for the controlling spin-tensor of a table and verify the
    exact reconstruction."""
    t = _load(table_file)
    if t.dim == 8:
        ops = clifford.base_operators_n8()
    elif t.dim == 16:
        ops = clifford.operator_chain()[2]
    else:
        raise click.UsageError("decompose supports dimensions 8 and 16")
    try:
        th0, th_a, _eta = builder.decompose(t, ops)
    except ValueError as exc:
        click.echo("decomposition failed: %s" % exc, err=True)
        sys.exit(1)
    doc = {
        "dim": t.dim,
        "scalar_part": tableio.spin_tensor_to_dict(th0),
        "antisymmetric_part": tableio.spin_tensor_to_dict(th_a),
        "reconstruction": "exact",
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", out)


@main.command("export")
@click.argument("table_file")
@click.option("--format", "fmt", required=True,
              type=click.Choice(["latex", "csv", "json"]))
@click.option("--out", default="-", show_default=True)
def export(table_file, fmt, out):
    """Export a table file as LaTeX, CSV, or normalized JSON."""
    t = _load(table_file)
    try:
        if fmt == "latex":
            text = tableio.export_latex(t)
        elif fmt == "csv":
            text = tableio.export_csv(t)
        else:
            text = tableio.table_to_json(t)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(text, out)


@main.command("compare")
@click.argument("file1")
@click.argument("file2")
@click.option("--mode", default="exact", show_default=True,
              type=click.Choice(["exact", "iso"]))
@click.option("--json", "as_json", is_flag=True,
              help="Emit the verdict as JSON.")
def compare(file1, file2, mode, as_json):
    """Compare two table files entrywise or up to signed permutation."""
    t1 = _load(file1)
    t2 = _load(file2)
    rep = verifier.compare_tables(t1, t2, mode)
    click.echo(rep.to_json() if as_json else str(rep))
    sys.exit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
