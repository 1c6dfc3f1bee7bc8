import os
import sys
import argparse
from dataclasses import dataclass, field
from typing import List, Optional

# Add the 'src' directory to the Python path to ensure robust imports
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)

import mpmath

from utils.errors import InvalidSpecError, WzwError
from utils.file_utils import render_table, write_document, write_table
from utils.logging_utils import DEFAULT_LOG_FILE, restore_logging, setup_logging, status
from utils.settings import load_settings
from utils.validation_utils import get_available_families, normalize_family, validate_spec_flags


@dataclass
class CommandResult:
    rows: List[dict] = field(default_factory=list)
    document: Optional[dict] = None
    ok: bool = True
    columns: Optional[List[str]] = None
    tables: Optional[List[tuple]] = None


def _spec(args):
    from wzw.lie.algebra import AlgebraSpec
    family, rank, level = validate_spec_flags(args.family, args.rank, args.level)
    return AlgebraSpec(family, rank, level)


def _ring(args):
    from wzw.fusion.ring import build_ring
    spec = _spec(args)
    return build_ring(spec, progress=not args.quiet)


def run_fusion(args) -> CommandResult:
    ring = _ring(args)
    dims = ring.fp_dims
    basis = [{'index': i, 'weight': ring.label(i), 'name': ring.pretty(i),
              'dual': ring.label(ring.dual[i]), 'fp_dim': round(float(dims[i]), 10)}
             for i in range(ring.size)]
    fusion = ring.rows()
    status(f"✅ {ring.name}: {ring.size} simple objects, {len(fusion)} fusion entries.")
    return CommandResult(fusion, {'spec': str(ring.spec), 'basis': basis, 'fusion': fusion},
                         tables=[('basis', basis), ('fusion', fusion)])


def run_modular_dump(args) -> CommandResult:
    from wzw.modular.smatrix import qdim, smatrix_oracle, verlinde_check
    from wzw.modular.twists import twist_table
    ring = _ring(args)
    twists = twist_table(ring)
    rows = [{'weight': ring.label(i), 'name': ring.pretty(i), 'twist': str(twists[i]),
             'qdim': mpmath.nstr(qdim(ring.spec, ring.basis[i]), 12)}
            for i in range(ring.size)]
    document = {'spec': str(ring.spec), 'simples': rows}
    ok = True
    if args.verlinde:
        report = verlinde_check(ring, smatrix_oracle(ring.spec, ring.basis))
        document['verlinde'] = {'max_deviation': report.max_deviation, 'passed': report.passed}
        ok = report.passed
        status(f"{'✅' if ok else '❌'} Verlinde deviation {report.max_deviation:.3e} over {report.triples} triples.")
    return CommandResult(rows, document, ok)


def run_autos(args) -> CommandResult:
    from wzw.autoeq.groups import abelian_invariants, cycles, twist_preserving_subgroup
    from wzw.autoeq.search import enumerate_fusion_autos
    from wzw.modular.twists import twist_table
    ring = _ring(args)
    group = enumerate_fusion_autos(ring)
    if args.braided:
        group = twist_preserving_subgroup(group, twist_table(ring))
    structure = abelian_invariants(group)
    rows = [{'generator': i + 1, 'cycles': cycles(g, ring.label)} for i, g in enumerate(group.generators)]
    status(f"✅ {'Twist-preserving' if args.braided else 'Fusion'} automorphisms of {ring.name}: "
           f"order {group.order}, {structure.describe()}.")
    document = {'spec': str(ring.spec), 'braided': args.braided, 'order': group.order,
                'structure': structure.describe(),
                'invariants': list(structure.invariants) if structure.invariants is not None else None,
                'generators': [row['cycles'] for row in rows]}
    return CommandResult(rows, document)


def run_simple_currents(args) -> CommandResult:
    from wzw.autoeq.simple_currents import braided_count_check, composition_law_check, simple_current_table
    from wzw.modular.twists import twist_table
    ring = _ring(args)
    twists = twist_table(ring)
    rows = simple_current_table(ring, twists)
    document = {'spec': str(ring.spec), 'currents': rows}
    ok = True
    if ring.spec.family == 'A':
        composition = composition_law_check(ring, twists)
        counts = braided_count_check(ring, twists)
        document['composition_law'] = {'pairs': composition.pairs, 'passed': composition.passed,
                                       'counterexample': composition.counterexample}
        document['braided_count'] = counts
        ok = composition.passed
        status(f"{'✅' if composition.passed else '❌'} Composition law over {composition.pairs} pairs.")
        if not counts['match']:
            status(f"⚠️ Twist-preserving currents {counts['twist_preserving']} vs 2^(p+t) = {counts['expected']}.")
    mismatches = [row['a'] for row in rows if not row['consistent']]
    if mismatches:
        status(f"⚠️ Braided criterion disagrees with the twists for a in {mismatches}.")
    return CommandResult(rows, document, ok)


def run_appendix(args) -> CommandResult:
    from wzw.appendix.unit_groups import appendix_grid, local_structure_check
    if args.local:
        rows = local_structure_check(args.max_prime_power)
    else:
        rows = appendix_grid(args.max_n, args.max_k, progress=not args.quiet)
    ok = all(row['match'] for row in rows)
    status(f"{'✅' if ok else '❌'} {sum(row['match'] for row in rows)}/{len(rows)} rows match.")
    return CommandResult(rows, {'rows': rows}, ok)


def run_ty(args) -> CommandResult:
    from wzw.constructions.tambara_yamagami import TYCategory, ty_autgroup, ty_pentagon_check
    rows = []
    for tau in (1, -1):
        ty = TYCategory(args.order, args.coefficient, tau)
        report = ty_pentagon_check(ty)
        aut = ty_autgroup(ty)
        squares = tuple(n for n in range(1, ty.m) if (n * n) % ty.m == 1) if ty.m > 1 else (0,)
        rows.append({'order': ty.m, 'coefficient': ty.c, 'tau': tau, 'equations': report.equations,
                     'max_residual': f"{report.max_residual:.3e}", 'pentagon': report.passed,
                     'aut_group': " ".join(map(str, aut)), 'squares_to_one': aut == squares})
    ok = all(row['pentagon'] and row['squares_to_one'] for row in rows)
    return CommandResult(rows, {'rows': rows}, ok)


def run_g2_algebras(args) -> CommandResult:
    from wzw.constructions.g2_algebras import (g2_decompose, g2_exceptional_automorphism, g2_full_algebra,
                                               search_space_size)
    from wzw.fusion.ring import build_ring
    from wzw.lie.algebra import AlgebraSpec
    ring = build_ring(AlgebraSpec('G2', 2, 4))
    auto = g2_exceptional_automorphism(ring)
    target = g2_full_algebra(ring, auto)
    matches = g2_decompose(target)
    rows = [{'decomposition': " + ".join(match)} for match in matches]
    status(f"{'✅' if len(matches) == 1 else '❌'} {len(matches)} decompositions of {list(target)} "
           f"in a search space of {search_space_size()}.")
    document = {'target': list(target), 'search_space': search_space_size(),
                'decompositions': [list(match) for match in matches]}
    return CommandResult(rows, document, len(matches) == 1)


def run_skein_verify(args) -> CommandResult:
    from verification_runner import run_skein_check
    systems = None if args.system == 'all' else [args.system]
    rows, locus_rows, ok = run_skein_check(systems, progress=not args.quiet, scan=not args.no_scan)
    return CommandResult(rows, {'families': rows, 'exceptional_levels': locus_rows}, ok)


def run_theorem_check(args) -> CommandResult:
    from verification_runner import run_theorem_check as run_grid
    families = [normalize_family(args.family)] if args.family else None
    report = run_grid(families, args.max_rank, args.max_level, args.g2_max_level,
                      progress=not args.quiet, xlsx_file=args.xlsx)
    rows = [row.as_dict() for row in report.rows]
    return CommandResult(rows, {'summary': report.summary(), 'rows': rows}, report.passed)


HANDLERS = {
    'fusion': run_fusion,
    'modular-dump': run_modular_dump,
    'autos': run_autos,
    'simple-currents': run_simple_currents,
    'appendix': run_appendix,
    'ty': run_ty,
    'g2-algebras': run_g2_algebras,
    'skein-verify': run_skein_verify,
    'theorem-check': run_theorem_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='key=value settings file (defaults to WZW_CONFIG_PATH)')
    common.add_argument('--max-weyl', type=int, help='Weyl group size bound')
    common.add_argument('--quiet', '-q', action='store_true', help='Disable progress bars')
    common.add_argument('--log', default=DEFAULT_LOG_FILE, help='Log file for status output')
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', help='Emit JSON')
    output.add_argument('--tsv', action='store_true', help='Emit TSV')
    common.add_argument('--out', help='Write results to this file instead of stdout')

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument('--family', '-f', required=True, help=f"One of {', '.join(get_available_families())}")
    spec.add_argument('--rank', '-r', type=int, help='Rank (implied for G2)')
    spec.add_argument('--level', '-k', type=int, required=True, help='Level')

    parser = argparse.ArgumentParser(description='Auto-equivalences of WZW modular categories')
    verbs = parser.add_subparsers(dest='verb', required=True, metavar='VERB')

    verbs.add_parser('fusion', parents=[common, spec], help='Basis and fusion table')
    dump = verbs.add_parser('modular-dump', parents=[common, spec], help='Twists and quantum dimensions')
    dump.add_argument('--verlinde', action='store_true', help='Cross-check fusion against the S-matrix')
    autos = verbs.add_parser('autos', parents=[common, spec], help='Fusion ring automorphism group')
    autos.add_argument('--braided', action='store_true', help='Restrict to twist-preserving automorphisms')
    verbs.add_parser('simple-currents', parents=[common, spec], help='Simple-current auto-equivalences')

    appendix = verbs.add_parser('appendix', parents=[common], help='Composition group against G(n, d)')
    appendix.add_argument('--max-n', type=int, default=60)
    appendix.add_argument('--max-k', type=int, default=12)
    appendix.add_argument('--local', action='store_true', help='Check the prime-power factors instead')
    appendix.add_argument('--max-prime-power', type=int, default=64)

    ty = verbs.add_parser('ty', parents=[common], help='Tambara-Yamagami pentagon and automorphisms')
    ty.add_argument('--order', type=int, default=5, help='Order m of the cyclic group')
    ty.add_argument('--coefficient', type=int, default=1, help='c in chi(i, j) = c ij / m')

    verbs.add_parser('g2-algebras', parents=[common], help='Algebra decomposition at G2 level 4')

    skein = verbs.add_parser('skein-verify', parents=[common], help='Planar algebra automorphism systems')
    skein.add_argument('--system', choices=['PH', 'BMW', 'G2', 'all'], default='all')
    skein.add_argument('--no-scan', action='store_true', help='Skip the exceptional-level scan')

    check = verbs.add_parser('theorem-check', parents=[common], help='Grid verification against the predictions')
    check.add_argument('--family', '-f', help='Restrict to one family')
    check.add_argument('--max-rank', type=int)
    check.add_argument('--max-level', type=int)
    check.add_argument('--g2-max-level', type=int)
    check.add_argument('--xlsx', help='Also write the report as an Excel workbook')
    return parser


def emit(result: CommandResult, args):
    """Writes results to stdout or --out; status lines stay on stderr."""
    if args.json:
        text = write_document(result.document if result.document is not None else {'rows': result.rows})
    elif result.tables:
        fmt = 'tsv' if args.tsv else 'text'
        text = "\n".join(f"# {title}\n" + render_table(rows, None, fmt) for title, rows in result.tables)
    else:
        text = render_table(result.rows, result.columns, 'tsv' if args.tsv else 'text')

    if not args.out:
        sys.stdout.write(text)
        return
    ext = os.path.splitext(args.out)[1].lower()
    if args.json or (ext == '.json' and result.document is not None):
        write_document(result.document if result.document is not None else {'rows': result.rows}, args.out)
    elif ext in ('.tsv', '.xlsx', '.json'):
        write_table(result.rows, args.out, columns=result.columns)
    else:
        os.makedirs(os.path.dirname(os.path.abspath(args.out)), exist_ok=True)
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(text)
    status(f"📁 Results saved to {os.path.abspath(args.out)}")


def main(argv=None) -> int:
    """Main application entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        load_settings(args.config, {'max_weyl': args.max_weyl})
    except ValueError as e:
        status(f"❌ Invalid configuration: {e}")
        return 2

    original_stderr, log_file = setup_logging(args.log, f"wzw {args.verb}")
    code = 1
    try:
        result = HANDLERS[args.verb](args)
        emit(result, args)
        code = 0 if result.ok else 1
    except InvalidSpecError as e:
        flag = f" ({e.flag})" if e.flag else ""
        status(f"❌ Invalid argument{flag}: {e}")
        code = 2
    except WzwError as e:
        status(f"❌ {type(e).__name__}: {e}")
    except Exception as e:
        status(f"\n❌ The run encountered a critical error: {e}")
    finally:
        restore_logging(original_stderr, log_file)
    return code


if __name__ == '__main__':
    sys.exit(main())
