"""Command-line front end.

Inputs arrive as --h/--s/--n flags (JSON fragments) or a single --json
file; output is human-readable by default, machine JSON with --json-out.

Exit codes: 0 ok, 1 verification failure, 2 inadmissible set,
3 parse error, 4 brute-force bound exceeded.
"""

from __future__ import annotations

import json
import sys
from importlib import resources

import click

from invpoly import (
    config,
    enumeration,
    expansions,
    graded as graded_mod,
    kernels,
    model,
    polynomials,
    posets,
)
from invpoly.errors import (
    BoundExceededError,
    InadmissibleSetError,
    InputError,
    InvpolyError,
    NoDescentError,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INADMISSIBLE = 2
EXIT_PARSE = 3
EXIT_BOUND = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_problem(h, s, n, json_file):
    try:
        data = {}
        if json_file:
            with open(json_file) as fh:
                data = json.load(fh)
        if h is not None:
            data["h"] = json.loads(h)
        if s is not None:
            data["S"] = json.loads(s)
        if n is not None:
            data["n"] = n
        hseq = model.HSequence.from_json(data["h"])
        S = model.PairSet.from_json(data["S"]) if "S" in data else None
        return hseq, S, data.get("n")
    except (KeyError, json.JSONDecodeError, InputError, TypeError) as exc:
        _fail(EXIT_PARSE, f"bad input: {exc}")


def _emit(payload: dict, human: str, json_out: bool):
    if json_out:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(human)


def _guard(fn):
    try:
        return fn()
    except InadmissibleSetError as exc:
        _fail(EXIT_INADMISSIBLE, str(exc))
    except NoDescentError as exc:
        _fail(EXIT_INADMISSIBLE, str(exc))
    except BoundExceededError as exc:
        _fail(EXIT_BOUND, str(exc))
    except InputError as exc:
        _fail(EXIT_PARSE, str(exc))


h_opt = click.option("--h", "h", default=None, help='h-sequence JSON, e.g. \'{"prefix":[],"tail_offset":2}\'')
s_opt = click.option("--s", "s", default=None, help="pair-set JSON, e.g. '[[1,3],[2,3]]'")
n_opt = click.option("--n", "n", type=int, default=None)
json_opt = click.option("--json", "json_file", default=None, help="problem spec file")
out_opt = click.option("--json-out", is_flag=True, help="emit machine-readable JSON")


@click.group()
def main():
    """Restricted inversion polynomials: exact counts, expansions, q-analogues."""


@main.command("eval")
@h_opt
@s_opt
@n_opt
@json_opt
@click.option("--perms", "want_perms", is_flag=True,
              help="list the matching permutations (forces brute force)")
@out_opt
def cmd_eval(h, s, n, json_file, want_perms, json_out):
    """Count permutations with the given restricted inversion set at n."""
    hseq, S, n = _load_problem(h, s, n, json_file)
    if S is None or n is None:
        _fail(EXIT_PARSE, "eval needs both S and n")

    def run():
        if not model.is_admissible(hseq, S):
            raise InadmissibleSetError(f"{S} is not h-admissible")
        if want_perms:
            perms = enumeration.enumerate_Ih(hseq, S, n)
            payload = {"S": S.to_json(), "n": n,
                       "perms": [p.to_json() for p in perms]}
            human = "\n".join(str(p) for p in perms) + f"\ncount: {len(perms)}"
            _emit(payload, human, json_out)
            return
        payload = {"S": S.to_json(), "n": n, "methods": {}}
        lines = []
        if n <= config.max_n():
            count = len(enumeration.enumerate_Ih(hseq, S, n))
            payload["methods"]["brute_force"] = count
            lines.append(f"brute force: {count}")
        for make in (expansions.fiber_expansion, expansions.b_expansion,
                     expansions.a_expansion):
            res = make(hseq, S)
            value = res.eval_raw(n)
            below = n < res.validity_floor
            payload["methods"][res.basis] = {
                "value": value,
                "below_validity_floor": below,
            }
            note = "  (below validity floor: polynomial value, not a count)" if below else ""
            lines.append(f"{res.basis}-expansion: {value}{note}")
        _emit(payload, "\n".join(lines), json_out)

    _guard(run)


@main.command("expand")
@h_opt
@s_opt
@json_opt
@click.option("--basis", type=click.Choice(["fiber", "b", "a"]), default="b")
@out_opt
def cmd_expand(h, s, json_file, basis, json_out):
    """Closed-form expansion in the chosen binomial basis."""
    hseq, S, _ = _load_problem(h, s, None, json_file)
    if S is None:
        _fail(EXIT_PARSE, "expand needs S")

    def run():
        make = {"fiber": expansions.fiber_expansion,
                "b": expansions.b_expansion,
                "a": expansions.a_expansion}[basis]
        res = make(hseq, S)
        human = (
            f"{basis}-expansion: {res.poly}\n"
            f"coefficients: {res.coeffs.to_json()}\n"
            f"monomial: {res.poly.to_monomial()}\n"
            f"valid as a count for n >= {res.validity_floor}"
        )
        _emit(res.to_json(), human, json_out)

    _guard(run)


@main.command("graded")
@h_opt
@s_opt
@n_opt
@json_opt
@out_opt
def cmd_graded(h, s, n, json_file, json_out):
    """Graded b-coefficients, plus the q-polynomial at n if given."""
    hseq, S, n = _load_problem(h, s, n, json_file)
    if S is None:
        _fail(EXIT_PARSE, "graded needs S")

    def run():
        ge = graded_mod.b_q_coefficients(hseq, S)
        payload = ge.to_json()
        lines = [f"b_{k}(q) = {ge.coeff(k)}" for k in ge.indices()]
        if n is not None:
            value = graded_mod.graded_expansion_eval(ge, n)
            payload["value_at_n"] = {"n": n, "poly": value.to_json()}
            lines.append(f"graded polynomial at n={n}: {value}")
        _emit(payload, "\n".join(lines), json_out)

    _guard(run)


@main.command("poset")
@h_opt
@s_opt
@json_opt
@out_opt
def cmd_poset(h, s, json_file, json_out):
    """The order on [h(m)] attached to S, its extensions and heights."""
    hseq, S, _ = _load_problem(h, s, None, json_file)
    if S is None:
        _fail(EXIT_PARSE, "poset needs S")

    def run():
        P = posets.build_poset(hseq, S)
        hm = hseq.h(S.m())
        exts = posets.linear_extensions(P)
        heights = posets.height_sequence(P, hm)
        payload = P.to_json()
        payload["extensions"] = [e.to_json() for e in exts]
        payload["heights"] = {"v": hm, "heights": heights}
        human = (
            f"poset on [{P.ground}], covers {P.cover_relations()}\n"
            f"{len(exts)} linear extensions\n"
            f"height sequence of {hm}: {heights}"
        )
        _emit(payload, human, json_out)

    _guard(run)


@main.command("admissible")
@h_opt
@n_opt
@json_opt
@out_opt
def cmd_admissible(h, n, json_file, json_out):
    """Group S_n by restricted inversion set."""
    hseq, _, n = _load_problem(h, None, n, json_file)
    if n is None:
        _fail(EXIT_PARSE, "admissible needs n")

    def run():
        classes = enumeration.enumerate_admissible(hseq, n)
        ordered = sorted(classes.items(), key=lambda kv: kv[0].pairs)
        payload = {
            "classes": [{"S": S.to_json(), "count": c} for S, c in ordered]
        }
        lines = [f"{S}: {c}" for S, c in ordered]
        lines.append(f"total classes: {len(ordered)}")
        _emit(payload, "\n".join(lines), json_out)

    _guard(run)


@main.command("poincare")
@h_opt
@n_opt
@json_opt
@out_opt
def cmd_poincare(h, n, json_file, json_out):
    """Betti generating function of the associated Hessenberg variety."""
    hseq, _, n = _load_problem(h, None, n, json_file)
    if n is None:
        _fail(EXIT_PARSE, "poincare needs n")

    def run():
        poly = enumeration.poincare(hseq, n)
        _emit(poly.to_json(), f"{str(poly).replace('q', 't')}", json_out)

    _guard(run)


@main.command("verify-conjecture")
@h_opt
@json_opt
@click.option("--cap", type=int, default=7, help="largest h(m(S)) to sweep")
@click.option("--jobs", type=int, default=1)
@out_opt
def cmd_verify_conjecture(h, json_file, cap, jobs, json_out):
    """Strong q-log-concavity sweep over all admissible sets up to the cap."""
    hseq, _, _ = _load_problem(h, None, None, json_file)

    def run():
        report = graded_mod.verify_conjecture(hseq, cap, jobs=jobs)
        human = (
            f"checked {report.checked} admissible sets (h(m) <= {cap}) "
            f"in {report.elapsed_ms:.0f} ms: "
            + ("all strongly q-log-concave" if report.ok
               else f"{len(report.violations)} VIOLATIONS")
        )
        _emit(report.to_json(), human, json_out)
        if not report.ok:
            sys.exit(EXIT_VERIFY_FAILED)

    _guard(run)


@main.command("verify")
@h_opt
@json_opt
@click.option("--cap", type=int, default=6, help="sweep size for the invariant suite")
@click.option("--golden", is_flag=True, help="replay the bundled worked examples")
@out_opt
def cmd_verify(h, json_file, cap, golden, json_out):
    """Run the cross-checking invariant suite (or the golden replay)."""
    if golden:
        failures = run_golden()
        if failures:
            for f in failures:
                click.echo(f"GOLDEN FAIL: {f}")
            sys.exit(EXIT_VERIFY_FAILED)
        click.echo("golden replay: all examples reproduced")
        return
    hseq, _, _ = _load_problem(h, None, None, json_file)

    def run():
        failures = run_invariant_suite(hseq, cap)
        payload = {"cap": cap, "failures": failures}
        human = (
            f"invariant suite at cap {cap}: "
            + ("all checks passed" if not failures else "FAILURES:\n" + "\n".join(failures))
        )
        _emit(payload, human, json_out)
        if failures:
            sys.exit(EXIT_VERIFY_FAILED)

    _guard(run)


def run_invariant_suite(hseq: model.HSequence, cap: int) -> list[str]:
    """Cross-checks over every nonempty admissible set with j(S) <= cap:
    triple expansion agreement against the oracle, coefficient conversion,
    the poset bridge, log-concavity, and the graded expansion."""
    failures = []
    classes = enumeration.enumerate_admissible(hseq, cap)
    for S in sorted((S for S in classes if S), key=lambda S: S.pairs):
        fib = expansions.fiber_expansion(hseq, S)
        b = expansions.b_expansion(hseq, S)
        a = expansions.a_expansion(hseq, S)
        mono = fib.poly.to_monomial()
        if not (b.poly.to_monomial() == mono == a.poly.to_monomial()):
            failures.append(f"{S}: expansions disagree as polynomials")
            continue
        for n in range(S.j(), cap + 1):
            if fib.eval_raw(n) != len(enumeration.enumerate_Ih(hseq, S, n)):
                failures.append(f"{S}: oracle mismatch at n={n}")
        conv = expansions.a_from_b(b.coeffs, S.m(), hseq.h(S.m()))
        if conv != a.coeffs:
            failures.append(f"{S}: coefficient conversion mismatch")
        if posets.b_from_heights(hseq, S) != b.coeffs:
            failures.append(f"{S}: poset-height route disagrees with b")
        for seq in (b.coeffs.values, a.coeffs.values):
            if not (polynomials.is_log_concave(seq)
                    and polynomials.has_no_internal_zeros(seq)):
                failures.append(f"{S}: coefficient sequence {seq} not PF2")
        if expansions.is_constant(hseq, S) != (expansions.degree_of(hseq, S) == 0):
            failures.append(f"{S}: constancy/degree mismatch")
        hm = hseq.h(S.m())
        if hm <= cap:
            ge = graded_mod.b_q_coefficients(hseq, S)
            for n in range(hm, cap + 1):
                if graded_mod.graded_expansion_eval(ge, n) != \
                        enumeration.graded_Ih_oracle(hseq, S, n):
                    failures.append(f"{S}: graded expansion mismatch at n={n}")
    report = graded_mod.verify_conjecture(hseq, min(cap, 7))
    if not report.ok:
        failures.append(f"strong q-log-concavity violations: {report.violations}")
    return failures


def run_golden() -> list[str]:
    """Replay every bundled worked-example fixture; return mismatch notes."""
    from invpoly.golden import replay

    failures = []
    root = resources.files("invpoly") / "golden"
    for entry in sorted(root.iterdir()):
        if entry.name.endswith(".json"):
            failures.extend(replay(json.loads(entry.read_text())))
    return failures


if __name__ == "__main__":
    main()
