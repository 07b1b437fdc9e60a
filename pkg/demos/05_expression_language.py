#!/usr/bin/env python3
"""The expression language: everything above, from one-line statements.

The same engine is scriptable through a small grammar (see the README or
``seqring --help``).  This demo feeds statements through the batch runner
and shows both the human and the JSON renderings, then runs an assert
script the way CI would.
"""

from seqring.cli import Config, format_json, format_text, run_statement

STATEMENTS = [
    "let p = series(k)",
    "let s = series(k^2)",
    "cmp(p, s)",
    "infgreater(s, p)",
    "classify(geom(1/2))",
    "st(geom(9/10))",
    "cmp(5 + delay(N, 5), N)",
    "classify(N^-1)",
    "deriv(x -> x^2 - 3*x, 2)",
    "cont(step, 0)",
    "patch(N, 1:99, 7:0)",
    "cmp(patch(N, 1:99, 7:0), N)",
]

config = Config()
env = {}
print("== statements, human rendering ==")
for text in STATEMENTS:
    result, code = run_statement(text, env, config)
    print(f"  {text:34} -> {format_text(result)}")

print("\n== the same results as single-line JSON ==")
for text in STATEMENTS[2:6]:
    result, _ = run_statement(text, env, config)
    print(" ", format_json(result, config))

print("\n== an assert script gates an exit code ==")
script = [
    "assert cmp(series(k), series(k^2)) == less",
    "assert st(geom(1/2)) == 2",
    "assert classify(N^-1) == infinitesimal",
    "assert cmp(N, series(k)) == equal",  # wrong on purpose: N < P
]
for line in script:
    result, code = run_statement(line, env, config)
    print(f"  exit {code}: {line}")
    if code:
        print(f"          ({format_text(result)})")
