"""Census a small order exhaustively, look at the extremal classes, and run
the claim battery.

Run:  python3 demos/04_census_and_claims.py
"""

from gpmop import catalan, claim_report_text, run_census, verify_paper_claims

n = 7
records = run_census(n, dedupe=False)
classes = run_census(n, dedupe=True)
print(f"order {n}: {len(records)} triangulations (catalan({n - 2}) = {catalan(n - 2)}), "
      f"{len(classes)} isomorphism classes")

cap = (2 * n) // 3
print(f"\nclass table (two-thirds cap = {cap}):")
for rec in classes:
    labels = ";".join(rec.family_labels) or "-"
    print(f"  gp={rec.gp}  max_deg={rec.max_degree}  internal={rec.internal_triangles}  "
          f"striped={str(rec.striped):<5}  {labels}")

extremal = [r for r in classes if r.gp == cap]
print(f"\nclasses attaining the cap: {len(extremal)} "
      f"({'; '.join(';'.join(r.family_labels) for r in extremal)})")

print("\nclaim battery over orders 6..8:")
print(claim_report_text(verify_paper_claims(6, 8)), end="")
