"""Run the vulnerability-assessment campaign: scenarios x attacks matrix.

Attacks cover the four benchmark region sizes, the four quadrant zones,
a copy-paste concealment, and a channel swap.  The report marks whether
each attack was detected and whether the mismatch map overlaps the
attacked area.
"""

import photoseal as ps

CAMERA_ID = "campaign-camera"

image = ps.photo_image(344, 512, seed=11)

attacks = [
    ps.AttackSpec(mode="blackout", region=(37, 51, 80, 54)),
    ps.AttackSpec(mode="blackout", region=(205, 118, 16, 16)),
    ps.AttackSpec(mode="blackout", region=(330, 260, 8, 8)),
    ps.AttackSpec(mode="constant", region=(101, 222, 4, 4), value=200),
    ps.AttackSpec(mode="blackout", zone=1),
    ps.AttackSpec(mode="blackout", zone=2),
    ps.AttackSpec(mode="blackout", zone=3),
    ps.AttackSpec(mode="blackout", zone=4),
    ps.AttackSpec(mode="copy", region=(60, 200, 48, 40), src=(301, 37, 48, 40)),
    ps.AttackSpec(mode="channel_swap", channels=(0, 2)),
]

report = ps.run_campaign(image, CAMERA_ID, list(ps.SCENARIOS), attacks)

detected = sum(1 for r in report.rows if r["attack"] != "none" and r["detected"])
total = sum(1 for r in report.rows if r["attack"] != "none")
clean_ok = all(r["authentic"] for r in report.rows if r["attack"] == "none")

print(report.to_csv())
print(f"clean rows authentic: {clean_ok}")
print(f"attacks detected: {detected}/{total}")
