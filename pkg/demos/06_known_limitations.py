"""Demonstrate the scheme's documented blind spots, so nobody rediscovers
them the hard way.

The watermark mask is a deterministic AES-ECB encryption of the modifier
plane.  Determinism is what lets the verifier re-derive the mask with no
side channel, but it also means identical 16-byte plaintext runs produce
identical mask bytes.  Two consequences:

1. an aligned self-copy (byte offset a multiple of 16) relocates valid
   watermark material together with the content -- the splice verifies as
   authentic;
2. inside a constant fill every zeroed run encrypts identically, so on a
   width divisible by 16 the mask rows repeat and every vertical-frequency
   DCT coefficient vanishes on both sides -- a run- and block-aligned fill
   is invisible to the f1/f4/f5 scenarios.

Misaligned edits break the runs and are caught; the DC (f2) and first-AC
(f3) positions, the spatial scenarios, and the photo-ID reserve region all
resist the constant-fill case.
"""

import numpy as np

import photoseal as ps

CAMERA_ID = "limitations-demo"

image = ps.photo_image(320, 512, seed=11)  # width divisible by 16

print("=== 1. aligned ECB splice (copy with 16-byte-aligned offset) ===")
scenario = ps.parse_scenario("s2")
stego = ps.embed_spatial(image, CAMERA_ID, scenario)
aligned = ps.AttackSpec(mode="copy", region=(64, 120, 64, 48), src=(224, 40, 64, 48))
spliced = ps.apply_attack(stego, aligned)
report = ps.verify(spliced, CAMERA_ID, scenario)
print(f"content changed: {not np.array_equal(spliced, stego)}")
print(f"verdict on aligned splice: authentic={report.authentic}  <-- the evasion")

misaligned = ps.AttackSpec(mode="copy", region=(64, 120, 64, 48), src=(219, 40, 64, 48))
report = ps.verify(ps.apply_attack(stego, misaligned), CAMERA_ID, scenario)
print(f"verdict on misaligned splice: authentic={report.authentic}")

print()
print("=== 2. aligned constant fill vs the vertical-AC scenarios ===")
rect = (128, 80, 32, 32)  # x,w multiples of 16; y,h multiples of 8
for name in ("f4", "f2", "s2"):
    scenario = ps.parse_scenario(name)
    embed = ps.embed_spatial if scenario.domain == "spatial" else ps.embed_frequency
    stego = embed(image, CAMERA_ID, scenario)
    attacked = ps.apply_attack(stego, ps.AttackSpec(mode="blackout", region=rect))
    report = ps.verify(attacked, CAMERA_ID, scenario)
    print(f"{name}: authentic={report.authentic}  mismatches={report.mismatch_count}")
print("f4 misses the aligned fill; f2 (DC) and the spatial scenarios catch it,")
print("so run verification across scenarios when constant-fill tampering matters")
