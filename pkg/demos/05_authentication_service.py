"""Drive the authentication service end to end over HTTP.

Starts the server in a background thread, registers a camera, and runs the
three authentication modes: public (register lookup by the photo ID found
in the image), private (caller-supplied key material, not forensic grade),
and hybrid (public first, private fallback).
"""

import tempfile
import threading
import time
from pathlib import Path

import requests
import uvicorn

import photoseal as ps
from photoseal.cidr import CidrStore
from photoseal.image import encode_png
from photoseal.service import create_app

CAMERA_ID = "service-demo-camera"
PORT = 8414
BASE = f"http://127.0.0.1:{PORT}"

workdir = Path(tempfile.mkdtemp(prefix="photoseal-demo-"))
store = CidrStore(workdir / "cidr.ndjson")
app = create_app(store, admin_token="demo-admin-token")
server = uvicorn.Server(uvicorn.Config(app, host="127.0.0.1", port=PORT, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

try:
    print("health:", requests.get(f"{BASE}/health").json())

    resp = requests.post(
        f"{BASE}/cameras",
        json={"camera_id": CAMERA_ID},
        headers={"X-Admin-Token": "demo-admin-token"},
    )
    print("register:", resp.status_code, resp.json())

    image = ps.photo_image(240, 320, seed=8)
    scenario = ps.parse_scenario("s2")
    stego_png = encode_png(ps.embed_spatial(image, CAMERA_ID, scenario))

    resp = requests.post(
        f"{BASE}/verify",
        files={"image": ("photo.png", stego_png)},
        data={"scenario": "s2", "mode": "public"},
    )
    body = resp.json()
    print(
        f"public verify: authentic={body['authentic']} cidr_hit={body['cidr_hit']}"
        f" forensic_grade={body['forensic_grade']}"
    )

    tampered = ps.apply_attack(
        ps.embed_spatial(image, CAMERA_ID, scenario),
        ps.AttackSpec(mode="blackout", region=(100, 100, 16, 16)),
    )
    resp = requests.post(
        f"{BASE}/verify",
        files={"image": ("photo.png", encode_png(tampered))},
        data={"scenario": "s2", "mode": "public"},
    )
    body = resp.json()
    print(f"tampered verify: authentic={body['authentic']} rects={body['rects']}")

    other_png = encode_png(ps.embed_spatial(image, "unregistered-cam", scenario))
    resp = requests.post(
        f"{BASE}/verify",
        files={"image": ("photo.png", other_png)},
        data={"scenario": "s2", "mode": "public"},
    )
    print("public verify of unregistered device:", resp.status_code, resp.json())

    resp = requests.post(
        f"{BASE}/verify",
        files={"image": ("photo.png", other_png)},
        data={
            "scenario": "s2", "mode": "hybrid",
            "camera_id": "unregistered-cam", "image_class": "temporary",
        },
    )
    body = resp.json()
    print(
        f"hybrid fallback: mode_used={body['mode_used']} authentic={body['authentic']}"
        f" forensic_grade={body['forensic_grade']}"
    )
finally:
    server.should_exit = True
    thread.join(timeout=5)
