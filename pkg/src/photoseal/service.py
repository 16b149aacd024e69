"""Photo Authentication Server: the verification protocol over JSON/HTTP.

Three authentication modes:

* public -- the photo ID extracted from the image is looked up in the
  register; verification runs against the registered camera ID.  The
  caller never supplies (or receives) key material.
* private -- the caller supplies the camera ID; no register involved.
  Verdicts carry ``forensic_grade: false``: a self-attested key proves
  nothing to a third party.
* hybrid -- the public path first; if the photo ID is unregistered and
  the caller supplied key material, fall back to private.  The caller
  may tag the request with an image class (permanent/temporary), which
  is echoed for audit purposes.

Camera IDs are secrets.  They never appear in response bodies or log
lines; only photo IDs (public by construction) and verdicts do.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from fastapi import FastAPI, File, Form, Header, Request, UploadFile
from fastapi.responses import JSONResponse

from .cidr import CidrStore
from .crypto import derive_photo_id
from .errors import (
    AlreadyRegistered,
    DecodeError,
    ImageTooSmall,
    InvalidCameraId,
    InvalidScenario,
    NotFound,
    StoreError,
)
from .image import decode_image
from .reserve import extract_photo_id
from .scenarios import parse_scenario
from .verify import verify

logger = logging.getLogger("photoseal.service")

DEFAULT_MAX_UPLOAD = 32 * 1024 * 1024  # bytes
#: Request timeout is an operational default enforced by the server runner
#: (uvicorn --timeout-keep-alive); see serve_from_config.
DEFAULT_TIMEOUT_S = 30

MODES = ("public", "private", "hybrid")


def load_config(path: str | Path | None = None) -> dict:
    """Service configuration from a JSON file with environment overrides.

    Keys: listen (host:port), cidr_log, admin_token, max_upload_mib.
    Environment variables PHOTOSEAL_LISTEN, PHOTOSEAL_CIDR_LOG,
    PHOTOSEAL_ADMIN_TOKEN, and PHOTOSEAL_MAX_UPLOAD_MIB override the file.
    """
    cfg = {
        "listen": "127.0.0.1:8411",
        "cidr_log": "cidr.ndjson",
        "admin_token": None,
        "max_upload_mib": 32,
    }
    if path is not None:
        cfg.update(json.loads(Path(path).read_text(encoding="utf-8")))
    env = {
        "listen": os.environ.get("PHOTOSEAL_LISTEN"),
        "cidr_log": os.environ.get("PHOTOSEAL_CIDR_LOG"),
        "admin_token": os.environ.get("PHOTOSEAL_ADMIN_TOKEN"),
        "max_upload_mib": os.environ.get("PHOTOSEAL_MAX_UPLOAD_MIB"),
    }
    cfg.update({k: v for k, v in env.items() if v is not None})
    cfg["max_upload_mib"] = int(cfg["max_upload_mib"])
    return cfg


def create_app(
    store: CidrStore | str | Path,
    admin_token: str | None = None,
    max_upload: int = DEFAULT_MAX_UPLOAD,
) -> FastAPI:
    """Build the service around a register store (or a path to its log)."""
    if not isinstance(store, CidrStore):
        store = CidrStore(store)

    app = FastAPI(title="photoseal authentication service")
    app.state.store = store

    def error(status: int, detail: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"detail": detail})

    @app.get("/health")
    def health():
        if not store.healthy():
            return error(503, "register log unreadable")
        return {"records": len(store)}

    @app.post("/cameras", status_code=201)
    async def register_camera(request: Request, x_admin_token: str | None = Header(None)):
        if admin_token is not None and x_admin_token != admin_token:
            return error(401, "bad admin token")
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return error(400, "body must be JSON")
        camera_id = body.get("camera_id") if isinstance(body, dict) else None
        if not camera_id or not isinstance(camera_id, str):
            return error(400, "camera_id field required")
        try:
            record = store.register(camera_id)
        except InvalidCameraId as exc:
            return error(400, str(exc))
        except AlreadyRegistered:
            # the photo ID names the duplicate without leaking the secret
            return error(409, f"photo ID {derive_photo_id(camera_id).hex} already registered")
        except StoreError as exc:
            return error(503, str(exc))
        logger.info("registered photo ID %s", record.photo_id.hex)
        return {"photo_id": record.photo_id.hex}

    @app.post("/verify")
    async def verify_image(
        image: UploadFile = File(...),
        scenario: str = Form(...),
        mode: str = Form("public"),
        camera_id: str | None = Form(None),
        tolerance: float | None = Form(None),
        image_class: str | None = Form(None),
    ):
        if mode not in MODES:
            return error(422, f"mode must be one of {MODES}")
        if mode == "public" and camera_id is not None:
            return error(422, "public mode forbids key material")
        if mode == "private" and camera_id is None:
            return error(422, "private mode requires camera_id key material")
        try:
            sc = parse_scenario(scenario)
        except InvalidScenario as exc:
            return error(422, str(exc))
        data = await image.read()
        if len(data) > max_upload:
            return error(413, f"upload exceeds {max_upload} bytes")
        try:
            arr = decode_image(data)
        except DecodeError as exc:
            return error(400, str(exc))

        cidr_hit = False
        mode_used = mode
        try:
            if mode == "private":
                key_material = camera_id
            else:
                try:
                    found = extract_photo_id(arr)
                    key_material = store.lookup(found)
                    cidr_hit = True
                    mode_used = "public"
                except NotFound:
                    if mode == "hybrid" and camera_id is not None:
                        key_material = camera_id
                        mode_used = "private"
                    else:
                        return error(404, f"photo ID {found.hex} not registered")
            report = verify(arr, key_material, sc, tolerance=tolerance)
        except ImageTooSmall as exc:
            return error(422, str(exc))
        logger.info(
            "verify scenario=%s mode=%s photo_id=%s authentic=%s mismatches=%d",
            scenario, mode_used, report.photo_id.hex, report.authentic, report.mismatch_count,
        )
        body = report.to_dict()
        body.update(
            {
                "mode_used": mode_used,
                "cidr_hit": cidr_hit,
                # private verdicts are not forensic-grade: a self-supplied
                # key cannot serve as evidence toward a third party
                "forensic_grade": mode_used == "public",
            }
        )
        if image_class is not None:
            body["image_class"] = image_class
        return body

    return app


def serve_from_config(config: dict) -> None:
    """Run the service with uvicorn (blocking)."""
    import uvicorn

    host, _, port = config["listen"].partition(":")
    app = create_app(
        config["cidr_log"],
        admin_token=config.get("admin_token"),
        max_upload=config["max_upload_mib"] * 1024 * 1024,
    )
    uvicorn.run(
        app,
        host=host or "127.0.0.1",
        port=int(port or 8411),
        timeout_keep_alive=DEFAULT_TIMEOUT_S,
    )
