"""JSON-over-HTTP annotation service.

Routes live under ``/v1``: ``POST /disambiguate``, ``GET /entity/{id}`` and
``GET /health``. Requests run on a bounded thread pool over a shared,
read-only KB and index.
"""
from __future__ import annotations

import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import asynccontextmanager
from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from .config import AppConfig, ServiceConfig
from .deadline import Deadline
from .errors import ConfigError, EntityNotFound, InvalidQueryError, QueryTimeout
from .index import InvertedIndex, build_index, check_index, load_index
from .kb import KnowledgeBase, get_entity, load_dump, record_to_json
from .pipeline import disambiguate_text

log = logging.getLogger(__name__)


class DisambiguateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    text: str
    strategy: Optional[Literal["graph", "topic"]] = None
    timeout_s: Optional[float] = Field(default=None, gt=0)
    seed: Optional[int] = None
    name: Optional[str] = None
    type: str = "unknown"


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message, **extra})


def create_app(
    kb: KnowledgeBase,
    index: InvertedIndex,
    service: ServiceConfig,
    config: AppConfig = AppConfig(),
) -> FastAPI:
    pool = ThreadPoolExecutor(max_workers=service.workers, thread_name_prefix="entlink")

    @asynccontextmanager
    async def lifespan(_app):
        yield
        pool.shutdown(wait=False, cancel_futures=True)

    app = FastAPI(title="entlink", lifespan=lifespan)

    @app.exception_handler(RequestValidationError)
    async def bad_request(_request: Request, exc: RequestValidationError):
        detail = [{"loc": list(e.get("loc", ())), "msg": e.get("msg", "")} for e in exc.errors()]
        return _error(400, "malformed request body", detail=detail)

    def run(req: DisambiguateRequest) -> dict:
        strategy = req.strategy or service.strategy
        timeout = service.timeout_s if req.timeout_s is None else min(req.timeout_s, service.timeout_s)
        seed = service.seed if req.seed is None else req.seed
        started = time.perf_counter()
        result = disambiguate_text(
            kb, index, req.text, strategy,
            name=req.name, query_type=req.type, seed=seed,
            deadline=Deadline(timeout),
            graph_config=config.graph, topic_config=config.topic, hp=config.hyperparameters,
        )
        runtime = 0.0 if service.fixed_clock else time.perf_counter() - started
        body = result.to_json()
        body.pop("query_id")
        return {"strategy": strategy, **body, "runtime_s": runtime}

    @app.post("/v1/disambiguate")
    async def disambiguate(req: DisambiguateRequest):
        try:
            return await asyncio.wrap_future(pool.submit(run, req))
        except QueryTimeout as exc:
            return _error(504, "timeout", partial=None, timeout_s=exc.timeout_s)
        except InvalidQueryError as exc:
            return _error(400, str(exc))
        except Exception:
            log.exception("disambiguation failed")
            return _error(500, "internal error")

    @app.get("/v1/entity/{entity_id:path}")
    async def entity(entity_id: str):
        try:
            record = get_entity(kb, entity_id)
        except EntityNotFound as exc:
            return _error(404, str(exc))
        return {**record_to_json(record), "inlinks": sorted(record.inlinks)}

    @app.get("/v1/health")
    async def health():
        return {"status": "ok", "entities": kb.total_entities, "strategy": service.strategy}

    return app


def load_resources(service: ServiceConfig) -> tuple[KnowledgeBase, InvertedIndex]:
    kb = load_dump(service.kb)
    if service.index:
        index = load_index(service.index)
        check_index(index, kb)
    else:
        index = build_index(kb)
    return kb, index


def serve(config: AppConfig) -> None:  # pragma: no cover - blocks on the network
    import uvicorn

    if config.service is None:
        raise ConfigError("configuration has no 'service' section")
    kb, index = load_resources(config.service)
    app = create_app(kb, index, config.service, config)
    uvicorn.run(app, host=config.service.host, port=config.service.port, log_level="info")
