"""HTTP/JSON facade: outcome queries, best moves and play sessions.

Sessions are held in memory with TTL eviction; positions travel as arrays
of integers and moves as arrays of {component_index, vertex} objects.
"""

import threading
import time
import uuid

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .core import (
    CompoundMove,
    Ending,
    MoveRule,
    Play,
    Position,
    VARIANTS,
    Variant,
    canonicalize,
)
from .engine import (
    GameState,
    IllegalMove,
    configured_oracle_bound,
    engine_move,
)
from .errors import BoundExceeded, InvalidLength, NotWinnable, Unsupported

SESSION_TTL_SECONDS = 3600.0


class MoveChoice(BaseModel):
    component_index: int
    vertex: int


class OutcomeRequest(BaseModel):
    variant: str
    position: list[int]


class GameRequest(BaseModel):
    variant: str
    position: list[int]
    engine_side: str = Field(default="second", pattern="^(first|second)$")


class MoveRequest(BaseModel):
    move: list[MoveChoice]


def _variant_or_400(name: str) -> Variant:
    variant = VARIANTS.get(name)
    if variant is None:
        raise HTTPException(400, f"unknown variant {name!r}")
    return variant


def _position_or_400(parts: list[int]) -> Position:
    try:
        if any(n <= 0 for n in parts):
            raise InvalidLength("path lengths must be positive")
        return canonicalize(parts)
    except InvalidLength as exc:
        raise HTTPException(400, str(exc))


def _to_move(move: CompoundMove) -> list[dict]:
    return [{"component_index": i, "vertex": v} for i, v in move.choices]


def _from_move(choices: list[MoveChoice]) -> CompoundMove:
    return CompoundMove(
        tuple(sorted((c.component_index, c.vertex) for c in choices))
    )


def _outcome_payload(variant: Variant, p: Position) -> dict:
    from . import conjunctive, disjunctive, foreclosed, selective, suspense
    from .audit import solver_outcome
    from .octal import STAR
    from .oracle import Oracle

    rule, ending, play = variant.move_rule, variant.ending, variant.play
    detail: dict = {}
    try:
        outcome = solver_outcome(p, variant)
    except Unsupported:
        oracle = Oracle(bound=configured_oracle_bound())
        try:
            outcome = oracle.outcome(p, variant)
        except BoundExceeded as exc:
            raise HTTPException(422, str(exc))
        detail["source"] = "oracle"
        return {"outcome": outcome, "detail": detail}
    if rule is MoveRule.DISJUNCTIVE and ending is Ending.LONG:
        detail["rho"] = [disjunctive.rho(n) for n in p]
        detail["rho_xor"] = disjunctive.rho_xor(p)
    elif rule is MoveRule.DISJUNCTIVE:
        if play is Play.NORMAL:
            values = [foreclosed.fplus(n) for n in p]
            detail["f"] = ["*" if v is STAR else v for v in values]
        else:
            detail["f"] = [foreclosed.fminus(n) for n in p]
    elif rule is MoveRule.CONJUNCTIVE and ending is Ending.SHORT:
        detail["remoteness"] = conjunctive.compound_remoteness(p, play)
    elif rule is MoveRule.CONJUNCTIVE:
        detail["suspense"] = suspense.compound_suspense(p, play)
    else:
        kind = selective._kind(play, ending)
        detail["sigma"] = [selective.sigma_path(n, kind) for n in p]
    return {"outcome": outcome, "detail": detail}


class SessionStore:
    def __init__(self, ttl: float = SESSION_TTL_SECONDS):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, tuple[float, GameState]] = {}

    def create(self, state: GameState) -> str:
        token = uuid.uuid4().hex
        with self._lock:
            self._evict()
            self._sessions[token] = (time.monotonic(), state)
        return token

    def get(self, token: str) -> GameState:
        with self._lock:
            self._evict()
            entry = self._sessions.get(token)
            if entry is None:
                raise HTTPException(404, f"unknown session {token!r}")
            self._sessions[token] = (time.monotonic(), entry[1])
            return entry[1]

    def _evict(self) -> None:
        cutoff = time.monotonic() - self.ttl
        stale = [k for k, (stamp, _) in self._sessions.items() if stamp < cutoff]
        for k in stale:
            del self._sessions[k]


def _session_payload(token: str, state: GameState) -> dict:
    return {
        "id": token,
        "variant": state.variant.name,
        "position": list(state.position),
        "status": state.status,
        "winner": state.winner,
        "to_move": state.to_move,
        "history": [
            {"mover": mover, "move": _to_move(move)}
            for mover, move in state.history
        ],
    }


def create_app() -> FastAPI:
    app = FastAPI(title="kayles")
    store = SessionStore()
    app.state.sessions = store

    @app.get("/api/variants")
    def variants():
        return [
            {
                "name": v.name,
                "move_rule": v.move_rule.value,
                "ending": v.ending.value,
                "play": v.play.value,
            }
            for _, v in sorted(VARIANTS.items())
        ]

    @app.post("/api/outcome")
    def outcome(req: OutcomeRequest):
        variant = _variant_or_400(req.variant)
        p = _position_or_400(req.position)
        return _outcome_payload(variant, p)

    @app.post("/api/best-move")
    def best_move(req: OutcomeRequest):
        from .audit import solver_best_move, solver_outcome
        from .oracle import Oracle

        variant = _variant_or_400(req.variant)
        p = _position_or_400(req.position)
        if not p:
            raise HTTPException(400, "no moves from the empty position")
        try:
            if solver_outcome(p, variant) == "N":
                return {"move": _to_move(solver_best_move(p, variant))}
            return {"move": None, "reason": "position is losing"}
        except Unsupported:
            pass
        except NotWinnable:
            return {"move": None, "reason": "position is losing"}
        oracle = Oracle(bound=configured_oracle_bound())
        try:
            if oracle.outcome(p, variant) == "N":
                return {"move": _to_move(oracle.best_moves(p, variant)[0])}
        except BoundExceeded as exc:
            raise HTTPException(422, str(exc))
        return {"move": None, "reason": "position is losing"}

    @app.post("/api/games", status_code=201)
    def create_game(req: GameRequest):
        variant = _variant_or_400(req.variant)
        p = _position_or_400(req.position)
        if not p:
            raise HTTPException(400, "cannot start a game from the empty position")
        if variant.name == "disj-misere" and sum(p) > configured_oracle_bound():
            raise HTTPException(
                422,
                "disjunctive misere play is oracle-only; total vertex count "
                f"must not exceed {configured_oracle_bound()}",
            )
        state = GameState(variant, p, engine_side=req.engine_side)
        token = store.create(state)
        payload = _session_payload(token, state)
        if req.engine_side == "first" and state.status == "ongoing":
            move = engine_move(state.position, variant)
            state.step(move)
            payload = _session_payload(token, state)
            payload["engine_reply"] = _to_move(move)
        return payload

    @app.get("/api/games/{token}")
    def get_game(token: str):
        return _session_payload(token, store.get(token))

    @app.post("/api/games/{token}/move")
    def play_move(token: str, req: MoveRequest):
        state = store.get(token)
        if state.status != "ongoing":
            raise HTTPException(409, "the game is already finished")
        engine_side = state.engine_side
        if state.to_move == engine_side:
            raise HTTPException(409, "it is the engine's turn")
        try:
            state.step(_from_move(req.move))
        except IllegalMove as exc:
            raise HTTPException(409, str(exc))
        payload = _session_payload(token, state)
        if state.status == "ongoing" and state.to_move == engine_side:
            move = engine_move(state.position, state.variant)
            state.step(move)
            payload = _session_payload(token, state)
            payload["engine_reply"] = _to_move(move)
        return payload

    return app


app = create_app()
