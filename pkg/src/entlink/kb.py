"""Knowledge-base data model, dump ingestion and persistence."""
from __future__ import annotations

import enum
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import DumpFormatError, DuplicateEntityError, EntityNotFound, InvalidQueryError
from .textproc import MAX_ALIAS_TOKENS, Mention, normalize_name, terms

log = logging.getLogger(__name__)

NIL = "NIL"

PathLike = Union[str, Path]


@dataclass(frozen=True)
class EntityRecord:
    entity_id: str
    canonical_name: str
    aliases: frozenset[str]
    document: str
    feature_vector: dict[str, float]
    outlinks: frozenset[str] = frozenset()
    inlinks: frozenset[str] = frozenset()


def default_features(document: str) -> dict[str, float]:
    return {t: float(c) for t, c in sorted(Counter(terms(document)).items())}


@dataclass
class KnowledgeBase:
    entities: dict[str, EntityRecord]
    alias_table: dict[str, frozenset[str]]
    warnings: list[str] = field(default_factory=list)

    @property
    def total_entities(self) -> int:
        return len(self.entities)

    def __contains__(self, entity_id: str) -> bool:
        return entity_id in self.entities

    def __len__(self) -> int:
        return len(self.entities)

    @classmethod
    def from_records(cls, rows: Iterable[dict], source: str = "<memory>") -> "KnowledgeBase":
        """Build a KB from dump-format dicts (``id``, ``name``, ``aliases``, ``text``, ``links``)."""
        parsed: dict[str, dict] = {}
        for line_no, row in enumerate(rows, start=1):
            rec = _validate_row(row, source, line_no)
            if rec["id"] in parsed:
                raise DuplicateEntityError(source, line_no, rec["id"])
            parsed[rec["id"]] = rec
        return _assemble(parsed)


def _validate_row(row, source, line_no) -> dict:
    if not isinstance(row, dict):
        raise DumpFormatError(source, line_no, "record is not an object")
    for key in ("id", "name"):
        if not isinstance(row.get(key), str) or not row[key].strip():
            raise DumpFormatError(source, line_no, f"field {key!r} must be a non-empty string")
    for key in ("aliases", "links"):
        value = row.get(key, [])
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise DumpFormatError(source, line_no, f"field {key!r} must be a list of strings")
    if not isinstance(row.get("text", ""), str):
        raise DumpFormatError(source, line_no, "field 'text' must be a string")
    features = row.get("features")
    if features is not None and not (
        isinstance(features, dict)
        and all(isinstance(k, str) and isinstance(v, (int, float)) for k, v in features.items())
    ):
        raise DumpFormatError(source, line_no, "field 'features' must map strings to numbers")
    return row


def _alias_key(alias: str, entity_id: str, warnings: list[str]) -> str:
    key = normalize_name(alias)
    words = key.split()
    if len(words) > MAX_ALIAS_TOKENS:
        key = " ".join(words[:MAX_ALIAS_TOKENS])
        warnings.append(f"{entity_id}: alias {alias!r} truncated to {key!r}")
    return key


def _assemble(parsed: dict[str, dict]) -> KnowledgeBase:
    warnings: list[str] = []
    outlinks: dict[str, frozenset[str]] = {}
    inlinks: dict[str, set[str]] = {eid: set() for eid in parsed}
    for eid, row in parsed.items():
        kept = set()
        for target in row.get("links", []):
            if target == eid:
                warnings.append(f"{eid}: self-link dropped")
            elif target not in parsed:
                warnings.append(f"{eid}: dangling link to {target!r} dropped")
            else:
                kept.add(target)
                inlinks[target].add(eid)
        outlinks[eid] = frozenset(kept)

    entities: dict[str, EntityRecord] = {}
    table: dict[str, set[str]] = {}
    for eid in sorted(parsed):
        row = parsed[eid]
        text = row.get("text", "")
        aliases = frozenset(row.get("aliases", [])) | {row["name"]}
        feats = row.get("features")
        entities[eid] = EntityRecord(
            entity_id=eid,
            canonical_name=row["name"],
            aliases=aliases,
            document=text,
            feature_vector={k: float(v) for k, v in feats.items()} if feats is not None
            else default_features(text),
            outlinks=outlinks[eid],
            inlinks=frozenset(inlinks[eid]),
        )
        for alias in sorted(aliases):
            key = _alias_key(alias, eid, warnings)
            if key:
                table.setdefault(key, set()).add(eid)

    for w in warnings:
        log.warning(w)
    return KnowledgeBase(entities, {k: frozenset(v) for k, v in table.items()}, warnings)


def load_dump(path: PathLike) -> KnowledgeBase:
    """Read a line-delimited JSON dump, one entity per line."""
    path = Path(path)
    parsed: dict[str, dict] = {}
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DumpFormatError(path, line_no, f"invalid JSON ({exc.msg})") from exc
            _validate_row(row, path, line_no)
            if row["id"] in parsed:
                raise DuplicateEntityError(path, line_no, row["id"])
            parsed[row["id"]] = row
    kb = _assemble(parsed)
    log.info("loaded %d entities from %s", kb.total_entities, path)
    return kb


def record_to_json(record: EntityRecord) -> dict:
    row = {
        "id": record.entity_id,
        "name": record.canonical_name,
        "aliases": sorted(record.aliases),
        "text": record.document,
        "links": sorted(record.outlinks),
    }
    if record.feature_vector != default_features(record.document):
        row["features"] = dict(sorted(record.feature_vector.items()))
    return row


def save_kb(kb: KnowledgeBase, path: PathLike) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for eid in sorted(kb.entities):
            fh.write(json.dumps(record_to_json(kb.entities[eid]), ensure_ascii=False))
            fh.write("\n")


def alias_lookup(kb: KnowledgeBase, name: str) -> frozenset[str]:
    return kb.alias_table.get(normalize_name(name), frozenset())


def get_entity(kb: KnowledgeBase, entity_id: str) -> EntityRecord:
    try:
        return kb.entities[entity_id]
    except KeyError:
        raise EntityNotFound(entity_id) from None


class QueryType(str, enum.Enum):
    PERSON = "person"
    GEO_POLITICAL = "geo-political"
    TOPIC = "topic"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, value: str) -> "QueryType":
        aliases = {"per": "person", "gpe": "geo-political", "geopolitical": "geo-political",
                   "unk": "unknown"}
        v = value.strip().lower()
        try:
            return cls(aliases.get(v, v))
        except ValueError:
            raise InvalidQueryError(f"unknown query type {value!r}") from None


@dataclass(frozen=True)
class Query:
    query_id: str
    query_type: QueryType
    name: str
    context_document: str

    def __post_init__(self):
        if not self.name or not self.name.strip():
            raise InvalidQueryError(f"query {self.query_id!r} has an empty name")
        if not isinstance(self.query_type, QueryType):
            object.__setattr__(self, "query_type", QueryType.parse(str(self.query_type)))


@dataclass(frozen=True)
class Annotation:
    mention: Mention
    entity_id: str
    char_span: Optional[tuple[int, int]]
    weight: float

    def to_json(self) -> dict:
        return {
            "surface": self.mention.surface,
            "source": self.mention.source,
            "token_span": list(self.mention.token_span) if self.mention.token_span else None,
            "char_span": list(self.char_span) if self.char_span else None,
            "entity_id": self.entity_id,
            "weight": self.weight,
        }


def rank(scores: dict[str, float]) -> list[tuple[str, float]]:
    """Order labels by descending score; on ties NIL first, then by entity id."""
    return sorted(scores.items(), key=lambda kv: (-kv[1], kv[0] != NIL, kv[0]))


@dataclass
class DisambiguationResult:
    query_id: str
    ranked_labels: list[tuple[str, float]]
    annotations: list[Annotation] = field(default_factory=list)

    @property
    def top_label(self) -> str:
        return self.ranked_labels[0][0] if self.ranked_labels else NIL

    def assigned_entities(self) -> set[str]:
        return {a.entity_id for a in self.annotations if a.entity_id != NIL}

    def to_json(self) -> dict:
        return {
            "query_id": self.query_id,
            "ranked_labels": [{"label": l, "score": s} for l, s in self.ranked_labels],
            "annotations": [a.to_json() for a in self.annotations],
        }
