"""
Binary and text serialization of SLPs and RePair grammars.

Binary layouts (all integers 32-bit little-endian unsigned):

    SLPB1 sigma n  then 2n codes, rule i at entries 2i and 2i+1
    RPGB1 sigma m L  then 2m pair codes, then L final codes

Terminal codes are 0..sigma-1 and variable i is encoded sigma+i. The text
variants carry an ``SLPv1 sigma n`` / ``RPGv1 sigma m L`` header line,
one rule per line, and for RePair grammars one closing line of final codes.
"""

import struct
from typing import List, Tuple, Union

from grc.common.validators import RePairGrammarValidator, SlpValidator
from grc.core.exceptions import (
    BadMagicError,
    InvariantViolationError,
    TruncatedPayloadError,
)
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.slp import Slp

SLP_MAGIC = b"SLPB1"
RPG_MAGIC = b"RPGB1"
SLP_TEXT_MAGIC = b"SLPv1"
RPG_TEXT_MAGIC = b"RPGv1"

FORMAT_SLP = "slp"
FORMAT_RPG = "rpg"
FORMAT_SLP_TEXT = "slp-text"
FORMAT_RPG_TEXT = "rpg-text"
FORMAT_RAW = "raw"


def _pack_codes(codes: List[int]) -> bytes:
    return struct.pack(f"<{len(codes)}I", *codes)


def _unpack_codes(data: bytes, offset: int, count: int) -> List[int]:
    return list(struct.unpack_from(f"<{count}I", data, offset))


def _check_magic(data: bytes, magic: bytes) -> None:
    if data[: len(magic)] != magic:
        raise BadMagicError(magic.decode("ascii"), bytes(data[: len(magic)]))


def _check_size(data: bytes, expected: int, what: str) -> None:
    if len(data) != expected:
        raise TruncatedPayloadError(
            f"{what} payload has {len(data)} bytes, header announces {expected}",
            expected=expected,
            actual=len(data),
        )


def _flatten(pairs) -> List[int]:
    codes: List[int] = []
    for left, right in pairs:
        codes.append(left)
        codes.append(right)
    return codes


def _pairs(codes: List[int]) -> List[Tuple[int, int]]:
    return [(codes[i], codes[i + 1]) for i in range(0, len(codes), 2)]


def _check_slp(slp: Slp) -> Slp:
    is_valid, errors, _ = SlpValidator().validate_all(slp.sigma, slp.rules)
    if not is_valid:
        raise InvariantViolationError(f"invalid SLP: {errors[0]}", details={"errors": errors})
    return slp


def _check_repair(grammar: RePairGrammar) -> RePairGrammar:
    is_valid, errors, _ = RePairGrammarValidator().validate_all(
        grammar.sigma, grammar.pairs, grammar.final
    )
    if not is_valid:
        raise InvariantViolationError(f"invalid RePair grammar: {errors[0]}", details={"errors": errors})
    return grammar


def serialize_slp(slp: Slp) -> bytes:
    return SLP_MAGIC + struct.pack("<II", slp.sigma, slp.n) + _pack_codes(_flatten(slp.rules))


def deserialize_slp(data: bytes) -> Slp:
    """Decode and validate a binary SLP"""
    _check_magic(data, SLP_MAGIC)
    header = len(SLP_MAGIC) + 8
    if len(data) < header:
        raise TruncatedPayloadError("SLP header is incomplete", expected=header, actual=len(data))
    sigma, n = struct.unpack_from("<II", data, len(SLP_MAGIC))
    _check_size(data, header + 8 * n, "SLP")
    codes = _unpack_codes(data, header, 2 * n)
    return _check_slp(Slp(sigma=sigma, rules=_pairs(codes)))


def serialize_repair(grammar: RePairGrammar) -> bytes:
    return (
        RPG_MAGIC
        + struct.pack("<III", grammar.sigma, grammar.m, len(grammar.final))
        + _pack_codes(_flatten(grammar.pairs))
        + _pack_codes(grammar.final)
    )


def deserialize_repair(data: bytes) -> RePairGrammar:
    """Decode and validate a binary RePair grammar"""
    _check_magic(data, RPG_MAGIC)
    header = len(RPG_MAGIC) + 12
    if len(data) < header:
        raise TruncatedPayloadError("RePair header is incomplete", expected=header, actual=len(data))
    sigma, m, final_len = struct.unpack_from("<III", data, len(RPG_MAGIC))
    _check_size(data, header + 8 * m + 4 * final_len, "RePair")
    pair_codes = _unpack_codes(data, header, 2 * m)
    final = _unpack_codes(data, header + 8 * m, final_len)
    return _check_repair(RePairGrammar(sigma=sigma, pairs=_pairs(pair_codes), final=final))


def _text_lines(data: bytes, magic: bytes) -> List[List[int]]:
    _check_magic(data, magic)
    try:
        lines = data.decode("ascii").splitlines()
    except UnicodeDecodeError as exc:
        raise InvariantViolationError(f"text grammar is not ASCII: {exc}")
    rows: List[List[int]] = []
    for number, line in enumerate(lines[1:], start=2):
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise InvariantViolationError(f"non-integer symbol code on line {number}")
    try:
        header = [int(token) for token in lines[0].split()[1:]]
    except ValueError:
        raise InvariantViolationError("non-integer value in header line")
    return [header] + rows


def slp_to_text(slp: Slp) -> bytes:
    lines = [f"SLPv1 {slp.sigma} {slp.n}"]
    lines.extend(f"{left} {right}" for left, right in slp.rules)
    return ("\n".join(lines) + "\n").encode("ascii")


def slp_from_text(data: bytes) -> Slp:
    rows = _text_lines(data, SLP_TEXT_MAGIC)
    header, body = rows[0], rows[1:]
    if len(header) != 2:
        raise InvariantViolationError("SLPv1 header must carry sigma and n")
    sigma, n = header
    if len(body) != n:
        raise TruncatedPayloadError(
            f"SLPv1 announces {n} rules, found {len(body)}", expected=n, actual=len(body)
        )
    for number, row in enumerate(body):
        if len(row) != 2:
            raise InvariantViolationError(f"rule {number} is not a bigram")
    return _check_slp(Slp(sigma=sigma, rules=[(row[0], row[1]) for row in body]))


def repair_to_text(grammar: RePairGrammar) -> bytes:
    lines = [f"RPGv1 {grammar.sigma} {grammar.m} {len(grammar.final)}"]
    lines.extend(f"{left} {right}" for left, right in grammar.pairs)
    lines.append(" ".join(str(symbol) for symbol in grammar.final))
    return ("\n".join(lines) + "\n").encode("ascii")


def repair_from_text(data: bytes) -> RePairGrammar:
    rows = _text_lines(data, RPG_TEXT_MAGIC)
    header, body = rows[0], rows[1:]
    if len(header) != 3:
        raise InvariantViolationError("RPGv1 header must carry sigma, m and L")
    sigma, m, final_len = header
    if len(body) != m + 1:
        raise TruncatedPayloadError(
            f"RPGv1 announces {m} pairs and a final line, found {len(body)} lines",
            expected=m + 1,
            actual=len(body),
        )
    for number, row in enumerate(body[:m]):
        if len(row) != 2:
            raise InvariantViolationError(f"pair {number} is not a bigram")
    final = body[m]
    if len(final) != final_len:
        raise TruncatedPayloadError(
            f"RPGv1 announces {final_len} final symbols, found {len(final)}",
            expected=final_len,
            actual=len(final),
        )
    return _check_repair(
        RePairGrammar(sigma=sigma, pairs=[(row[0], row[1]) for row in body[:m]], final=final)
    )


def detect_format(data: bytes) -> str:
    """Classify a payload by its magic bytes; anything else is raw text"""
    for magic, name in (
        (SLP_MAGIC, FORMAT_SLP),
        (RPG_MAGIC, FORMAT_RPG),
        (SLP_TEXT_MAGIC, FORMAT_SLP_TEXT),
        (RPG_TEXT_MAGIC, FORMAT_RPG_TEXT),
    ):
        if data.startswith(magic):
            return name
    return FORMAT_RAW


def load_grammar(data: bytes) -> Union[Slp, RePairGrammar, None]:
    """Decode any grammar format; returns None for raw text"""
    kind = detect_format(data)
    if kind == FORMAT_SLP:
        return deserialize_slp(data)
    if kind == FORMAT_RPG:
        return deserialize_repair(data)
    if kind == FORMAT_SLP_TEXT:
        return slp_from_text(data)
    if kind == FORMAT_RPG_TEXT:
        return repair_from_text(data)
    return None
