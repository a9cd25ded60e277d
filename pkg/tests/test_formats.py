import struct

import pytest

from grc.core.exceptions import (
    BadMagicError,
    ErrorCode,
    InvariantViolationError,
    TruncatedPayloadError,
)
from grc.grammar.formats import (
    FORMAT_RAW,
    FORMAT_RPG,
    FORMAT_RPG_TEXT,
    FORMAT_SLP,
    FORMAT_SLP_TEXT,
    RPG_MAGIC,
    SLP_MAGIC,
    deserialize_repair,
    deserialize_slp,
    detect_format,
    load_grammar,
    repair_from_text,
    repair_to_text,
    serialize_repair,
    serialize_slp,
    slp_from_text,
    slp_to_text,
)
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.slp import Slp

from conftest import A, B, SIGMA


@pytest.fixture
def abab_rpg() -> RePairGrammar:
    return RePairGrammar(sigma=SIGMA, pairs=[(A, B)], final=[SIGMA, SIGMA])


class TestSlpFormats:
    def test_binary_layout(self, abab_slp):
        data = serialize_slp(abab_slp)
        assert data.startswith(SLP_MAGIC)
        assert len(data) == 5 + 8 + 16
        assert struct.unpack_from("<II", data, 5) == (SIGMA, 2)

    def test_binary_round_trip(self, fig1_slp):
        assert deserialize_slp(serialize_slp(fig1_slp)) == fig1_slp

    def test_text_round_trip(self, fig1_slp):
        data = slp_to_text(fig1_slp)
        assert data.splitlines()[0] == b"SLPv1 256 7"
        assert slp_from_text(data) == fig1_slp

    def test_corrupted_magic(self, abab_slp):
        data = b"XLPB1" + serialize_slp(abab_slp)[5:]
        with pytest.raises(BadMagicError) as exc:
            deserialize_slp(data)
        assert exc.value.error_code == ErrorCode.BAD_MAGIC
        assert exc.value.exit_code == 2

    def test_truncated_body(self, abab_slp):
        data = serialize_slp(abab_slp)[:-3]
        with pytest.raises(TruncatedPayloadError) as exc:
            deserialize_slp(data)
        assert exc.value.error_code == ErrorCode.TRUNCATED

    def test_truncated_header(self):
        with pytest.raises(TruncatedPayloadError):
            deserialize_slp(SLP_MAGIC + b"\x00\x01")

    def test_trailing_bytes(self, abab_slp):
        with pytest.raises(TruncatedPayloadError):
            deserialize_slp(serialize_slp(abab_slp) + b"\x00")

    def test_invalid_grammar(self):
        data = SLP_MAGIC + struct.pack("<II", SIGMA, 1) + struct.pack("<II", SIGMA, A)
        with pytest.raises(InvariantViolationError) as exc:
            deserialize_slp(data)
        assert exc.value.error_code == ErrorCode.INVARIANT_VIOLATION


class TestRePairFormats:
    def test_binary_round_trip(self, abab_rpg):
        data = serialize_repair(abab_rpg)
        assert data.startswith(RPG_MAGIC)
        assert deserialize_repair(data) == abab_rpg

    def test_text_round_trip(self, abab_rpg):
        assert repair_from_text(repair_to_text(abab_rpg)) == abab_rpg

    def test_corrupted_magic(self, abab_rpg):
        with pytest.raises(BadMagicError):
            deserialize_repair(b"RPGX1" + serialize_repair(abab_rpg)[5:])

    def test_truncated(self, abab_rpg):
        with pytest.raises(TruncatedPayloadError):
            deserialize_repair(serialize_repair(abab_rpg)[:-4])

    def test_non_maximal_final_is_rejected(self):
        grammar = RePairGrammar(sigma=SIGMA, pairs=[], final=[A, B, A, B])
        with pytest.raises(InvariantViolationError):
            deserialize_repair(serialize_repair(grammar))

    def test_undefined_symbol(self):
        grammar = RePairGrammar(sigma=SIGMA, pairs=[(A, B)], final=[SIGMA + 1])
        with pytest.raises(InvariantViolationError):
            deserialize_repair(serialize_repair(grammar))


class TestDetection:
    def test_detect_format(self, abab_slp, abab_rpg):
        assert detect_format(serialize_slp(abab_slp)) == FORMAT_SLP
        assert detect_format(serialize_repair(abab_rpg)) == FORMAT_RPG
        assert detect_format(slp_to_text(abab_slp)) == FORMAT_SLP_TEXT
        assert detect_format(repair_to_text(abab_rpg)) == FORMAT_RPG_TEXT
        assert detect_format(b"abab") == FORMAT_RAW

    def test_load_grammar(self, abab_slp, abab_rpg):
        assert load_grammar(slp_to_text(abab_slp)) == abab_slp
        assert load_grammar(serialize_repair(abab_rpg)) == abab_rpg
        assert load_grammar(b"hello") is None

    def test_expanded_length(self, abab_rpg):
        assert abab_rpg.expand() == [A, B, A, B]
        assert abab_rpg.expanded_length() == 4
        assert Slp(sigma=SIGMA, rules=[(A, B)]).n == 1
