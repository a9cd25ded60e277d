"""
Structural validators for input and output grammars
"""

from typing import List, Sequence, Tuple

from grc.engines.text_repair import freq_table_text
from grc.grammar.symbols import HASH, Bigram
from grc.models.validation import ValidationReport


class SlpValidator:
    """Checks the straight-line program invariants of a rule list"""

    def __init__(self):
        self.validation_errors: List[str] = []
        self.validation_warnings: List[str] = []
        self.expanded_length = 0

    def validate_all(self, sigma: int, rules: Sequence[Tuple[int, int]]) -> Tuple[bool, List[str], List[str]]:
        """
        Run all validations on an SLP

        Returns:
            (is_valid, errors, warnings)
        """
        self.validation_errors = []
        self.validation_warnings = []
        self.expanded_length = 0

        self._validate_alphabet(sigma)
        if not rules:
            self.validation_errors.append("empty grammar: at least one rule is required")
        self._validate_rule_shapes(rules)
        self._validate_references(sigma, rules)
        if not self.validation_errors:
            self._validate_length(sigma, rules)
            self._validate_reachability(sigma, rules)

        is_valid = len(self.validation_errors) == 0
        return is_valid, self.validation_errors, self.validation_warnings

    def report(self, sigma: int, rules: Sequence[Tuple[int, int]]) -> ValidationReport:
        is_valid, errors, warnings = self.validate_all(sigma, rules)
        return ValidationReport(
            is_valid=is_valid,
            errors=list(errors),
            warnings=list(warnings),
            expanded_length=self.expanded_length,
        )

    def _validate_alphabet(self, sigma: int):
        if sigma < 1:
            self.validation_errors.append(f"alphabet size must be positive, got {sigma}")
        elif sigma >= HASH:
            self.validation_errors.append(f"alphabet size {sigma} collides with the sentinel codes")

    def _validate_rule_shapes(self, rules):
        for index, rule in enumerate(rules):
            if len(rule) != 2:
                self.validation_errors.append(
                    f"rule {index} has {len(rule)} symbols on its righthand side, expected a bigram"
                )

    def _validate_references(self, sigma: int, rules):
        for index, rule in enumerate(rules):
            if len(rule) != 2:
                continue
            for symbol in rule:
                if symbol < 0:
                    self.validation_errors.append(f"negative symbol {symbol} at rule {index}")
                elif symbol >= HASH:
                    self.validation_errors.append(f"reserved sentinel code at rule {index}")
                elif symbol >= sigma and symbol - sigma >= index:
                    self.validation_errors.append(f"forward reference at rule {index}")

    def _validate_length(self, sigma: int, rules):
        lengths: List[int] = []
        for left, right in rules:
            size = 0
            for symbol in (left, right):
                size += 1 if symbol < sigma else lengths[symbol - sigma]
            lengths.append(size)
        self.expanded_length = lengths[-1]
        if self.expanded_length < 2:
            self.validation_errors.append(f"expansion length {self.expanded_length} is below 2")

    def _validate_reachability(self, sigma: int, rules):
        reached = [False] * len(rules)
        reached[-1] = True
        for index in range(len(rules) - 1, -1, -1):
            if not reached[index]:
                continue
            for symbol in rules[index]:
                if symbol >= sigma:
                    reached[symbol - sigma] = True
        unreachable = reached.count(False)
        if unreachable:
            self.validation_warnings.append(f"{unreachable} rule(s) unreachable from the start rule")

    def generate_report(self, sigma: int, rules: Sequence[Tuple[int, int]]) -> str:
        """Generate a human-readable validation report"""
        is_valid, errors, warnings = self.validate_all(sigma, rules)

        report = "\n" + "=" * 60 + "\n"
        report += "SLP VALIDATION REPORT\n"
        report += "=" * 60 + "\n\n"

        if is_valid:
            report += "ALL VALIDATIONS PASSED\n\n"
        else:
            report += f"VALIDATION FAILED: {len(errors)} error(s) found\n\n"

        if errors:
            report += "ERRORS:\n"
            for i, error in enumerate(errors, 1):
                report += f"  {i}. {error}\n"
            report += "\n"

        if warnings:
            report += f"WARNINGS ({len(warnings)}):\n"
            for i, warning in enumerate(warnings, 1):
                report += f"  {i}. {warning}\n"
            report += "\n"

        report += f"  sigma: {sigma}\n"
        report += f"  rules: {len(rules)}\n"
        if is_valid:
            report += f"  expanded length: {self.expanded_length}\n"
        return report


class RePairGrammarValidator:
    """Checks an output RePair grammar"""

    def __init__(self):
        self.validation_errors: List[str] = []
        self.validation_warnings: List[str] = []

    def validate_all(
        self,
        sigma: int,
        pairs: Sequence[Tuple[int, int]],
        final: Sequence[int],
        check_maximality: bool = True,
    ) -> Tuple[bool, List[str], List[str]]:
        """
        Run all validations on a RePair grammar

        Args:
            sigma: Terminal alphabet size
            pairs: Introduced pairs, pair i defines letter sigma+i
            final: Residual sequence
            check_maximality: Also require that no bigram of ``final`` repeats

        Returns:
            (is_valid, errors, warnings)
        """
        self.validation_errors = []
        self.validation_warnings = []

        for index, pair in enumerate(pairs):
            for symbol in pair:
                if symbol >= HASH:
                    self.validation_errors.append(f"reserved sentinel code in pair {index}")
                elif symbol >= sigma and symbol - sigma >= index:
                    self.validation_errors.append(f"forward reference at pair {index}")

        limit = sigma + len(pairs)
        for position, symbol in enumerate(final):
            if symbol >= limit:
                self.validation_errors.append(f"undefined symbol {symbol} at final position {position}")
                break

        if check_maximality and not self.validation_errors:
            table = freq_table_text(final)
            repeated = [bigram for bigram, freq in table.items() if freq >= 2]
            if repeated:
                bigram = min(repeated)
                self.validation_errors.append(
                    f"final sequence still contains bigram {Bigram(*bigram)} with frequency >= 2"
                )

        is_valid = len(self.validation_errors) == 0
        return is_valid, self.validation_errors, self.validation_warnings

    def report(self, sigma, pairs, final, check_maximality: bool = True) -> ValidationReport:
        is_valid, errors, warnings = self.validate_all(sigma, pairs, final, check_maximality)
        return ValidationReport(is_valid=is_valid, errors=list(errors), warnings=list(warnings))
