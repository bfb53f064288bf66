"""
Command reports and the structured polynomial serialization.
"""

from typing import Any, Dict, List

from pydantic import BaseModel, Field

from ncalg.ncpoly import NCPoly, format_rational, to_rational
from ncalg.words import ONE_WORD

ONE_SYMBOL = "1"


def poly_to_json(p: NCPoly) -> List[Dict[str, str]]:
    """Terms in lex descending order as {"word": ..., "coeff": "p/q"}; the empty word is "1"."""
    return [{"word": w or ONE_SYMBOL, "coeff": format_rational(c)} for w, c in p.items()]


def poly_from_json(terms: List[Dict[str, str]]) -> NCPoly:
    result = {}
    for term in terms:
        word = ONE_WORD if term["word"] == ONE_SYMBOL else term["word"]
        if word in result:
            raise ValueError(f"Duplicate word {term['word']!r} in serialized polynomial")
        result[word] = to_rational(term["coeff"])
    return NCPoly(result)


class Report(BaseModel):
    """Outcome of one command: echo of the command and its parameters plus structured results."""
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    results: Dict[str, Any] = Field(default_factory=dict)
    lines: List[str] = Field(default_factory=list, exclude=True)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def to_text(self) -> str:
        header = [f"command: {self.command}"]
        header += [f"{key}: {value}" for key, value in self.parameters.items() if value is not None]
        return "\n".join(header + self.lines)

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "structured" else self.to_text()
