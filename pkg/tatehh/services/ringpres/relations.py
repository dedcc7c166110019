import logging
from itertools import groupby
from tokenize import TokenError

from sympy import Add, Integer, Mul, Pow, Rational, SympifyError, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .exceptions import RelationSyntaxException, UnknownGeneratorException
from .types import Relation, RelationVerdict, RingPresentation, Term, Word
from ..types import Degree, Prime

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)
INVERSE_SUFFIX = "inv"


def _signed(coefficient: int, p: Prime) -> int:
    coefficient %= p
    return coefficient - p if coefficient > p // 2 else coefficient


def render_word(word: Word) -> str:
    """Слово в виде x*W2^2; пустое слово это 1."""
    if not word:
        return "1"
    parts = []
    for name, run in groupby(word):
        count = len(list(run))
        parts.append(name if count == 1 else f"{name}^{count}")
    return "*".join(parts)


def render_relation(terms: tuple[Term, ...], p: Prime) -> str:
    """Соотношение в виде "expr = 0" с коэффициентами из симметричного диапазона вычетов."""
    rendered = ""
    for term in terms:
        coefficient = _signed(term.coefficient, p)
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        body = render_word(term.word)
        if magnitude != 1:
            body = f"{magnitude}" if not term.word else f"{magnitude}*{body}"
        if not rendered:
            rendered = f"-{body}" if coefficient < 0 else body
        else:
            rendered += f" - {body}" if coefficient < 0 else f" + {body}"
    return f"{rendered or '0'} = 0"


def _syntax_error(text: str, reason: str) -> RelationSyntaxException:
    return RelationSyntaxException(
        key="ringpres.errors.relation_syntax",
        fallback=f"Cannot parse relation {text!r}: {reason}",
        translation_params={"relation": text},
    )


def _factor_word(factor, text: str) -> Word:
    if isinstance(factor, Symbol):
        return (factor.name,)
    if isinstance(factor, Pow) and isinstance(factor.base, Symbol) and isinstance(factor.exp, Integer):
        exponent = int(factor.exp)
        name = factor.base.name if exponent > 0 else f"{factor.base.name}{INVERSE_SUFFIX}"
        return (name,) * abs(exponent)
    raise _syntax_error(text, f"unsupported factor {factor}")


def _coefficient(value, p: Prime, text: str) -> int:
    if not isinstance(value, Rational):
        raise _syntax_error(text, f"coefficient {value} is not rational")
    numerator, denominator = int(value.p), int(value.q)
    if denominator % p == 0:
        raise _syntax_error(text, f"coefficient {value} is not defined modulo {p}")
    return numerator * pow(denominator, -1, p) % p


def _unknown(name: str) -> UnknownGeneratorException:
    return UnknownGeneratorException(
        key="ringpres.errors.unknown_generator",
        fallback=f"Unknown generator {name!r}",
        translation_params={"name": name},
    )


def parse_relation(text: str, degrees: dict[str, Degree], p: Prime) -> Relation:
    """Функция разбора соотношения "lhs = rhs" (или "expr", то есть expr = 0) в некоммутативных мономах.

    Отрицательная степень g^-k читается как k множителей g + "inv".

    Args:
        text: Текст соотношения.
        degrees: Степени известных имён.
        p: Характеристика.

    Returns:
        Соотношение lhs - rhs = 0 с коэффициентами по модулю p; члены могут иметь разные степени.

    Raises:
        RelationSyntaxException: Текст не разбирается или коэффициент не определён по модулю p.
        UnknownGeneratorException: Имя вне таблицы.
    """
    sides = text.split("=") if "=" in text else [text, "0"]
    if len(sides) != 2 or not all(side.strip() for side in sides):
        raise _syntax_error(text, "expected at most one '=' between two expressions")
    names = {name: Symbol(name, commutative=False) for name in degrees}
    try:
        lhs, rhs = (parse_expr(side, local_dict=names, transformations=TRANSFORMATIONS) for side in sides)
        expression = (lhs - rhs).expand()
    except (SyntaxError, TokenError, SympifyError, TypeError, ValueError, AttributeError) as error:
        raise _syntax_error(text, str(error)) from error
    for symbol in expression.free_symbols:
        if symbol.name not in degrees:
            raise _unknown(symbol.name)

    collected: dict[Word, int] = {}
    for term in Add.make_args(expression):
        commutative, noncommutative = term.args_cnc()
        coefficient = _coefficient(Mul(*commutative), p, text)
        word: Word = tuple(name for factor in noncommutative for name in _factor_word(factor, text))
        for name in word:
            if name not in degrees:
                raise _unknown(name)
        collected[word] = (collected.get(word, 0) + coefficient) % p

    terms = tuple(Term(coefficient, word) for word, coefficient in collected.items() if coefficient)
    term_degrees = sorted({sum(degrees[name] for name in term.word) for term in terms})
    if len(term_degrees) > 1:
        logger.debug(f"{text.strip()} splits into parts of degrees {term_degrees}")
    degree = term_degrees[0] if term_degrees else 0
    return Relation(degree=degree, terms=terms, text=text.strip())


def verify_relations(presentation: RingPresentation, relations: list[str] | None = None) -> list[RelationVerdict]:
    """Функция проверки соотношений на классах представления.

    Неоднородное соотношение проверяется по однородным частям: оно выполнено, когда каждая часть равна нулю.
    Свидетель берётся из первой ненулевой части по возрастанию степени.

    Args:
        presentation: Представление с движком умножения и таблицей имён.
        relations: Тексты соотношений; по умолчанию соотношения самого представления.

    Returns:
        Вердикт по каждому соотношению со степенью и координатами значения.

    Raises:
        RelationSyntaxException: Соотношение не разбирается.
        UnknownGeneratorException: Имя вне таблицы.
    """
    texts = [relation.text for relation in presentation.relations] if relations is None else relations
    table = presentation.table()
    degrees = {name: element.degree for name, element in table.items()}
    verdicts = []
    for text in texts:
        relation = parse_relation(text, degrees, presentation.p)
        if presentation.engine is None:
            verdicts.append(RelationVerdict(text=relation.text, degree=relation.degree, passed=True, witness=()))
            continue
        engine = presentation.engine
        verdict = None
        for degree, terms in relation.parts(degrees).items():
            value = engine.ring.space(degree).zero()
            for term in terms:
                value = value + engine.evaluate(term.word, table).scale(term.coefficient)
            witness = tuple(int(c) for c in value.coordinates)
            if verdict is None or (verdict.passed and not value.is_zero()):
                verdict = RelationVerdict(text=relation.text, degree=degree, passed=value.is_zero(), witness=witness)
        logger.debug(f"{verdict.text}: {'holds' if verdict.passed else 'fails'} in degree {verdict.degree}")
        verdicts.append(verdict)
    return verdicts
