import logging

from .types import NilpotencyVerdict, RingPresentation
from ...config import NILPOTENCY_EXPONENT_BOUND

logger = logging.getLogger(__name__)


def radical_report(presentation: RingPresentation, bound: int = NILPOTENCY_EXPONENT_BOUND) -> list[NilpotencyVerdict]:
    """Функция поиска нильпотентных образующих.

    Для каждой образующей g ищется наименьшее e ≥ 2 с gᵉ = 0, пока степень e·deg g остаётся в окне
    и e не превосходит bound.

    Args:
        presentation: Представление кольца.
        bound: Наибольший проверяемый показатель.

    Returns:
        Вердикт по каждой образующей; exponent равен None, если нулевая степень не найдена.
    """
    verdicts = []
    engine = presentation.engine
    for generator in presentation.generators:
        exponent, checked = None, 1
        power = generator.element
        for e in range(2, bound + 1):
            if engine is None or not engine.ring.computable(e * generator.degree):
                break
            power = engine.ring.multiply(power, generator.element)
            checked = e
            if power.is_zero():
                exponent = e
                break
        verdicts.append(
            NilpotencyVerdict(name=generator.name, degree=generator.degree, exponent=exponent, checked_up_to=checked)
        )
    logger.info(
        f"Nilpotent generators of {presentation.group}: "
        f"{[(verdict.name, verdict.exponent) for verdict in verdicts if verdict.exponent is not None]}"
    )
    return verdicts
