import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from scripts.arithmetization import GoedelCode, encode, instance_at_code, liar
from scripts.satisfaction import Budget, NaturalsEvaluator, TruthValue3
from scripts.syntax import Formula, check_formula, format_formula
from scripts.utils import log_decorator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TarskiReport:
    candidate: str
    sigma: Formula
    sigma_code: GoedelCode
    sigma_verdict: TruthValue3
    instance_verdict: TruthValue3

    @property
    def disagreement(self) -> Optional[bool]:
        """True when both sides are determined and differ; None while either is unknown."""
        if not (self.sigma_verdict.is_determined and self.instance_verdict.is_determined):
            return None
        return self.sigma_verdict.is_true != self.instance_verdict.is_true

    @property
    def conclusion(self) -> str:
        if self.disagreement is None:
            reason = self.sigma_verdict.reason or self.instance_verdict.reason
            return f"unknown: {reason}"
        if not self.disagreement:
            return "agreement: the liar construction failed"
        return (f"disagreement: the liar sentence is {self.sigma_verdict} while the candidate "
                f"holds {self.instance_verdict} of its code, so the candidate violates the "
                f"negation clause at this sentence and does not define truth")

    def to_record(self) -> Dict[str, Any]:
        return {"candidate": self.candidate,
                "sigma": format_formula(self.sigma),
                "sigma_code": str(self.sigma_code),
                "sigma_verdict": str(self.sigma_verdict),
                "candidate_verdict": str(self.instance_verdict),
                "conclusion": self.conclusion}


@log_decorator
def tarski_demonstrate(phi: Formula, budget: Optional[Budget] = None,
                       evaluator: Optional[NaturalsEvaluator] = None) -> TarskiReport:
    """
    Build the liar sentence of a proposed truth definition phi(v0), evaluate it and
    phi at its code, and report how they disagree.
    """
    evaluator = evaluator or NaturalsEvaluator(budget)
    check_formula(phi, evaluator.signature)
    sigma = liar(phi)
    sigma_verdict = evaluator.evaluate(sigma)
    instance_verdict = evaluator.evaluate(instance_at_code(phi, sigma))
    report = TarskiReport(format_formula(phi), sigma, encode(sigma), sigma_verdict, instance_verdict)
    logger.info(f"liar sentence of {report.candidate}: {report.conclusion}")
    return report
