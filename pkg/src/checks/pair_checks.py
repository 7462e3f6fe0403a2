"""
相容对与环面同构的验证套件
"""

from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from ..cartan import build_datum
from ..cluster import (
    alpha_plus_minus_failure,
    check_conjecture,
    check_transposed,
    commutation_invariance_failure,
    compatible_failure,
    gamma_forms_failure,
    lambda_Q_failure,
    pair_matrices,
    prefixes_failure,
    skew_symmetrizer_failure,
    torus_iso_failure,
)
from ..quivers import (
    DynkinQuiver,
    ar_quiver,
    is_adapted,
    longest_word,
    random_adapted_word,
    source_cycle_word,
)
from ..weyl import positive_roots
from .base_check import MEDIUM_TYPES, SMALL_TYPES, BaseCheck, VerifyCase

# 随机适配序列的最大长度
MAX_RANDOM_LENGTH = 60
RANDOM_NOTE = "random"


def commutation_readings(quiver: DynkinQuiver) -> List[Tuple[int, ...]]:
    """Γ_Q 的几种不同拓扑序给出的读法词，同属一个交换类"""
    graph = ar_quiver(quiver).graph.reverse(copy=True)
    words = [longest_word(quiver)]
    for key in (lambda v: v.i, lambda v: -v.i):
        order = nx.lexicographical_topological_sort(graph, key=key)
        word = tuple(v.i for v in order)
        if word not in words:
            words.append(word)
    return words


class CompatibleCheck(BaseCheck):
    """
    序列指标形式的相容性

    给出 --word 时只检验该序列；否则对每个箭图检验相容读法、源点循环序列
    和随机适配序列的全部前缀，以及 Γ 形式与交换类不变性；另对每个类型检验
    random_words 个按种子生成的随机适配序列。
    """

    suite = "compatible"
    description = "Lambda.B = -2d on J_e for adapted words and prefixes"

    def cases(self) -> List[VerifyCase]:
        if self.context.word is not None:
            if not self.context.type_name:
                raise ValueError("使用 --word 时必须给出 --type")
            xi = None
            if self.context.height:
                xi = self.context.quivers(build_datum(self.context.type_name))[0].xi
            return [VerifyCase(self.suite, self.context.type_name, xi=xi, word=self.context.word)]
        cases = []
        for name in self.context.types(MEDIUM_TYPES):
            datum = build_datum(name)
            for quiver in self.context.quivers(datum):
                cases.append(VerifyCase(self.suite, str(datum.ctype), xi=quiver.xi))
            cases.append(VerifyCase(self.suite, str(datum.ctype), note=RANDOM_NOTE))
        return cases

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        if case.word is not None:
            return self._run_word(case)
        if case.note == RANDOM_NOTE:
            return self._run_random(case)
        quiver = case.quiver
        datum = quiver.datum
        length = len(positive_roots(datum))
        rng = np.random.default_rng([self.context.seed, *[x % 1000 for x in quiver.xi]])
        words = [
            longest_word(quiver),
            source_cycle_word(quiver, 3 * length),
            random_adapted_word(quiver, min(MAX_RANDOM_LENGTH, 3 * length), rng),
        ]
        checked = 0
        for word in words:
            count, failure = prefixes_failure(datum, word)
            checked += count
            if failure:
                return checked, failure
            pm = pair_matrices(datum, word)
            checked += 1
            if not check_transposed(pm):
                return checked, f"w̃={list(word)}: B̃^T·Λ 不等于 2d 对角"
            failure = skew_symmetrizer_failure(pm)
            if failure:
                return checked, failure
        checked += 1
        failure = gamma_forms_failure(quiver, words[0])
        if failure:
            return checked, failure
        readings = commutation_readings(quiver)
        checked += len(readings)
        return checked, commutation_invariance_failure(datum, readings)

    def _run_random(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        """按种子生成 random_words 个随机适配序列，轮流使用该类型的各个箭图"""
        datum = case.datum
        quivers = self.context.quivers(datum)
        length = min(MAX_RANDOM_LENGTH, 2 * len(positive_roots(datum)))
        rng = np.random.default_rng([self.context.seed, datum.rank, ord(datum.ctype.family)])
        total = self.context.config.random_words
        for index in range(total):
            quiver = quivers[index % len(quivers)]
            word = random_adapted_word(quiver, int(rng.integers(1, length + 1)), rng)
            failure = compatible_failure(pair_matrices(datum, word))
            if failure:
                return index + 1, f"ξ={list(quiver.xi)}: {failure}"
        return total, None

    def _run_word(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        datum = case.datum
        word = case.word
        failure = check_conjecture(datum, word)
        if failure:
            return 1, failure
        pm = pair_matrices(datum, word)
        if not check_transposed(pm):
            return 2, f"w̃={list(word)}: B̃^T·Λ 不等于 2d 对角"
        failure = skew_symmetrizer_failure(pm)
        if failure:
            return 3, failure
        if case.xi is not None and is_adapted(case.quiver, word):
            return 4, gamma_forms_failure(case.quiver, word)
        return 3, None


class TorusIsoCheck(BaseCheck):
    """κ_Q 与 Λ^{[Q]} 一致，以及 α^± 的恒等式"""

    suite = "torus-iso"
    description = "interval-monomial pairing equals Lambda^[Q]"

    def cases(self) -> List[VerifyCase]:
        cases = []
        for name in self.context.types(SMALL_TYPES):
            datum = build_datum(name)
            for quiver in self.context.quivers(datum):
                cases.append(VerifyCase(self.suite, str(datum.ctype), xi=quiver.xi))
        return cases

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        quiver = case.quiver
        size = len(positive_roots(quiver.datum))
        failure = alpha_plus_minus_failure(quiver)
        if failure:
            return size, failure
        failure = lambda_Q_failure(quiver)
        if failure:
            return size + size ** 2, failure
        return size + 2 * size ** 2, torus_iso_failure(quiver)
