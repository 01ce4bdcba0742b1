"""
JSON 文件读写
GP 文件:    {"tract": id, "rank": r, "ground_set": m, "values": {"1,2,3": 字面量, ...}}
圈集文件:   {"tract": id, "ground_set": m, "circuits": [[字面量, ...], ...]}
拟阵文件:   {"ground_set": m, "circuits": [[下标, ...], ...]} 或 {"builtin": "U2,4"}
下标从 1 开始；可选的 "labels" 给出元素名，此时 values 的键也可以用元素名
"""
import json
from typing import Any, Dict, List, Optional, Sequence, TypedDict, Union

from dao.jsonfile.ElementCodec import ElementCodec
from service.axioms.CircuitSet import CircuitSet
from service.gp.GPFunction import GPFunction
from service.matroid.ClassicalMatroid import ClassicalMatroid
from service.matroid.MatroidService import MatroidService
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from service.tract.TractRegistry import TractRegistry
from service.vector.Vector import GroundSet, Vector
from util.BitsetUtil import BitsetUtil
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError

logger = LogUtil.get_logger(__name__)


class GPFileType(TypedDict, total=False):
    tract: str
    rank: int
    ground_set: int
    labels: List[str]
    values: Dict[str, str]


class CircuitFileType(TypedDict, total=False):
    tract: str
    ground_set: int
    labels: List[str]
    circuits: List[List[str]]


class MatroidFileType(TypedDict, total=False):
    builtin: str
    ground_set: int
    labels: List[str]
    circuits: List[List[int]]


class MatroidJsonDAO:

    def __init__(self, tract_registry: Optional[TractRegistry] = None):
        self.tract_registry = tract_registry or TractRegistry()

    # ---------- 文件 ----------

    @staticmethod
    def read_json(path: str) -> Dict[str, Any]:
        """
        Raises:
            InvalidInputError: 文件不存在或 JSON 格式错误
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except OSError as e:
            raise InvalidInputError(f"无法读取文件 {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"JSON 格式错误 {path}: {e}") from e
        if not isinstance(data, dict):
            raise InvalidInputError(f"JSON 顶层必须是对象: {path}")
        logger.debug("读取 %s", path)
        return data

    @staticmethod
    def write_json(path: str, data: Dict[str, Any]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=2)

    # ---------- 公共字段 ----------

    @staticmethod
    def _require(data: Dict[str, Any], key: str) -> Any:
        if key not in data:
            raise InvalidInputError(f"缺少字段 {key}")
        return data[key]

    def _tract(self, data: Dict[str, Any], tol: Optional[float]) -> Tract:
        return self.tract_registry.get_tract(str(self._require(data, "tract")), tol)

    def _ground(self, data: Dict[str, Any]) -> GroundSet:
        size = self._require(data, "ground_set")
        if isinstance(size, bool) or not isinstance(size, int):
            raise InvalidInputError(f"ground_set 必须是整数: {size!r}")
        return GroundSet(size, tuple(str(x) for x in data.get("labels", ())))

    @staticmethod
    def _index(ground: GroundSet, token: Union[str, int]) -> int:
        # 元素名优先，默认元素名 "1".."m" 与 1 起下标一致
        text = str(token).strip()
        if text in ground.labels:
            return ground.labels.index(text)
        try:
            index = int(text) - 1
        except ValueError:
            raise InvalidInputError(f"未知的元素: {text}")
        if not 0 <= index < ground.size:
            raise InvalidInputError(f"元素下标越界: {text}")
        return index

    @staticmethod
    def _element(tract: Tract, literal: Any) -> TractElement:
        payload = ElementCodec.parse_payload(tract.tract_id, literal)
        return ZERO if payload is None else tract.element(payload)

    @staticmethod
    def _with_labels(result: Dict[str, Any], ground: GroundSet) -> Dict[str, Any]:
        if ground.labels != GroundSet(ground.size).labels:
            result["labels"] = list(ground.labels)
        return result

    # ---------- GP 函数 ----------

    def parse_gp(self, data: GPFileType, tol: Optional[float] = None) -> GPFunction:
        """
        省略的子集取 0；键里的元素顺序任意，取值按交错延拓换算到升序子集

        Raises:
            InvalidInputError: 键的长度与秩不符、有重复元素，或两个键是同一子集
        """
        tract, ground = self._tract(data, tol), self._ground(data)
        rank = self._require(data, "rank")
        values: Dict[tuple, TractElement] = {}
        for key, literal in dict(self._require(data, "values")).items():
            tokens = [t for t in str(key).split(",") if t.strip()]
            indices = [self._index(ground, t) for t in tokens]
            if len(indices) != rank or len(set(indices)) != rank:
                raise InvalidInputError(f"子集 {key} 与秩 {rank} 不符")
            value = self._element(tract, literal)
            if BitsetUtil.inversions(indices) % 2 == 1:
                value = tract.negate(value)
            subset = tuple(sorted(indices))
            if subset in values:
                raise InvalidInputError(f"子集 {key} 重复出现")
            values[subset] = value
        return GPFunction.of(tract, ground, rank, values)

    @staticmethod
    def dump_gp(phi: GPFunction) -> Dict[str, Any]:
        tract_id = phi.tract.tract_id
        result = {
            "tract": tract_id,
            "rank": phi.rank,
            "ground_set": phi.ground.size,
            "values": {",".join(str(i + 1) for i in subset): ElementCodec.format_element(tract_id, value)
                       for subset, value in phi.values},
        }
        return MatroidJsonDAO._with_labels(result, phi.ground)

    def load_gp(self, path: str, tol: Optional[float] = None) -> GPFunction:
        return self.parse_gp(self.read_json(path), tol)

    # ---------- 圈集 ----------

    def parse_circuits(self, data: CircuitFileType, tol: Optional[float] = None) -> CircuitSet:
        tract, ground = self._tract(data, tol), self._ground(data)
        vectors = []
        for row in self._require(data, "circuits"):
            if len(row) != ground.size:
                raise InvalidInputError(f"圈向量长度 {len(row)} 与基础集大小 {ground.size} 不符")
            vectors.append(Vector(tract, tuple(self._element(tract, x) for x in row)))
        return CircuitSet.of(tract, ground, vectors)

    @staticmethod
    def dump_circuits(circuits: CircuitSet) -> Dict[str, Any]:
        tract_id = circuits.tract.tract_id
        result = {
            "tract": tract_id,
            "ground_set": circuits.ground.size,
            "circuits": [ElementCodec.format_vector(tract_id, x) for x in circuits.reps],
        }
        return MatroidJsonDAO._with_labels(result, circuits.ground)

    def load_circuits(self, path: str, tol: Optional[float] = None) -> CircuitSet:
        return self.parse_circuits(self.read_json(path), tol)

    # ---------- 经典拟阵 ----------

    def parse_matroid(self, data: MatroidFileType) -> ClassicalMatroid:
        if "builtin" in data:
            return MatroidService.builtin(str(data["builtin"]))
        ground = self._ground(data)
        supports = [BitsetUtil.from_indices(self._index(ground, t) for t in c)
                    for c in self._require(data, "circuits")]
        return MatroidService.matroid_from_circuits(ground, supports)

    @staticmethod
    def dump_matroid(matroid: ClassicalMatroid) -> Dict[str, Any]:
        result = {
            "ground_set": matroid.ground.size,
            "circuits": [[i + 1 for i in BitsetUtil.to_indices(c)] for c in matroid.circuits],
        }
        return MatroidJsonDAO._with_labels(result, matroid.ground)

    def load_matroid(self, path: str) -> ClassicalMatroid:
        return self.parse_matroid(self.read_json(path))

    @staticmethod
    def parse_subset(ground: GroundSet, tokens: Sequence[Union[str, int]]) -> int:
        """--set 参数：逗号分隔的 1 起下标或元素名"""
        return BitsetUtil.from_indices(MatroidJsonDAO._index(ground, t) for t in tokens)
