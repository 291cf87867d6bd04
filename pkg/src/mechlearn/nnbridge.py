"""Small threshold networks viewed as learning machines.

A net is trained with logistic units and squared error, but the function it
*represents* is always read off in hard mode (unit fires iff its
pre-activation is >= 0) by sweeping every input pattern. That table is then
mapped to its canonical X-form, which gives a trajectory through X-form space
as training proceeds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .canon import canonical_min_dnf
from .errors import BadShape, WidthMismatch, WidthTooLargeForExtraction
from .patterns import Dataset, enumerate_patterns
from .xform import TruthTable, XForm, size, to_text

EXTRACTION_WIDTH_LIMIT = 4


class Activation(Enum):
    HARD = "hard"
    SMOOTH = "smooth"


@dataclass(frozen=True)
class Layer:
    weights: np.ndarray  # (units, inputs)
    bias: np.ndarray     # (units,)

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.float64, copy=True)
        b = np.array(self.bias, dtype=np.float64, copy=True)
        if w.ndim != 2 or b.shape != (w.shape[0],):
            raise BadShape(f"weights {w.shape} and bias {b.shape} do not match")
        w.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "bias", b)

    def __eq__(self, other):
        if not isinstance(other, Layer):
            return NotImplemented
        return (np.array_equal(self.weights, other.weights)
                and np.array_equal(self.bias, other.bias))

    __hash__ = None


@dataclass(frozen=True)
class ThresholdNet:
    layers: tuple[Layer, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise BadShape("a net needs at least one layer")
        for prev, nxt in zip(layers, layers[1:]):
            if nxt.weights.shape[1] != prev.weights.shape[0]:
                raise BadShape("adjacent layer dimensions disagree")
        if layers[-1].weights.shape[0] != 1:
            raise BadShape("final layer must have exactly one unit")
        object.__setattr__(self, "layers", layers)

    @property
    def input_width(self) -> int:
        return self.layers[0].weights.shape[1]

    @property
    def shape(self) -> list[int]:
        return [self.input_width] + [layer.weights.shape[0] for layer in self.layers]

    def preactivations(self, x) -> list[np.ndarray]:
        """Hard-mode pre-activations of every layer for one input."""
        a = np.asarray(x, dtype=np.float64)
        out = []
        for layer in self.layers:
            z = layer.weights @ a + layer.bias
            out.append(z)
            a = (z >= 0).astype(np.float64)
        return out

    def forward(self, x, mode: Activation = Activation.HARD) -> float:
        a = np.asarray(x, dtype=np.float64)
        for layer in self.layers:
            z = layer.weights @ a + layer.bias
            a = (z >= 0).astype(np.float64) if mode is Activation.HARD else _sigmoid(z)
        return float(a[0])

    def to_record(self) -> dict:
        return {
            "shape": self.shape,
            "layers": [{"weights": layer.weights.tolist(), "bias": layer.bias.tolist()}
                       for layer in self.layers],
        }

    @classmethod
    def from_record(cls, rec: dict) -> ThresholdNet:
        net = cls(tuple(Layer(np.array(l["weights"], dtype=np.float64), l["bias"])
                        for l in rec["layers"]))
        if "shape" in rec and list(rec["shape"]) != net.shape:
            raise BadShape(f"declared shape {rec['shape']} != actual {net.shape}")
        return net


def dumps_net(net: ThresholdNet) -> str:
    return json.dumps(net.to_record())


def loads_net(text: str) -> ThresholdNet:
    return ThresholdNet.from_record(json.loads(text))


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.5
    epochs: int = 1000
    seed: int = 0
    init_scale: float = 0.1

    def __post_init__(self):
        # learning_rate 0 is allowed: it freezes the net
        if self.learning_rate < 0:
            raise ValueError("learning_rate must be >= 0")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.init_scale <= 0:
            raise ValueError("init_scale must be positive")


def check_shape(shape) -> list[int]:
    shape = list(shape)
    if len(shape) < 2:
        raise BadShape(f"shape {shape} needs an input width and at least one layer")
    if any(not isinstance(n, (int, np.integer)) or n < 1 for n in shape):
        raise BadShape(f"shape {shape} has a non-positive width")
    if shape[-1] != 1:
        raise BadShape(f"shape {shape} must end with a single output unit")
    return [int(n) for n in shape]


def init_net(shape, cfg: TrainConfig) -> ThresholdNet:
    shape = check_shape(shape)
    rng = np.random.default_rng(cfg.seed)
    s = cfg.init_scale
    layers = []
    for n_in, n_out in zip(shape, shape[1:]):
        w = rng.uniform(-s, s, size=(n_out, n_in))
        b = rng.uniform(-s, s, size=n_out)
        layers.append(Layer(w, b))
    return ThresholdNet(tuple(layers))


def _inputs(width: int) -> np.ndarray:
    return np.array([p.bits for p in enumerate_patterns(width)], dtype=np.float64)


def extract_function(net: ThresholdNet) -> TruthTable:
    n = net.input_width
    if n > EXTRACTION_WIDTH_LIMIT:
        raise WidthTooLargeForExtraction(n, EXTRACTION_WIDTH_LIMIT)
    a = _inputs(n).T  # (n, 2**n), one column per pattern
    for layer in net.layers:
        z = layer.weights @ a + layer.bias[:, None]
        a = (z >= 0).astype(np.float64)
    return TruthTable(n, tuple(bool(v) for v in a[0]))


def net_to_xform(net: ThresholdNet) -> XForm:
    return canonical_min_dnf(extract_function(net))


def train_epoch(net: ThresholdNet, d: Dataset, cfg: TrainConfig) -> ThresholdNet:
    """One pass of per-sample gradient descent on ``0.5 * (y - label)**2``,
    visiting samples in lexicographic pattern order."""
    if d.width != net.input_width:
        raise WidthMismatch(net.input_width, d.width)
    ws = [layer.weights.copy() for layer in net.layers]
    bs = [layer.bias.copy() for layer in net.layers]
    lr = cfg.learning_rate
    for s in d.sorted_samples():
        acts = [np.array(s.pattern.bits, dtype=np.float64)]
        for w, b in zip(ws, bs):
            acts.append(_sigmoid(w @ acts[-1] + b))
        y = acts[-1]
        delta = (y - float(s.label)) * y * (1.0 - y)
        for i in range(len(ws) - 1, -1, -1):
            grad_w = np.outer(delta, acts[i])
            grad_b = delta
            if i > 0:
                a = acts[i]
                delta_prev = (ws[i].T @ delta) * a * (1.0 - a)
            ws[i] = ws[i] - lr * grad_w
            bs[i] = bs[i] - lr * grad_b
            if i > 0:
                delta = delta_prev
    return ThresholdNet(tuple(Layer(w, b) for w, b in zip(ws, bs)))


@dataclass(frozen=True)
class TrajectoryEntry:
    epoch: int
    table: TruthTable
    xform: XForm
    xform_size: int

    def to_record(self) -> dict:
        return {"epoch": self.epoch, "table": str(self.table),
                "xform": to_text(self.xform), "size": self.xform_size}


@dataclass(frozen=True)
class XFormTrajectory:
    entries: tuple[TrajectoryEntry, ...]
    net: ThresholdNet | None = None  # state after the last epoch

    def __len__(self):
        return len(self.entries)

    @property
    def final(self) -> TrajectoryEntry:
        return self.entries[-1]


def _entry(epoch: int, net: ThresholdNet) -> TrajectoryEntry:
    table = extract_function(net)
    xf = canonical_min_dnf(table)
    return TrajectoryEntry(epoch, table, xf, size(xf))


def trace_training(shape, d: Dataset, cfg: TrainConfig) -> XFormTrajectory:
    """Train from a fresh seeded net, recording every change of the
    hard-mode function (epoch 0 is the untrained net)."""
    shape = check_shape(shape)
    if shape[0] != d.width:
        raise WidthMismatch(shape[0], d.width)
    if shape[0] > EXTRACTION_WIDTH_LIMIT:
        raise WidthTooLargeForExtraction(shape[0], EXTRACTION_WIDTH_LIMIT)
    net = init_net(shape, cfg)
    entries = [_entry(0, net)]
    last_bits = entries[0].table.bits
    for epoch in range(1, cfg.epochs + 1):
        net = train_epoch(net, d, cfg)
        table = extract_function(net)
        if table.bits != last_bits:
            xf = canonical_min_dnf(table)
            entries.append(TrajectoryEntry(epoch, table, xf, size(xf)))
            last_bits = table.bits
    return XFormTrajectory(tuple(entries), net)


def scale_unit(net: ThresholdNet, layer: int, unit: int, factor: float) -> ThresholdNet:
    """Copy of ``net`` with one unit's weights and bias multiplied by ``factor``."""
    layers = list(net.layers)
    w = layers[layer].weights.copy()
    b = layers[layer].bias.copy()
    w[unit] *= factor
    b[unit] *= factor
    layers[layer] = Layer(w, b)
    return ThresholdNet(tuple(layers))


def has_threshold_tie(net: ThresholdNet) -> bool:
    """True if some unit sees a pre-activation of exactly 0 on some pattern."""
    for p in enumerate_patterns(net.input_width):
        if any((z == 0).any() for z in net.preactivations(p.bits)):
            return True
    return False
