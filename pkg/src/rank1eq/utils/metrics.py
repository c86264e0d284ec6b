"""
Metrics collection and export utilities for the solver suite.
"""

import json
import logging
import threading
import time
from functools import wraps
from typing import Dict, List, Optional, Tuple


LabelKey = Tuple[Tuple[str, str], ...]


def _label_key(labels: Optional[Dict[str, str]]) -> LabelKey:
    return tuple(sorted((labels or {}).items()))


class Counter:
    """
    Counter metric that can only be incremented.
    """

    def __init__(self, name: str, description: str = "", labels: Dict[str, str] = None):
        self.name = name
        self.description = description
        self.labels = labels or {}
        self.value = 0
        self._lock = threading.Lock()

    def inc(self, amount: int = 1) -> None:
        """Increment the counter."""
        with self._lock:
            self.value += amount

    def get(self) -> int:
        with self._lock:
            return self.value

    def to_dict(self) -> Dict:
        return {
            'type': 'counter',
            'name': self.name,
            'description': self.description,
            'labels': self.labels,
            'value': self.get()
        }


class Histogram:
    """
    Histogram of observed values with cumulative buckets.
    """

    def __init__(self, name: str, description: str = "", buckets: List[float] = None,
                 labels: Dict[str, str] = None):
        self.name = name
        self.description = description
        self.labels = labels or {}
        self.buckets = sorted(buckets or [1, 2, 4, 8, 16, 32, 64, 128])
        self.bucket_counts = {bucket: 0 for bucket in self.buckets}
        self.count = 0
        self.sum = 0.0
        self.max = None
        self._lock = threading.Lock()

    def observe(self, value: float) -> None:
        with self._lock:
            self.count += 1
            self.sum += value
            self.max = value if self.max is None else max(self.max, value)
            for bucket in self.buckets:
                if value <= bucket:
                    self.bucket_counts[bucket] += 1

    def get_count(self) -> int:
        with self._lock:
            return self.count

    def get_max(self) -> Optional[float]:
        with self._lock:
            return self.max

    def to_dict(self) -> Dict:
        with self._lock:
            return {
                'type': 'histogram',
                'name': self.name,
                'description': self.description,
                'labels': self.labels,
                'count': self.count,
                'sum': self.sum,
                'max': self.max,
                'buckets': {str(b): c for b, c in self.bucket_counts.items()},
            }


class MetricsRegistry:
    """
    Thread-safe registry of counters and histograms, keyed by name and labels.
    """

    def __init__(self):
        self.counters: Dict[Tuple[str, LabelKey], Counter] = {}
        self.histograms: Dict[Tuple[str, LabelKey], Histogram] = {}
        self._lock = threading.Lock()
        self.logger = logging.getLogger(__name__)

    def counter(self, name: str, description: str = "", labels: Dict[str, str] = None) -> Counter:
        """Get or create a counter metric."""
        key = (name, _label_key(labels))
        with self._lock:
            if key not in self.counters:
                self.counters[key] = Counter(name, description, labels or {})
            return self.counters[key]

    def histogram(self, name: str, description: str = "", buckets: List[float] = None,
                  labels: Dict[str, str] = None) -> Histogram:
        """Get or create a histogram metric."""
        key = (name, _label_key(labels))
        with self._lock:
            if key not in self.histograms:
                self.histograms[key] = Histogram(name, description, buckets, labels or {})
            return self.histograms[key]

    def collect_all(self) -> List[Dict]:
        with self._lock:
            metrics = list(self.counters.values()) + list(self.histograms.values())
        return [metric.to_dict() for metric in metrics]

    def reset(self) -> None:
        with self._lock:
            self.counters.clear()
            self.histograms.clear()


class Timer:
    """
    Context manager observing elapsed wall time in seconds.
    """

    def __init__(self, metric: Histogram):
        self.metric = metric
        self.start_time = None
        self.elapsed = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.start_time is not None:
            self.elapsed = time.perf_counter() - self.start_time
            self.metric.observe(self.elapsed)


# Global metrics registry
metrics_registry = MetricsRegistry()

_SECONDS_BUCKETS = [0.01, 0.1, 0.5, 1.0, 5.0, 30.0, 300.0]


def record_lp_solve(status: str, pivots: int) -> None:
    """Record one simplex solve and its pivot count."""
    metrics_registry.counter(
        'rank1eq_lp_solves_total', 'LP solves by final status', {'status': status}
    ).inc()
    metrics_registry.histogram(
        'rank1eq_lp_pivots', 'Simplex pivots per solve', [1, 5, 10, 25, 50, 100, 500]
    ).observe(pivots)


def record_binsearch_iterations(iterations: int) -> None:
    metrics_registry.histogram(
        'rank1eq_binsearch_iterations', 'Loop iterations per binary search',
        [0, 1, 2, 4, 8, 16, 32, 64]
    ).observe(iterations)


def record_breakpoint() -> None:
    metrics_registry.counter('rank1eq_breakpoints_total', 'Breakpoints visited by walks').inc()


def record_subsets_emitted(count: int) -> None:
    metrics_registry.counter(
        'rank1eq_nash_subsets_total', 'Maximal Nash subsets emitted'
    ).inc(count)


def record_support_pairs(count: int) -> None:
    metrics_registry.counter(
        'rank1eq_oracle_support_pairs_total', 'Support pairs examined by the oracle'
    ).inc(count)


def time_function(metric_name: str, labels: Dict[str, str] = None):
    """Decorator to time function execution."""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            histogram = metrics_registry.histogram(
                metric_name, 'Wall time in seconds', _SECONDS_BUCKETS, labels
            )
            with Timer(histogram):
                return func(*args, **kwargs)
        return wrapper
    return decorator


class MetricsExporter:
    """
    Exports metrics as JSON or as aligned text lines.
    """

    def __init__(self, registry: MetricsRegistry):
        self.registry = registry

    def export_json(self) -> str:
        return json.dumps(self.registry.collect_all(), indent=2)

    def export_text(self) -> str:
        lines = []
        for metric in self.registry.collect_all():
            label_str = self._format_labels(metric['labels'])
            if metric['type'] == 'counter':
                lines.append(f"{metric['name']}{label_str} {metric['value']}")
            else:
                lines.append(
                    f"{metric['name']}{label_str} count={metric['count']} "
                    f"sum={metric['sum']} max={metric['max']}"
                )
        return "\n".join(lines)

    def _format_labels(self, labels: Dict[str, str]) -> str:
        if not labels:
            return ""
        inner = ",".join(f'{k}="{v}"' for k, v in sorted(labels.items()))
        return "{" + inner + "}"
