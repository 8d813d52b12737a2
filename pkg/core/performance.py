"""Performance monitoring for engine operations"""

import logging
import time
from contextlib import contextmanager
from typing import Dict, Any, Optional
from datetime import datetime, timezone

from config.settings import settings

logger = logging.getLogger(__name__)


class PerformanceMonitor:
    """Monitor and track operation durations"""

    def __init__(self, slow_threshold: Optional[float] = None):
        self.operation_stats: Dict[str, Dict[str, Any]] = {}
        self.slow_threshold = slow_threshold if slow_threshold is not None else settings.SLOW_OPERATION_SECONDS

    def record_operation(self, operation: str, duration: float, failed: bool = False):
        """Record duration metrics for one operation call"""
        if operation not in self.operation_stats:
            self.operation_stats[operation] = {
                "count": 0,
                "total_duration": 0.0,
                "avg_duration": 0.0,
                "max_duration": 0.0,
                "min_duration": float('inf'),
                "error_count": 0
            }

        stats = self.operation_stats[operation]
        stats["count"] += 1
        stats["total_duration"] += duration
        stats["avg_duration"] = stats["total_duration"] / stats["count"]
        stats["max_duration"] = max(stats["max_duration"], duration)
        stats["min_duration"] = min(stats["min_duration"], duration)

        if failed:
            stats["error_count"] += 1

        if duration > self.slow_threshold:
            logger.warning(f"Slow operation: {operation} took {duration:.2f}s")

    def get_performance_summary(self) -> Dict[str, Any]:
        """Get current performance summary"""
        return {
            "operation_stats": self.operation_stats,
            "timestamp": datetime.now(timezone.utc).isoformat()
        }

    def reset_stats(self):
        """Reset all performance statistics"""
        self.operation_stats.clear()


@contextmanager
def track_operation(operation: str, monitor: Optional[PerformanceMonitor] = None):
    """Context manager recording the duration of an operation"""
    monitor = monitor or performance_monitor
    start_time = time.perf_counter()
    failed = False

    try:
        yield
    except Exception:
        failed = True
        raise
    finally:
        monitor.record_operation(operation, time.perf_counter() - start_time, failed=failed)


# Global monitor instance
performance_monitor = PerformanceMonitor()
