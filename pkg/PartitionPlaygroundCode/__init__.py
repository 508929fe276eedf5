"""
Partition Playground Package
Bijections on partitions with bounded repetitions and initial k-repetitions,
k-modular diagrams, strip decompositions and truncated q-series identity checks.
"""

from .config import get_config, update_config
from .combinatorics.bijection import forward, inverse
from .combinatorics.partition_core import Partition, format_partition, parse_partition

__version__ = "1.0.0"
__all__ = [
    "get_config",
    "update_config",
    "forward",
    "inverse",
    "Partition",
    "format_partition",
    "parse_partition",
]

# Package metadata
PACKAGE_INFO = {
    "name": "Partition Playground",
    "version": __version__,
    "description": "Partition bijections, k-modular diagrams and q-series identity checks",
    "license": "MIT"
}
