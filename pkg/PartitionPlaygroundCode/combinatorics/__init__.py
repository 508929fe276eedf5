# Partition combinatorics: core predicates, diagrams, strips, the bijection and q-series.
