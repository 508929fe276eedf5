# Utility modules for the partition playground: errors, logging helpers and reports.
