from . import claims, families, series
