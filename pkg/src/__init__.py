"""Coprime Toolkit - unit groups modulo m, Goldbach pairs and twin primes"""

__version__ = "1.0.0"
__author__ = "NamoVize"
