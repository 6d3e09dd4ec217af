"""Kneserlab - verification and generation toolkit for the Kneser-Lovasz theorem."""

__version__ = "0.1.0"
__author__ = "Kneserlab Team"
