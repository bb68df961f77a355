"""Partitions, bijections, counting, series and identity verification.
"""
