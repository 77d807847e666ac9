"""
Combinatorial services: graphs, families, algebras and series
"""
