"""
Pydantic schemas for elements and reports
"""
