"""
Cube Genus Tests
"""
