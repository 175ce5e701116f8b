"""
Systems
Cross-cutting services shared by the mapping stages
"""
