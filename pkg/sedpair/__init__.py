"""
SED-pair Toolkit

符号边控制图（SED-pair）的构造、验证、极值界计算与小规模精确搜索
"""

__version__ = "1.0.0"
