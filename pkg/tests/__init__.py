"""
Tests package for StreamlitTurbo PRO
"""
