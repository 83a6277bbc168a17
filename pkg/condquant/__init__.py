"""condquant - conditional quantization for uniform distributions"""

__version__ = "0.1.0"
