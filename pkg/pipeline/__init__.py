#!/usr/bin/env python3
"""
Pipeline Package
Orchestrates Hopf algebras → simples and braidings → Nichols algebras → liftings → report
"""

__version__ = "1.0.0"
