#!/usr/bin/env python
""" Run gcditer commands from a source checkout, e.g.
    ./runexperiment.py intgcd --a 2 --b 3 --k-max 10
"""
from gcditer.cli import main

if __name__ == '__main__':
    main()
