#!/usr/bin/env python
# -*- encoding=utf8 -*-

from setuptools import setup

setup()
