#!/usr/bin/env python
# -*- encoding=utf8 -*-
