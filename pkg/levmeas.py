#!/usr/bin/env python
from levmeas.__main__ import main

if __name__ == '__main__':
    main()
