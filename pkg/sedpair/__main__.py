"""
SED-pair Toolkit - 模块入口

支持 `python -m sedpair` 运行 CLI
"""
from sedpair.cli import main

if __name__ == '__main__':
    main()
