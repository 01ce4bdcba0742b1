import os


class Constant:
    ROOT_PATH: str = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    CONFIG_PATH: str = os.path.join(ROOT_PATH, "config.yaml")
    # 相位超域的算术容差
    TOL: float = 1e-9
    # 弱模式校验允许的零和残差
    CHECK_TOL: float = 1e-6
    DEFAULT_SEED: int = 0xB0B1
    MAX_GROUND_SET: int = 16

    def __init__(self):
        pass
