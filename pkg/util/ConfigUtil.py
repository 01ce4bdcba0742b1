import os
from typing import Any, Dict, Optional

import yaml

from util.Constant import Constant
from util.LogUtil import LogUtil

logger = LogUtil.get_logger(__name__)

DEFAULT_CHECK = {"seed": Constant.DEFAULT_SEED, "max_terms": 5, "samples": 10000}
DEFAULT_PHASE = {"arithmetic_tol": Constant.TOL, "check_tol": Constant.CHECK_TOL}
DEFAULT_ENUMERATE = {"max_tract_size": 3, "max_elements": 5, "max_rank": 3}
DEFAULT_BRUTE_FORCE = {"max_tract_size": 4, "max_elements": 6}


class ConfigUtil:
    def __init__(self):
        pass

    @staticmethod
    def _load_section(config_path: Optional[str], section: str) -> Dict[str, Any]:
        """从YAML配置文件中读取一个配置段，读取失败返回空字典"""
        config_path = config_path or Constant.CONFIG_PATH
        try:
            if os.path.exists(config_path):
                with open(config_path, 'r', encoding='utf-8') as file:
                    config = yaml.safe_load(file) or {}
                    value = config.get(section, {}) or {}
                    if not isinstance(value, dict):
                        logger.warning("配置段格式错误: %s", section)
                        return {}
                    return value
            else:
                logger.warning("配置文件不存在: %s", config_path)
                return {}
        except yaml.YAMLError as e:
            logger.warning("YAML格式错误: %s", e)
            return {}
        except OSError as e:
            logger.warning("配置文件读取失败: %s", e)
            return {}

    @staticmethod
    def _merge(defaults: Dict[str, Any], loaded: Dict[str, Any]) -> Dict[str, Any]:
        merged = dict(defaults)
        for key, value in loaded.items():
            if key in defaults and value is not None:
                merged[key] = type(defaults[key])(value)
        return merged

    @staticmethod
    def load_check_budget_from_config(config_path: Optional[str] = None) -> Dict[str, Any]:
        """加载校验预算：随机种子、穷举项数上限、采样次数"""
        return ConfigUtil._merge(DEFAULT_CHECK, ConfigUtil._load_section(config_path, 'check'))

    @staticmethod
    def load_phase_tol_from_config(config_path: Optional[str] = None) -> Dict[str, float]:
        """加载相位超域的算术容差与校验容差"""
        return ConfigUtil._merge(DEFAULT_PHASE, ConfigUtil._load_section(config_path, 'phase'))

    @staticmethod
    def load_enumerate_caps_from_config(config_path: Optional[str] = None) -> Dict[str, int]:
        return ConfigUtil._merge(DEFAULT_ENUMERATE, ConfigUtil._load_section(config_path, 'enumerate'))

    @staticmethod
    def load_brute_force_caps_from_config(config_path: Optional[str] = None) -> Dict[str, int]:
        return ConfigUtil._merge(DEFAULT_BRUTE_FORCE, ConfigUtil._load_section(config_path, 'brute_force'))

    @staticmethod
    def load_log_level_from_config(config_path: Optional[str] = None) -> str:
        """加载日志级别，默认 INFO"""
        level = ConfigUtil._load_section(config_path, 'log').get('level')
        return str(level).upper() if level else 'INFO'
