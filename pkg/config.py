# encoding:utf-8

import json
import os

from common.errors import ValidationError
from common.log import logger, set_debug

# 将所有可用的配置项写在字典里, 请使用小写字母
# 此处的配置值即默认值，config.json中未出现的配置项使用此处的值
available_setting = {
    # 输入文件，相对路径以配置文件所在目录为基准
    "history_path": "history.csv",  # 故障历史 time,part
    "rates_a_path": "rates_a.csv",  # 部件1的磨损速率矩阵
    "rates_b_path": "rates_b.csv",  # 部件2的磨损速率矩阵
    "policy_path": "",  # evaluate使用的策略网格，为空时现场求解
    # 更换极限与新件磨损
    "l1": 90,
    "l2": 90,
    "fresh_wear": 1,  # 新装部件的初始磨损量，每次更换后重置到该值
    # 成本与折扣
    "c1": 100,  # 部件1单独更换成本
    "c2": 120,  # 部件2单独更换成本
    "v": 220,  # 两个部件同时更换成本
    "alpha": 0.95,  # 折扣因子
    "tol": None,  # 值迭代收敛阈值，为空时取 1e-8*(1+最大成本)
    # 速率矩阵的分段
    "bin_width": 9,
    "bin_count1": 10,
    "bin_count2": 10,
    "rate_max": 20,
    # simulate
    "sim_days": 550,  # 模拟天数
    "sim_target_counts": None,  # 形如[28, 28]，设置后模拟到两个部件都达到该次数为止
    "sim_trajectory": False,  # 是否输出逐日轨迹
    # estimate (模拟退火)
    "sa_a0": 0.5,  # 初始温度下劣化移动的接受比例
    "sa_cool": 0.999,  # 几何降温系数
    "sa_iters_per_temp": 20,  # 每个温度的迭代次数
    "sa_total_iters": 30000,  # 总迭代次数
    "sa_init_temp_samples": 1000,  # 估计初始温度的采样数
    "sa_initial_temp": None,  # 固定初始温度，为空时采样估计
    "sa_runs": 10,  # 独立重启次数，种子依次为 seed, seed+1, ...
    "sa_grid": False,  # 是否运行 n x cool 敏感性网格
    "sa_grid_ns": [10, 15, 20],
    "sa_grid_cools": [0.98, 0.99, 0.999],
    # landscape
    "landscape_population": 1000,  # 振幅指标的随机种群大小
    "landscape_starts": 500,  # 爬山起点个数
    "landscape_walk_steps": 1000,  # 随机游走步数
    # solve
    "export_lp": False,  # solve时是否同时导出LP文件
    # evaluate
    "eval_horizon": 10000,  # 策略评估天数
    "eval_scenarios": [],  # 形如[{"name": "v350", "v": 350}]，为空时只评估基准成本
    # 运行
    "seed": 0,
    "workers": 4,  # 多种子运行的线程数
    "output_dir": "output",
    "debug": False,  # 是否开启debug模式，开启后会打印更多日志
}


class Config(dict):
    def __init__(self, d=None):
        super().__init__()
        for k, v in available_setting.items():
            super().__setitem__(k, v)
        if d is None:
            d = {}
        for k, v in d.items():
            self[k] = v

    def __getitem__(self, key):
        if key not in available_setting:
            raise ValidationError("key {} not in available_setting".format(key))
        return super().__getitem__(key)

    def __setitem__(self, key, value):
        if key not in available_setting:
            raise ValidationError("key {} not in available_setting".format(key))
        return super().__setitem__(key, value)

    def get(self, key, default=None):
        try:
            return self[key]
        except ValidationError:
            return default

    def set(self, key, value):
        self[key] = value


config = Config()
# 配置文件所在目录，输入文件的相对路径以此为基准
config_dir = "."


def parse_value(value: str):
    """环境变量和命令行覆盖值按JSON字面量解析，解析失败则作为字符串"""
    try:
        return json.loads(value)
    except ValueError:
        return value


def load_config(config_path: str = None) -> Config:
    global config, config_dir
    if config_path is None:
        config_path = "./config.json"
        if not os.path.exists(config_path):
            logger.info("[INIT] config.json not found, falling back to config-template.json")
            config_path = os.path.join(get_root(), "config-template.json")
    if not os.path.exists(config_path):
        raise ValidationError("config file {} does not exist".format(config_path))

    config_str = read_file(config_path)
    logger.debug("[INIT] config str: {}".format(config_str))
    try:
        # 将json字符串反序列化为dict类型
        config = Config(json.loads(config_str))
    except json.JSONDecodeError as e:
        raise ValidationError("{}:{}: invalid JSON: {}".format(config_path, e.lineno, e.msg))
    config_dir = os.path.dirname(os.path.abspath(config_path))

    # 环境变量覆盖配置文件，变量名不区分大小写
    for name, value in os.environ.items():
        name = name.lower()
        if name in available_setting:
            logger.info("[INIT] override config by environ args: {}={}".format(name, value))
            config[name] = parse_value(value)

    apply_debug()
    logger.info("[INIT] load config: {}".format(config_path))
    return config


def apply_debug():
    set_debug(bool(config.get("debug", False)))
    if config.get("debug", False):
        logger.debug("[INIT] set log level to DEBUG")


def get_root():
    return os.path.dirname(os.path.abspath(__file__))


def read_file(path):
    with open(path, mode="r", encoding="utf-8") as f:
        return f.read()


def conf():
    return config
