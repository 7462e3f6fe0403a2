# qcartan 配置文件
# 通过 load_config("config.py") 加载；命令行不读取本文件

# 并行线程数（环境变量 QCARTAN_THREADS 会覆盖此值）
QCARTAN_THREADS = 1

# 随机箭图的种子与数量
DEFAULT_SEED = 0
RANDOM_QUIVERS = 3

# compatible 套件每个类型检验的随机适配序列数
RANDOM_WORDS = 100

# 默认窗口为 ±WINDOW_FACTOR·h，默认级数阶数为 SERIES_FACTOR·h
WINDOW_FACTOR = 2
SERIES_FACTOR = 4

# 报告输出
OUTPUT_DIR = "reports"
SAVE_REPORTS = False
