"""
Plucker - Configuration Settings
"""
import os
from dotenv import load_dotenv

# Load .env first, then .env.local to override with local values
load_dotenv('.env')
load_dotenv('.env.local', override=True)


class Config:
    """Application configuration"""

    # Output
    VERBOSE = os.getenv('PLUCKER_VERBOSE', 'False').lower() == 'true'
    REPORT_FORMAT = os.getenv('PLUCKER_REPORT_FORMAT', 'jsonl')
    REPORT_FORMATS = ('jsonl', 'csv')
    OUTPUT_MODES = ('text', 'json')

    # Scans
    JOBS = int(os.getenv('PLUCKER_JOBS', 1))
    RECORD_LIMIT = int(os.getenv('PLUCKER_RECORD_LIMIT', 0))  # 0 = unlimited

    # Randomized commands never read entropy from the environment
    DEFAULT_SEED = 0

    # Reproduction bounds used by the verify suites
    CONJECTURE_MAX_LEAVES = 8
    FAMILY_K_MAX = 10
    PROP33_MAX_N = 10
    PROP35_MAX_N = 8
    ANTI_UNIMODAL_MAX_LEAVES = 6
    ANTI_UNIMODAL_MAX_VALUE = 4
    EMBEDDING_MAX_EDGES = 10
    EMBEDDING_TREES = 100
    EMBEDDING_SHUFFLES = 5
    TWO_BRANCH_MAX = 6
    GENERAL_TREE_SAMPLES = 20
    GENERAL_TREE_MAX_EDGES = 6
