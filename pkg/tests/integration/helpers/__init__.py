from .suite_run import SANDBOX, SuiteRun
