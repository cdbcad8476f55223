# ALGCOEF Test Suite
