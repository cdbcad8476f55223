# ALGCOEF Evaluation Tests
