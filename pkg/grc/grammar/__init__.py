"""Grammar core: symbols, SLPs, level grammars and serialization"""
