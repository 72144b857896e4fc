"""seqc test suite."""
