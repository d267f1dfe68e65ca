"""Dense linear-algebra kernels used by the solvers."""
