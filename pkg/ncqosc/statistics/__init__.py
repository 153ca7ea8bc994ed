from ncqosc.statistics.convergence import LinearFit, R2, linear_fit, convergence_order

__all__ = ['LinearFit', 'R2', 'linear_fit', 'convergence_order']
