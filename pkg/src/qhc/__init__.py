"""Normal forms, analytic equivalence and resolution chains of quasi-homogeneous plane curves."""
