"""Twin groups: word problem, subgroup presentations, and verification.

Modules:

* ``words``       words over involutive generators, reduction, normal form
* ``twin``        strand map, kernel membership, abelianization, searches
* ``schreier``    coset transversal, rewriting, presentation simplification
* ``puregens``    generating sets, rank bound, Betti numbers of the kernel
* ``freeaut``     the conjugation action on the rank-7 free kernel
* ``surface``     the 24-triangle surface realizing the rank-4 kernel
* ``virtualtwin`` virtual/welded extensions and bounded equality search
* ``suites``      the named verification suites behind ``verify``
* ``cli``         command-line entry point
"""

__version__ = "0.1.0"
