"""Row-column determinants and quasideterminants over quaternion algebras H(a,b)."""

__version__ = "0.1.0"
