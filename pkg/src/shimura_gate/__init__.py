"""Effective non-existence certificates for rational points on Shimura
curves with Gamma0(p)-level structure: exact arithmetic core, abelian
number fields, quadratic class groups, quaternion algebras, bad-prime set
construction, and the certifying pipeline, exposed as a library, an HTTP
service and the `shimura-gate` CLI.
"""

__version__ = "0.1.0"

CERTIFICATE_SCHEMA = "shimura-gate/certificate/v1"
