from functools import lru_cache
from typing import Optional, Union

from .BaseBasis import BaseBasis
from .bases import BASES
from .exceptions import UnknownBasisError
from .qsym import BasisTag


@lru_cache(maxsize=None)
def _instance(name: str, nu: Optional[int]) -> BaseBasis:
    return BASES[name](nu) if name == "K" else BASES[name]()


def load_basis(tag: Union[BasisTag, str], nu: Optional[int] = None) -> BaseBasis:
    """
    Load the rule set of a basis. Instances are cached per (name, ν).
    For example:
    ```
    from qsymflow import load_basis
    D = load_basis("D")
    K3 = load_basis("K", nu=3)
    ```
    """
    if isinstance(tag, str):
        if tag not in BASES:
            raise UnknownBasisError(f"unknown basis {tag!r}, expected one of {sorted(BASES)}")
        tag = BasisTag(name=tag, nu=nu)
    return _instance(tag.name, tag.nu)
