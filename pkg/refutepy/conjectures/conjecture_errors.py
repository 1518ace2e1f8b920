from dataclasses import dataclass
from typing import Collection


@dataclass
class UnknownConjectureError(KeyError):
    conjecture_id: str
    known_ids: Collection[str] = ()

    def __str__(self):
        msg = '\n'.join([
            f'Unknown conjecture "{self.conjecture_id}". ',
            f'Registered conjectures are: {", ".join(self.known_ids)}' if self.known_ids else ''
        ]).strip()
        return msg


@dataclass
class DuplicateConjectureError(ValueError):
    conjecture_id: str

    def __str__(self):
        return f'Conjecture "{self.conjecture_id}" is already registered. Pass `overwrite=True` to replace it'
