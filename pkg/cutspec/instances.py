"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import json
import logging
import os
from os import path

from .algebra import Algebra, AlgebraBase
from .exceptions import InstanceSpecError
from .typing import InstanceSpec, List, Optional

logger = logging.getLogger(__name__)

FIXTURES_ENV = "CUTSPEC_FIXTURES"
PACKAGE_FIXTURES = path.join(path.abspath(path.dirname(__file__)), "fixtures")


def fixture_dir(override: Optional[str] = None) -> str:
    """
    The fixture directory: `override`, else $CUTSPEC_FIXTURES, else the
    fixtures shipped with the package.
    """
    return override or os.environ.get(FIXTURES_ENV) or PACKAGE_FIXTURES


def fixture_names(directory: Optional[str] = None) -> List[str]:
    directory = fixture_dir(directory)
    return sorted(
        name[: -len(".json")]
        for name in os.listdir(directory)
        if name.endswith(".json")
    )


def read_instance_spec(
    source: str, directory: Optional[str] = None
) -> InstanceSpec:
    """
    Reads an instance specification from a JSON file path or a fixture
    name.

    Raises:
        FileNotFoundError: When `source` is neither a file nor a fixture.
        InstanceSpecError: When the file is not valid JSON.
    """
    if path.isfile(source):
        filename = source
    else:
        filename = path.join(fixture_dir(directory), f"{source}.json")
        if not path.isfile(filename):
            raise FileNotFoundError(
                f"'{source}' is neither a file nor a fixture name"
            )
    logger.debug("reading instance %s", filename)
    with open(filename, "r") as fp:
        try:
            instance_spec = json.load(fp)
        except json.JSONDecodeError as err:
            raise InstanceSpecError(
                f"{filename}: line {err.lineno} column {err.colno}: {err.msg}"
            ) from err
    if isinstance(instance_spec, dict) and "name" not in instance_spec:
        instance_spec["name"] = path.splitext(path.basename(filename))[0]
    return instance_spec


def load_instance(
    source: str, directory: Optional[str] = None
) -> AlgebraBase:
    return Algebra(read_instance_spec(source, directory))
