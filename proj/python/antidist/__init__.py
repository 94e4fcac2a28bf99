# This source code is licensed under the Apache License, Version 2.0 found in
# the LICENSE file in the root directory of this source tree.

"""Antidistinguishability and quantum state exclusion toolkit."""

try:
    # Installed layout: the extension lives inside the package.
    from ._antidist import *  # noqa: F401,F403
except ImportError:
    # Build-tree layout: the extension sits next to the package on sys.path.
    from _antidist import *  # noqa: F401,F403
