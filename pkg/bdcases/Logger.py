# ========================================================================
#
#  Copyright the BDCaseModels contributors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0.txt
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#
# ========================================================================

import logging
from typing import Optional


class Logger:
    """
    Routes the log records of the bdcases package to a Python Logger object.

    Every bdcases module logs to a child of the "bdcases" logger and never
    installs handlers itself. Inside a ``with Logger(...)`` block the
    records at or above the given level are passed to the wrapped logger
    through a handler, and on exit the previous level and handlers are
    restored.

    Enumeration sizes, validation outcomes and mu-counterpart masses are
    emitted at DEBUG; non-strict capacities and representation
    disagreements at WARNING.

    """

    def __init__(
        self,
        logger: logging.Logger = logging.getLogger("bdcases"),
        level: int = logging.WARNING,
        handler: Optional[logging.Handler] = None,
    ):
        """
        Initializes with the Logger object that receives the package's
        messages, the level to enable and the handler to emit them with
        (a stderr StreamHandler by default).
        """
        self._logger = logger
        self._level = level
        self._handler = handler

    @property
    def logger(self):
        return self._logger

    @logger.setter
    def logger(self, logger):
        self._logger = logger

    @property
    def level(self):
        return self._level

    def __enter__(self):
        if self._handler is None:
            self._handler = logging.StreamHandler()
            self._handler.setFormatter(
                logging.Formatter("%(levelname)s %(name)s: %(message)s")
            )
        self._old_level = self._logger.level
        self._logger.setLevel(self._level)
        self._logger.addHandler(self._handler)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._logger.removeHandler(self._handler)
        self._logger.setLevel(self._old_level)
        del self._old_level
