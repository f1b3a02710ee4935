# Copyright (C) 2026: The coverideal developers
#
# This file is part of coverideal.
#
# coverideal is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# coverideal is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with coverideal.  If not, see <http://www.gnu.org/licenses/>.


class GeneralError(ValueError):
    """Handles general errors. Subclasses the ValueError class."""

    def __init__(self, message, *args):

        self.message = message
        super(GeneralError, self).__init__(message, *args)


class GraphInputError(ValueError):
    """Handles errors in user supplied graph or ideal documents. Subclasses the ValueError class."""

    def __init__(self, message, lineno=None, *args):

        self.lineno = lineno
        if lineno is not None:
            message = 'line {}: {}'.format(lineno, message)
        self.message = message
        super(GraphInputError, self).__init__(message, *args)


class IdealError(GeneralError):
    """Handles violated preconditions of monomial ideal operations."""


class CoverError(GeneralError):
    """Handles violated preconditions of vertex cover operations."""


class ConsistencyError(GeneralError):
    """Raised when a result contradicts what the theory guarantees, i.e. a bug."""
