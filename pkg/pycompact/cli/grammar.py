"""
Grammar
-------

The grammar of space definition files::

    # comments run to the end of the line
    finite binary { points = 0, 1; d(0, 1) = 1 }
    product cantor { cycle = binary; weights = geometric(1/2, 1); anchor = 0 }

Every declaration is ``kind name { key = value; ... }``.  Which kinds
and keys exist is decided by :mod:`pycompact.cli.loader`; the grammar
only knows the shape of a declaration.
"""

from lark import Lark
from lark.exceptions import UnexpectedCharacters, UnexpectedInput

from pycompact.core.logger import get_logger
from pycompact.exceptions import DefinitionSyntaxError

logger = get_logger("cli.grammar")

GRAMMAR = r"""
    start: declaration*

    declaration: NAME NAME "{" _settings? "}"
    _settings: setting (";" setting)* ";"?

    setting: NAME "=" value_list                   -> assign
            | "d" "(" _atom "," _atom ")" "=" _atom   -> distance

    value_list: _value ("," _value)*
    _value: _atom | call
    call: NAME "(" (_atom ("," _atom)*)? ")"
    _atom: RATIONAL | NAME

    RATIONAL: /-?\d+(\/\d+)?/
    NAME: /[A-Za-z_][A-Za-z0-9_\-]*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

PARSER = Lark(GRAMMAR, parser="lalr", propagate_positions=True)


def _describe(error):
    if isinstance(error, UnexpectedCharacters):
        return "unexpected character %r" % error.char

    token = getattr(error, "token", None)
    expected = sorted(getattr(error, "expected", None) or ())
    if token is None or token.type in ("$END", "<EOF>"):
        found = "end of input"
    else:
        found = repr(str(token))
    message = "unexpected %s" % found
    if expected:
        message += ", expected one of %s" % ", ".join(expected)
    return message


def parse_tree(text):
    """
    Parses ``text`` into a :class:`lark.Tree` whose children are
    ``declaration`` trees.

    :raises pycompact.exceptions.DefinitionSyntaxError:
        Raised with the line and column of the first syntax error.
    """
    try:
        tree = PARSER.parse(text)
    except UnexpectedInput as error:
        line = max(getattr(error, "line", 0) or 0, 0)
        column = max(getattr(error, "column", 0) or 0, 0)
        raise DefinitionSyntaxError(line, column, _describe(error))
    logger.debug("Parsed %d declaration(s)", len(tree.children))
    return tree
