"""Identities used as fixed data: defining identities in degree 7 and
special identities in degree 10, in bracket notation.

Braces denote the tetrad, square brackets the anti-tetrad.  Letters a, b,
... are variables; nonlinear identities list their multidegree as letter
multiplicities.
"""

# multilinear identities generating all degree-7 identities of the tetrad
TETRAD_DEGREE7 = [
    '{{a,b,c,d},e,f,g} + {{a,b,f,e},d,c,g} + {{d,c,f,e},a,b,g} - {g,{b,a,d,c},f,e} - {g,{b,a,e,f},c,d} - {g,{c,d,e,f},b,a}',
    '{{a,b,c,d},e,f,g} - {{a,b,g,f},e,c,d} + {{a,b,d,c},e,g,f} - {{a,b,f,g},e,d,c} + {{a,e,c,d},b,g,f} - {{a,e,g,f},b,d,c} + {{a,e,d,c},b,f,g} - {{a,e,f,g},b,c,d} - {a,{b,c,d,e},f,g} + {a,{b,g,f,e},c,d} - {a,{b,d,c,e},g,f} + {a,{b,f,g,e},d,c}',
    '{{a,b,c,d},e,f,g} - {{a,f,g,c},b,e,d} + {{c,b,a,d},e,g,f} + {{f,b,c,e},g,a,d} - {{f,g,a,e},c,b,d} - {{f,g,a,d},b,c,e} - {{f,g,e,d},a,b,c} + {{g,b,a,e},f,c,d} - {{g,f,c,e},a,b,d} - {{g,f,c,d},b,a,e} - {{g,f,e,d},c,b,a} + {{e,a,b,d},c,f,g} + {{e,c,b,d},a,g,f} + {a,{b,c,g,f},e,d} + {c,{b,a,f,g},e,d} - {f,{b,c,e,g},a,d} - {g,{b,a,e,f},c,d} + {e,{a,g,f,c},b,d}',
]

# the same for the anti-tetrad
ANTI_DEGREE7 = [
    '[[a,b,c,d],e,f,g] - [[a,b,f,e],d,c,g] + [[d,c,f,e],a,b,g] + [g,[b,a,d,c],f,e] - [g,[b,a,e,f],c,d] + [g,[c,d,e,f],b,a]',
    '[[a,b,c,d],e,f,g] - [[a,f,g,c],b,e,d] + [[c,a,b,d],g,e,f] - [[c,b,a,f],g,e,d] - [[c,g,d,b],a,e,f] - [[c,g,e,f],a,b,d] + [[c,g,e,d],b,a,f] - [[b,a,c,f],e,d,g] - [[b,c,f,g],a,e,d] + [[b,e,d,g],a,c,f] - [[g,f,e,d],c,b,a] + [[g,d,e,f],c,a,b] - [[f,a,b,d],e,g,c] - [[f,c,e,d],g,a,b] - [a,[b,c,g,f],e,d] - [c,[a,b,d,g],e,f] + [c,[b,a,f,g],e,d] + [b,[a,c,g,d],e,f] - [b,[a,g,f,c],e,d] + [b,[a,g,d,e],c,f] + [d,[c,b,a,e],f,g]',
]

# nonlinear anti-tetrad identities whose linearizations give all of degree 7;
# multiplicities of a, b, c, ... follow each identity
ANTI_DEGREE7_NONLINEAR = [
    ('[[a,b,c,b],d,e,a] - [[a,b,c,b],e,d,a] - [[a,d,e,a],b,c,b] - [a,[b,c,b,d],e,a] + [a,[b,c,b,e],d,a]',
     (2, 2, 1, 1, 1)),
    ('[[a,c,a,b],b,d,e] - [[a,c,a,e],d,b,b] + [[b,b,d,e],a,c,a] + [b,[a,c,a,b],d,e] - [e,[a,c,a,d],b,b]',
     (2, 2, 1, 1, 1)),
    ('[[a,a,b,c],d,e,f] + [[a,a,e,f],d,c,b] - [[a,a,e,b],c,d,f] - [[a,d,c,b],a,e,f] - [[f,a,a,c],d,e,b] + [[f,d,c,b],e,a,a] + [[f,d,e,b],a,a,c] - [a,[a,b,c,d],e,f] - [f,[a,a,d,e],b,c] + [f,[a,a,c,d],e,b] + [f,[a,b,e,d],a,c] - [c,[a,d,e,b],a,f]',
     (2, 1, 1, 1, 1, 1)),
]

# degree-10 tetrad identities, alternated over the letters after 'a';
# (identity, multiplicities)
TETRAD_DEGREE10_SPECIAL = [
    ('{{{a,a,a,b},a,a,c},d,a,e} - {{{a,a,a,b},a,a,c},d,e,a} + {{{a,a,b,a},c,a,a},d,e,a} + {{{a,a,b,a},c,a,d},a,e,a} + {{{a,b,a,c},a,d,a},a,a,e} - {{{a,b,a,c},a,d,a},a,e,a} - {{a,{a,a,b,a},a,c},d,a,e} - {{a,{a,b,a,c},a,d},a,e,a} + {a,{{a,a,b,a},a,c,d},a,e} - {a,{{a,a,b,c},d,a,a},a,e} + {a,{{a,a,b,c},d,a,a},e,a} + {a,{{a,b,a,c},a,d,a},e,a}',
     (6, 1, 1, 1, 1)),
    ('{{{a,a,b,c},a,d,a},a,e,f} - {{{a,a,b,c},a,d,a},e,a,f} - {{{a,a,b,c},d,a,a},a,e,f} + {{{a,a,b,c},d,a,a},e,a,f} - {{{a,b,a,c},a,d,a},a,e,f} + {{{a,b,a,c},a,d,a},e,a,f} + {{{a,b,a,c},d,a,a},a,e,f} - {{{a,b,a,c},d,a,a},e,a,f} - {{{b,a,c,d},a,e,a},a,f,a} - {{{b,a,c,d},e,a,a},f,a,a} - {{{b,c,a,d},a,e,a},f,a,a} - {{{b,c,a,d},e,a,a},a,f,a}',
     (5, 1, 1, 1, 1, 1)),
    ('{{{a,a,a,b},c,d,a},e,a,f} - {{{a,a,a,b},c,d,a},e,f,a} + {{{a,b,a,c},d,e,a},a,a,f} - {{{a,b,a,c},d,e,a},a,f,a} - {{a,{a,a,b,c},a,d},e,f,a} - {{a,{a,a,b,c},d,a},e,a,f} + {{a,{a,a,b,c},d,a},e,f,a} + {{a,{a,b,a,c},a,d},e,f,a} - {{a,{b,a,c,d},e,a},a,a,f} - {{a,{b,c,a,d},e,a},a,f,a} + {a,{{a,a,b,c},a,d,e},f,a} - {a,{{a,b,a,c},a,d,e},f,a}',
     (5, 1, 1, 1, 1, 1)),
    ('{{{a,a,b,a},c,a,d},e,f,a} - {{{a,b,a,c},a,a,d},e,f,a} - {{{a,b,a,c},a,d,a},e,f,a} + {{{a,b,a,c},d,a,e},a,a,f} + {{{a,b,a,c},d,e,a},a,a,f} + {{a,{a,a,b,c},d,a},e,a,f} + {{a,{a,b,a,c},a,d},e,a,f} + {{a,{a,b,a,c},d,a},e,f,a} - {{a,{b,a,c,d},a,e},a,a,f} - {{a,{b,c,a,d},a,e},a,f,a} + {{b,{a,a,c,a},d,a},e,a,f} - {a,{{a,a,b,c},d,a,e},a,f} - {a,{{a,b,a,c},a,d,e},a,f} - {a,{{a,b,a,c},a,d,e},f,a} - {a,{{a,b,a,c},d,a,e},f,a}',
     (5, 1, 1, 1, 1, 1)),
    ('{{{b,a,c,d},a,a,e},a,f,g} - {{{b,a,c,d},a,a,e},f,a,g} + {{{b,a,c,d},e,a,f},a,a,g} - {{{b,c,a,d},a,a,e},a,f,g} + {{{b,c,a,d},a,a,e},f,a,g} + {{{b,c,a,d},a,e,f},a,a,g}',
     (4, 1, 1, 1, 1, 1, 1)),
]

# degree-10 anti-tetrad identities in two letters
ANTI_DEGREE10_SPECIAL = [
    '[[[a,a,b,a],a,b,a],a,a,a] - [a,[[a,a,a,b],a,b,a],a,a] - [a,[a,[a,a,b,a],a,a],b,a] + [a,[a,[a,a,b,a],b,a],a,a]',
    '[[[a,a,b,a],a,b,a],b,a,a] + [[a,[a,b,a,b],a,a],b,a,a] - [a,[[a,a,b,a],b,a,a],b,a] - [a,[[a,b,a,b],a,a,b],a,a] - [a,[[a,b,a,b],a,b,a],a,a] - [[a,a,b,a],[a,b,a,b],a,a]',
    '[[[a,a,b,a],b,b,a],a,a,a] - [a,[[a,a,a,b],a,b,b],a,a] + [a,[[a,a,b,a],a,b,b],a,a] - [a,[[a,a,b,a],b,b,a],a,a] + [a,[[a,a,b,b],a,a,b],a,a] - [a,[[a,a,b,b],a,b,a],a,a]',
    '[[[a,a,b,a],a,b,a],a,a,b] - [a,[[a,a,a,b],a,b,a],a,b] + [a,[[a,a,b,a],a,a,b],a,b] - [b,[[a,a,b,a],a,b,a],a,a] - [a,[a,[a,a,b,a],a,b],a,b] + [a,[a,[a,a,b,a],b,a],a,b]',
    '[[a,[a,a,b,a],a,a],b,b,a] - [[a,[a,a,b,a],a,b],a,a,b] + [[a,[a,a,b,a],a,b],b,a,a] + [[a,[a,a,b,b],a,a],b,a,a] - [a,[[a,a,b,a],a,b,b],a,a] - [a,[[a,a,b,b],a,b,a],a,a] + [[a,a,a,b],[a,a,b,a],a,b] - [[a,a,a,b],b,[a,a,b,a],a]',
    '[[[a,a,a,b],a,a,a],b,b,a] - [[[a,a,a,b],a,b,b],a,a,a] + [[a,[a,a,a,b],a,b],b,a,a] - [[a,[a,a,b,a],a,a],b,b,a] + [[a,[a,a,b,b],a,a],a,a,b] - [[a,[a,a,b,b],b,a],a,a,a] + [a,[[a,a,b,a],b,b,a],a,a] - [a,[[a,a,b,b],a,a,b],a,a] + [b,[a,[a,a,a,b],a,b],a,a] - [[a,a,a,b],[a,a,b,b],a,a]',
    '[[b,[a,a,a,b],a,b],a,a,b] + [[b,[a,a,b,a],a,b],a,a,b] - [b,[[a,a,a,b],b,a,a],a,b] - [b,[[a,a,b,a],a,a,b],a,b]',
    '[[[a,a,b,a],b,b,a],b,a,a] - [[a,[a,b,a,b],a,a],b,b,a] - [[a,[a,b,a,b],b,a],a,b,a] - [a,[[a,a,b,a],b,a,b],b,a] + [a,[[a,b,a,b],a,a,b],b,a]',
    '[[[a,a,b,a],b,b,a],b,a,a] - [a,[[a,a,b,a],b,b,a],b,a] - [a,[[a,b,a,b],a,b,b],a,a] + [a,[[b,a,b,b],a,a,b],a,a] - [a,[[b,a,b,b],a,b,a],a,a]',
    '[[[a,a,b,a],b,b,a],b,a,b] - [a,[[a,b,a,b],a,b,b],a,b] + [a,[[b,a,b,b],a,a,b],a,b] - [a,[[b,a,b,b],a,b,a],a,b] - [b,[[a,a,b,a],b,b,a],b,a]',
]
