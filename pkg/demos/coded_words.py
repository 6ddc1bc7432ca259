"""Coded words: tagging each factor with the substitution that hit it.

A coded word is a sequence of (tag, g) pairs where g is a variable word
and the tag names a substitution — or "id" for none.  Evaluating a coded
word applies each tag to its g and multiplies the results in the base
semigroup.  The words with no id tag form the nice subsemigroup C_*, and
replacing every id tag by a fixed substitution is a retraction onto it
that commutes with evaluation:

    evaluate(star(w)) == substitute(evaluate(w))

Well-formedness ties a coded word to a fixed base sequence s_bar: its
g-components must appear along s_bar at strictly increasing positions.
"""

from __future__ import annotations

from fplab.instances import make_bundle
from fplab.instances.carlson import well_formed

bundle = make_bundle("carlson_code")
print(f"base sequence s_bar = {bundle.s_bar}")

w = (("id", "ax"), ("sub_a", "xx"))
star = bundle.morphisms[0]           # star_sub_a
image = star.fn(w)
print(f"\ncoded word      {w}")
print(f"after {star.name}:  {image}")
print(f"evaluate(w)        = {bundle.evaluate(w)!r}")
print(f"evaluate(star(w))  = {bundle.evaluate(image)!r}")

sub_a = bundle.base_bundle.morphisms[0].fn
print(f"sub_a(evaluate(w)) = {sub_a(bundle.evaluate(w))!r}   (same word)")

c_star = bundle.subsemigroups[0]
print(f"\nw in C_*: {c_star.contains(w)}   "
      f"star(w) in C_*: {c_star.contains(image)}")

good = (("sub_a", "x"), ("id", "xa"))
bad = (("id", "xa"), ("id", "x"))
print(f"\ns_bar positions decide well-formedness:")
print(f"  {good} -> {well_formed(good, bundle.s_bar)}")
print(f"  {bad} -> {well_formed(bad, bundle.s_bar)} "
      f"('xa' sits after 'x' in s_bar, so this order cannot be matched)")
