"""Tour of the contextuality hierarchy on four small models.

Run:  python3 demos/01_contextual_menus.py
"""

from choicectx import (
    classify,
    double_headed_coin,
    format_event,
    global_sections_backtracking,
    hardy_table,
    pr_box,
    serialize_model,
    warp_contextual,
)


def show(name, model):
    result = classify(model)
    print(f"{name}: {result.kind} ({result.section_count} global sections)")
    if result.witness_event is not None:
        context, event = result.witness_event
        print(
            f"  witness: event {format_event(event)} of context "
            f"{format_event(context)} extends to no global section"
        )
    print()


print("A global section is one total 0/1 story that explains every context.")
print("Models split three ways: every event realized by some section, some")
print("event realized by none, or no section at all.")
print()

show("double-headed coin", double_headed_coin())
show("one-forbidden-corner table", hardy_table())
show("equal-vs-unequal box", pr_box())
show("conflicting two-menu rule", warp_contextual())

print("The coin model's sections, enumerated in lexicographic order:")
for section in global_sections_backtracking(double_headed_coin()):
    bits = ", ".join(f"{v}={bit}" for v, bit in section.bindings)
    print(f"  {bits}")
print()

print("Models serialize to a canonical JSON document:")
print(serialize_model(warp_contextual()))
