"""
Merging overlapping generators without repeats
==============================================

Each element of the union is owned by the largest-index family that
contains it. Lower generators suppress what they do not own, and the
scheduler keeps enough slack that every emission is followed quickly by
another one or by termination.
"""

from planar_pmc.polydelay import UnionStats, union_generate

families = [["a", "b", "c"], ["b", "d"], ["c", "d", "e"]]
sets = [set(f) for f in families]
st = UnionStats()
out = list(union_generate(families, lambda s, i: s in sets[i], st, check_invariants=True))
print("emitted:", out)
print("owners: ", st.emitted_by)
print("sigma (suppressed per generator):", st.sigma)
print("epsilon (emitted elsewhere per generator):", st.epsilon)

# %%
# Events between emissions are bounded by N * (terminations + 1). Here an
# exhausted generator and a chain of suppressions put 6 events in one gap.
fams = [[0, 1], [0, 1], [], [1, 0]]
sets = [set(f) for f in fams]
st = UnionStats()
list(union_generate(fams, lambda s, i: s in sets[i], st))
print("events between emissions:", st.events_between)
print("terminations between:    ", st.terminations_between)
print("bound holds:", st.delay_bound_holds())
