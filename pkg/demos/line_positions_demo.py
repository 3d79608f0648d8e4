"""Where the absorption lines sit and when they stop being separable.

Transition gaps come straight from the level patterns: one line at
4*alpha for the coupled pair, lines at 3*alpha and 6*alpha for the
separable pair.  With a narrow instrument every gap discriminates; widen
the linewidth past half of alpha and the 3 and 4 alpha lines blur
together, at which point the resolver refuses to issue a verdict.
"""

from spinpair import (
    LinewidthTooLarge,
    discriminating_energies,
    distinguish,
    lshv_pattern,
    qsm_pattern,
    transition_lines,
)

ALPHA_MEV = 0.05

q_lines = transition_lines(qsm_pattern(ALPHA_MEV))
s_lines = transition_lines(lshv_pattern(ALPHA_MEV))

print("coupled pattern lines:")
for ln in q_lines:
    print(f"  gap {ln.gap:.3f} meV  {ln.from_label} -> {ln.to_label}"
          f"  multiplicity {ln.multiplicity}  level pairs {ln.pairs}")
print("separable pattern lines:")
for ln in s_lines:
    print(f"  gap {ln.gap:.3f} meV  {ln.from_label} -> {ln.to_label}"
          f"  multiplicity {ln.multiplicity}  level pairs {ln.pairs}")
print()

for width in (0.001, 0.005, 0.02):
    marks = discriminating_energies(q_lines, s_lines, width)
    tags = ", ".join(f"{e:.2f}->{m}" for e, m in marks)
    print(f"linewidth {width:.3f} meV: discriminating energies {tags}")
print()

# the resolver bails out once the linewidth reaches half the coupling;
# by then the 3*alpha and 4*alpha lines (separation alpha) overlap
for width in (0.02, 0.025, 0.05):
    try:
        distinguish(ALPHA_MEV, beta=None, linewidth=width, quantum_limit=True)
    except LinewidthTooLarge as err:
        print(f"linewidth {width:.3f} meV: refused ({err})")
    else:
        print(f"linewidth {width:.3f} meV: report issued")
