"""Keep a selection alive while the constraints move under it.

One session absorbs a size increase, a similarity squeeze, a relaxation,
and finally new graph material, without ever re-solving from scratch when
a cheaper repair exists. Every step lands in the session history.
"""

from msel import (
    ConstraintPair,
    SimGraph,
    apply_similarity_delta,
    apply_size_delta,
    augment_graph,
    init_session,
)

g = SimGraph(8, [
    # a tight triangle
    (0, 1, 0.9), (0, 2, 0.9), (1, 2, 0.9),
    # a looser five-clique
    *[(u, v, 0.3) for u in range(3, 8) for v in range(u + 1, 8)],
])

sess = init_session(g, ConstraintPair(s=0.05, p=2))
print("init:", sorted(sess.current.members), f"alpha={sess.current.alpha:.4f}")

apply_size_delta(sess, 3)  # p=5 now, the triangle alone is too small
print("p+=3:", sorted(sess.current.members), f"alpha={sess.current.alpha:.4f}")

apply_size_delta(sess, -3)  # answered straight from the profile
print("p-=3:", sorted(sess.current.members), f"alpha={sess.current.alpha:.4f}")

apply_similarity_delta(sess, 0.5)  # s=0.55 kills the five-clique edges
print("s+=0.5:", sorted(sess.current.members), f"alpha={sess.current.alpha:.4f}")

apply_similarity_delta(sess, -0.5)
print("s-=0.5:", sorted(sess.current.members), f"alpha={sess.current.alpha:.4f}")

# two new well-connected nodes arrive
extra = SimGraph(2, [(0, 1, 0.95)])
bridges = [(0, 0, 0.95), (1, 0, 0.95), (2, 1, 0.95), (0, 1, 0.95)]
augment_graph(sess, extra, bridges)
print("augment:", sorted(sess.current.members), f"alpha={sess.current.alpha:.4f}")

print()
print("history:")
for rec in sess.history:
    flag = "ok " if rec.feasible else "infeasible"
    print(f"  step {rec.step:>2}  {rec.event:<10} alpha={rec.alpha:.4f} "
          f"size={rec.size} {flag}")
print(f"total removals across all events: {sess.stats.removals}")
