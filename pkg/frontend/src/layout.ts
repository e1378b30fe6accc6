/** Small force-directed layout: spring edges, pairwise repulsion, weak gravity.
 *
 * Deterministic for a given node order (initial positions sit on a circle),
 * so tests can rely on stable output. Dragged nodes are pinned via `fixed`.
 */

export interface LayoutNode {
  id: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
  fixed: boolean;
}

export interface LayoutEdge {
  from: string;
  to: string;
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations?: number;
  springLength?: number;
}

export function initialPositions(ids: string[], width: number, height: number): LayoutNode[] {
  const radius = Math.min(width, height) * 0.35;
  return ids.map((id, index) => {
    const angle = (2 * Math.PI * index) / Math.max(ids.length, 1);
    // slight radius wobble so symmetric graphs do not lock into degenerate layouts
    const r = radius * (0.8 + 0.2 * ((index * 37) % 11) / 11);
    return {
      id,
      x: width / 2 + r * Math.cos(angle),
      y: height / 2 + r * Math.sin(angle),
      vx: 0,
      vy: 0,
      fixed: false,
    };
  });
}

export function runLayout(nodes: LayoutNode[], edges: LayoutEdge[], options: LayoutOptions): void {
  const iterations = options.iterations ?? 300;
  const spring = options.springLength ?? Math.min(options.width, options.height) / 5;
  const byId = new Map(nodes.map((node) => [node.id, node]));
  const repulsion = spring * spring;
  const damping = 0.85;

  for (let step = 0; step < iterations; step++) {
    const cooling = 1 - step / iterations;
    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const a = nodes[i];
        const b = nodes[j];
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let dist2 = dx * dx + dy * dy;
        if (dist2 < 1) {
          // nudge coincident nodes apart deterministically
          dx = (i - j) * 0.1 || 0.1;
          dy = 0.1;
          dist2 = dx * dx + dy * dy;
        }
        const force = (repulsion / dist2) * cooling;
        a.vx += dx * force * 0.01;
        a.vy += dy * force * 0.01;
        b.vx -= dx * force * 0.01;
        b.vy -= dy * force * 0.01;
      }
    }
    for (const edge of edges) {
      const a = byId.get(edge.from);
      const b = byId.get(edge.to);
      if (!a || !b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.sqrt(dx * dx + dy * dy) || 1;
      const force = ((dist - spring) / dist) * 0.02 * cooling;
      a.vx += dx * force;
      a.vy += dy * force;
      b.vx -= dx * force;
      b.vy -= dy * force;
    }
    const cx = options.width / 2;
    const cy = options.height / 2;
    for (const node of nodes) {
      node.vx += (cx - node.x) * 0.001;
      node.vy += (cy - node.y) * 0.001;
      if (!node.fixed) {
        node.x += node.vx;
        node.y += node.vy;
      }
      node.vx *= damping;
      node.vy *= damping;
    }
  }
}
