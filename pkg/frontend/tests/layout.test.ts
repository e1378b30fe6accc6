import { describe, expect, it } from "vitest";
import { initialPositions, runLayout } from "../src/layout.js";

const EDGES = [
  { from: "a", to: "b" },
  { from: "b", to: "c" },
];

describe("force layout", () => {
  it("is deterministic for a fixed node order", () => {
    const first = initialPositions(["a", "b", "c"], 1000, 700);
    const second = initialPositions(["a", "b", "c"], 1000, 700);
    runLayout(first, EDGES, { width: 1000, height: 700, iterations: 100 });
    runLayout(second, EDGES, { width: 1000, height: 700, iterations: 100 });
    for (let i = 0; i < first.length; i++) {
      expect(first[i].x).toBe(second[i].x);
      expect(first[i].y).toBe(second[i].y);
    }
  });

  it("separates all nodes", () => {
    const nodes = initialPositions(["a", "b", "c", "d", "e"], 1000, 700);
    runLayout(nodes, EDGES, { width: 1000, height: 700, iterations: 200 });
    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const dx = nodes[i].x - nodes[j].x;
        const dy = nodes[i].y - nodes[j].y;
        expect(Math.sqrt(dx * dx + dy * dy)).toBeGreaterThan(10);
      }
    }
  });

  it("leaves pinned nodes where the user dragged them", () => {
    const nodes = initialPositions(["a", "b", "c"], 1000, 700);
    nodes[0].fixed = true;
    nodes[0].x = 42;
    nodes[0].y = 37;
    runLayout(nodes, EDGES, { width: 1000, height: 700, iterations: 100 });
    expect(nodes[0].x).toBe(42);
    expect(nodes[0].y).toBe(37);
  });

  it("keeps the layout near the requested canvas", () => {
    const nodes = initialPositions(["a", "b", "c", "d"], 1000, 700);
    runLayout(nodes, EDGES, { width: 1000, height: 700, iterations: 300 });
    for (const node of nodes) {
      expect(node.x).toBeGreaterThan(-500);
      expect(node.x).toBeLessThan(1500);
      expect(node.y).toBeGreaterThan(-500);
      expect(node.y).toBeLessThan(1200);
    }
  });
});
